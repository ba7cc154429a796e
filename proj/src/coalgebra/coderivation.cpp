#include "linf/coalgebra/coderivation.hpp"

#include <algorithm>

#include "linf/core/errors.hpp"
#include "linf/core/permutation.hpp"

namespace linf {

Coderivation::Coderivation(GradedSpace space, Variant variant, int degree, int truncation)
    : space_(std::move(space)), variant_(variant), degree_(degree), truncation_(truncation) {
  if (truncation < 0)
    throw ArgumentError("negative truncation arity");
}

void Coderivation::set_unit_image(Vector v) {
  if (variant_ == Variant::reduced && !v.is_zero())
    throw StructuralError("arity-0 coefficient on a reduced coderivation");
  for (const auto &[g, c] : v)
    if (space_.degree(g) != degree_)
      throw ArgumentError("unit image of degree " + std::to_string(space_.degree(g)) +
                          " in a degree " + std::to_string(degree_) + " coderivation");
  unit_image_ = std::move(v);
}

const SymMap *Coderivation::coefficient(int arity) const {
  auto it = taylor_.find(arity);
  return it == taylor_.end() ? nullptr : &it->second;
}

SymMap Coderivation::coefficient_or_zero(int arity) const {
  if (const auto *q = coefficient(arity))
    return *q;
  return SymMap(space_, arity, degree_);
}

void Coderivation::set_coefficient(SymMap q) {
  if (!(q.source() == space_) || !(q.target() == space_))
    throw StructuralError("Taylor coefficient lives on a different space");
  if (q.degree() != degree_)
    throw ArgumentError("Taylor coefficient of degree " + std::to_string(q.degree()) +
                        " in a degree " + std::to_string(degree_) + " coderivation");
  if (q.arity() > truncation_)
    throw ArgumentError("Taylor coefficient of arity " + std::to_string(q.arity()) +
                        " beyond truncation " + std::to_string(truncation_));
  const int n = q.arity();
  if (q.is_zero())
    taylor_.erase(n);
  else
    taylor_.insert_or_assign(n, std::move(q));
}

void Coderivation::add_to_coefficient(const SymMap &q) {
  SymMap sum = coefficient_or_zero(q.arity());
  sum += q;
  set_coefficient(std::move(sum));
}

Vector Coderivation::evaluate(const Word &word) const {
  if (word.empty())
    return unit_image_;
  const auto *q = coefficient(static_cast<int>(word.size()));
  return q ? q->evaluate(word) : Vector{};
}

int Coderivation::top_arity() const {
  if (!taylor_.empty())
    return taylor_.rbegin()->first;
  return unit_image_.is_zero() ? -1 : 0;
}

bool Coderivation::is_zero_up_to(int up_to) const {
  if (up_to >= 0 && !unit_image_.is_zero())
    return false;
  return std::none_of(taylor_.begin(), taylor_.end(),
                      [&](const auto &kv) { return kv.first <= up_to; });
}

Coderivation Coderivation::truncated(int n) const {
  Coderivation out(space_, variant_, degree_, std::min(truncation_, n));
  out.unit_image_ = unit_image_;
  for (const auto &[k, q] : taylor_)
    if (k <= out.truncation_)
      out.taylor_.emplace(k, q);
  return out;
}

Coderivation Coderivation::embedded() const {
  Coderivation out = *this;
  out.variant_ = Variant::nonreduced;
  return out;
}

Coderivation Coderivation::scaled(const Scalar &factor) const {
  Coderivation out(space_, variant_, degree_, truncation_);
  out.unit_image_ = unit_image_.scaled(factor);
  if (!factor.is_zero())
    for (const auto &[k, q] : taylor_)
      out.taylor_.emplace(k, q.scaled(factor));
  return out;
}

void Coderivation::check_compatible(const Coderivation &o) const {
  if (!(space_ == o.space_))
    throw StructuralError("coderivations on different carriers");
  if (variant_ != o.variant_)
    throw StructuralError("reduced/non-reduced coderivation mismatch");
  if (degree_ != o.degree_)
    throw StructuralError("adding coderivations of different degrees");
}

Coderivation &Coderivation::operator+=(const Coderivation &o) {
  check_compatible(o);
  truncation_ = std::min(truncation_, o.truncation_);
  unit_image_ += o.unit_image_;
  for (const auto &[k, q] : o.taylor_)
    if (k <= truncation_)
      add_to_coefficient(q);
  std::erase_if(taylor_, [&](const auto &kv) { return kv.first > truncation_; });
  return *this;
}

Coderivation &Coderivation::operator-=(const Coderivation &o) { return *this += o.scaled(Scalar(-1)); }

std::optional<int> first_difference(const Coderivation &a, const Coderivation &b, int up_to) {
  if (!(a.unit_image() == b.unit_image()))
    return 0;
  for (int n = 1; n <= up_to; ++n) {
    const auto *qa = a.coefficient(n);
    const auto *qb = b.coefficient(n);
    const bool za = qa == nullptr, zb = qb == nullptr;
    if (za && zb)
      continue;
    if (za != zb || !(qa->entries() == qb->entries()))
      return n;
  }
  return std::nullopt;
}

Coderivation linear_coderivation(const SymMap &map, Variant variant) {
  if (map.arity() != 1 || !(map.source() == map.target()))
    throw ArgumentError("linear coderivation needs an arity-1 endomorphism");
  Coderivation q(map.source(), variant, map.degree());
  q.set_coefficient(map);
  return q;
}

// ---------------------------------------------------------------- expand

namespace {

Word pick(const Word &w, const Permutation &sigma, std::size_t from, std::size_t to) {
  Word out;
  out.reserve(to - from);
  for (std::size_t k = from; k < to; ++k)
    out.push_back(w[static_cast<std::size_t>(sigma[k])]);
  return out;
}

std::vector<int> degrees_of(const GradedSpace &space, const Word &w) {
  std::vector<int> d;
  d.reserve(w.size());
  for (int g : w)
    d.push_back(space.degree(g));
  return d;
}

} // namespace

SymElement expand(const Coderivation &q, const Word &monomial) {
  const auto &space = q.space();
  auto canon = canonicalize(space, monomial);
  if (canon.sign == 0)
    return {};
  const Word &w = canon.word;
  const int n = static_cast<int>(w.size());
  if (n > q.truncation())
    throw PreconditionError("expand: monomial of length " + std::to_string(n) +
                            " exceeds truncation " + std::to_string(q.truncation()));
  if (q.variant() == Variant::reduced && !q.unit_image().is_zero())
    throw StructuralError("arity-0 coefficient on a reduced coderivation");
  const auto degs = degrees_of(space, w);

  SymElement out;
  const int i_min = q.variant() == Variant::nonreduced ? 0 : 1;
  for (int i = i_min; i <= n; ++i) {
    if (i > 0 && q.coefficient(i) == nullptr)
      continue;
    if (i == 0 && q.unit_image().is_zero())
      continue;
    for (const auto &sigma : unshuffles_cached(i, n - i)) {
      const int eps = koszul_sign(sigma, degs);
      Word sub = pick(w, sigma, 0, static_cast<std::size_t>(i));
      Word rest = pick(w, sigma, static_cast<std::size_t>(i), static_cast<std::size_t>(n));
      Vector value = q.evaluate(sub);
      for (const auto &[g, c] : value) {
        auto prod = multiply_words(space, Word{g}, rest);
        if (prod.sign != 0)
          out.add(prod.word, c * Scalar(eps * prod.sign * canon.sign));
      }
    }
  }
  return out;
}

SymElement expand(const Coderivation &q, const SymElement &element) {
  SymElement out;
  for (const auto &[w, c] : element)
    out.add(expand(q, w), c);
  return out;
}

Coderivation corestrict(const GradedSpace &space, Variant variant, int degree, int max_arity,
                        const std::function<SymElement(const Word &)> &action) {
  Coderivation out(space, variant, degree, max_arity);
  if (variant == Variant::nonreduced) {
    Vector unit;
    for (const auto &[w, c] : action(Word{}))
      if (w.size() == 1)
        unit.add(w[0], c);
    out.set_unit_image(std::move(unit));
  }
  for (int n = 1; n <= max_arity; ++n) {
    SymMap qn(space, n, degree);
    for (const auto &w : symmetric_monomials(space, n))
      for (const auto &[img, c] : action(w))
        if (img.size() == 1)
          qn.add(w, img[0], c);
    out.set_coefficient(std::move(qn));
  }
  return out;
}

// ------------------------------------------------------------ NR product

Coderivation nr_product(const Coderivation &q, const Coderivation &r, std::optional<int> limit) {
  if (!(q.space() == r.space()))
    throw StructuralError("nr_product: coderivations on different carriers");
  if (q.variant() != r.variant())
    throw StructuralError("nr_product: reduced/non-reduced mismatch");
  const auto &space = q.space();
  const bool nonreduced = q.variant() == Variant::nonreduced;
  const int i_min = nonreduced ? 0 : 1;

  // arity n needs r_n and q_{n + 1} when r has a unit image, q_n otherwise
  const bool unit_term = nonreduced && !r.unit_image().is_zero();
  int exact_to = std::min(truncation_add(q.truncation(), unit_term ? -1 : 0), r.truncation());
  if (limit)
    exact_to = std::min(exact_to, *limit);
  Coderivation out(space, q.variant(), q.degree() + r.degree(), exact_to);

  const int tq = q.taylor().empty() ? 0 : q.taylor().rbegin()->first;
  const int tr = r.top_arity();
  if (tq < 1 || tr < 0)
    return out;
  const int upper = std::min(exact_to, tq + tr - 1);

  if (nonreduced && upper >= 0 && !r.unit_image().is_zero()) {
    if (const auto *q1 = q.coefficient(1)) {
      Vector unit;
      for (const auto &[g, c] : r.unit_image())
        unit.add(q1->evaluate(Word{g}), c);
      out.set_unit_image(std::move(unit));
    }
  }

  for (int n = 1; n <= upper; ++n) {
    SymMap result(space, n, out.degree());
    bool any = false;
    for (int i = i_min; i <= n; ++i)
      if (q.coefficient(n - i + 1) && (i == 0 ? !r.unit_image().is_zero() : r.coefficient(i) != nullptr))
        any = true;
    if (!any)
      continue;
    for (const auto &w : symmetric_monomials(space, n)) {
      const auto degs = degrees_of(space, w);
      Vector acc;
      for (int i = i_min; i <= n; ++i) {
        const SymMap *qk = q.coefficient(n - i + 1);
        if (!qk)
          continue;
        if (i == 0 ? r.unit_image().is_zero() : r.coefficient(i) == nullptr)
          continue;
        for (const auto &sigma : unshuffles_cached(i, n - i)) {
          Word sub = pick(w, sigma, 0, static_cast<std::size_t>(i));
          Vector inner = r.evaluate(sub);
          if (inner.is_zero())
            continue;
          const int eps = koszul_sign(sigma, degs);
          Word rest = pick(w, sigma, static_cast<std::size_t>(i), static_cast<std::size_t>(n));
          for (const auto &[g, c] : inner) {
            Word arg{g};
            arg.insert(arg.end(), rest.begin(), rest.end());
            acc.add(qk->evaluate(arg), c * Scalar(eps));
          }
        }
      }
      if (!acc.is_zero())
        result.add(w, acc);
    }
    out.set_coefficient(std::move(result));
  }
  return out;
}

Coderivation nr_bracket(const Coderivation &q, const Coderivation &r, std::optional<int> limit) {
  Coderivation qr = nr_product(q, r, limit);
  Coderivation rq = nr_product(r, q, limit);
  const int sign = parity_sign(static_cast<long>(q.degree()) * r.degree());
  return qr - rq.scaled(Scalar(sign));
}

// --------------------------------------------------------- σ_v and ev_1

Coderivation sigma(const GradedSpace &space, const Vector &v, std::optional<int> degree) {
  auto d = homogeneous_degree(space, v);
  if (!v.is_zero() && !d)
    throw ArgumentError("sigma: vector is not homogeneous");
  if (!d && !degree)
    throw ArgumentError("sigma: degree required for the zero vector");
  if (d && degree && *d != *degree)
    throw ArgumentError("sigma: vector degree does not match the requested degree");
  Coderivation s(space, Variant::nonreduced, d ? *d : *degree);
  s.set_unit_image(v);
  return s;
}

Vector ev1(const Coderivation &q) {
  if (q.variant() != Variant::nonreduced)
    throw StructuralError("ev1 is defined on non-reduced coderivations only");
  return q.unit_image();
}

Coderivation bracket_with_sigma(const Coderivation &q, const Vector &v) {
  const Coderivation qn = q.variant() == Variant::nonreduced ? q : q.embedded();
  auto d = homogeneous_degree(q.space(), v);
  const Coderivation s = sigma(q.space(), v, d ? *d : 0);
  Coderivation left = nr_product(s, qn);
  if (!left.is_zero_up_to(left.truncation() >= kExact ? qn.top_arity() + 1 : left.truncation()))
    throw InternalConsistencyError("σ_v • Q does not vanish");
  return nr_bracket(qn, s);
}

} // namespace linf

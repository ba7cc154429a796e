#include "linf/linfty/ce.hpp"

#include <algorithm>

#include "linf/core/errors.hpp"
#include "linf/core/permutation.hpp"
#include "linf/linfty/linfty.hpp"

namespace linf {

int degree_of(const GradedSpace &space, const ElementaryCoderivation &e) {
  return space.degree(e.output) - word_degree(space, e.inputs);
}

std::map<int, std::vector<ElementaryCoderivation>> elementary_basis(const GradedSpace &space,
                                                                    int min_arity, int max_arity) {
  std::map<int, std::vector<ElementaryCoderivation>> out;
  for (int n = min_arity; n <= max_arity; ++n)
    for (const auto &m : symmetric_monomials(space, n))
      for (int g = 0; g < static_cast<int>(space.dim()); ++g) {
        ElementaryCoderivation e{m, g};
        out[degree_of(space, e)].push_back(std::move(e));
      }
  return out;
}

Coderivation as_coderivation(const GradedSpace &space, const ElementaryCoderivation &e, Variant variant) {
  Coderivation c(space, variant, degree_of(space, e));
  if (e.arity() == 0) {
    c.set_unit_image(Vector(e.output, Scalar(1)));
  } else {
    SymMap m(space, e.arity(), c.degree());
    m.add(e.inputs, e.output, Scalar(1));
    c.set_coefficient(std::move(m));
  }
  return c;
}

namespace {

long binomial(int n, int k) {
  long b = 1;
  for (int i = 1; i <= k; ++i)
    b = b * (n - k + i) / i;
  return b;
}

// Number of ways to pick the multiset m out of the multiset w.
long embeddings(const Word &w, const Word &m) {
  long total = 1;
  std::size_t i = 0;
  while (i < m.size()) {
    const int g = m[i];
    const auto in_m = std::count(m.begin(), m.end(), g);
    const auto in_w = std::count(w.begin(), w.end(), g);
    total *= binomial(static_cast<int>(in_w), static_cast<int>(in_m));
    i += static_cast<std::size_t>(in_m);
  }
  return total;
}

} // namespace

ElementaryBracket::ElementaryBracket(const Coderivation &q, int max_arity)
    : q_(q), max_arity_(max_arity) {
  if (q.variant() != Variant::reduced)
    throw ArgumentError("ElementaryBracket expects a reduced structure");
  for (int n = 0; n <= max_arity; ++n)
    monomials_.push_back(symmetric_monomials(q.space(), n));
  for (int n = 1; n <= max_arity; ++n)
    for (const auto &w : monomials_[static_cast<std::size_t>(n)])
      for (const auto &[m, c] : expand(q_, w))
        occurrences_[m].emplace_back(w, c);
}

std::map<std::pair<Word, int>, Scalar> ElementaryBracket::operator()(const ElementaryCoderivation &e) const {
  const GradedSpace &space = q_.space();
  std::map<std::pair<Word, int>, Scalar> out;
  auto add = [&](const Word &w, int g, const Scalar &c) {
    if (c.is_zero())
      return;
    auto [it, inserted] = out.try_emplace({w, g}, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero())
        out.erase(it);
    }
  };

  // Q•E: w = m ⊙ u contributes s0 · #embeddings · q(o ⊙ u)
  const int a = e.arity();
  for (int len = 0; a + len <= max_arity_; ++len) {
    if (!q_.coefficient(len + 1))
      continue;
    for (const auto &u : monomials_[static_cast<std::size_t>(len)]) {
      Word joined = e.inputs;
      joined.insert(joined.end(), u.begin(), u.end());
      auto canon = canonicalize(space, joined);
      if (canon.sign == 0)
        continue;
      Word arg{e.output};
      arg.insert(arg.end(), u.begin(), u.end());
      Vector value = q_.evaluate(arg);
      if (value.is_zero())
        continue;
      const Scalar factor(canon.sign * embeddings(canon.word, e.inputs));
      for (const auto &[g, c] : value)
        add(canon.word, g, c * factor);
    }
  }

  // E•Q: coefficient of m in expand(Q, w), times the output
  auto it = occurrences_.find(e.inputs);
  if (it != occurrences_.end()) {
    const int sign = -parity_sign(degree_of(space, e)); // -(-1)^{|Q||E|}
    for (const auto &[w, c] : it->second)
      add(w, e.output, c * Scalar(sign));
  }
  return out;
}

CeComplex ce_complex(const Coderivation &q, Variant variant, int max_arity) {
  if (q.variant() != Variant::reduced || q.degree() != 1)
    throw ArgumentError("ce_complex expects a reduced degree-1 structure");
  if (max_arity < 1)
    throw ArgumentError("ce_complex: truncation arity must be positive");
  const int needed = variant == Variant::nonreduced ? max_arity + 1 : max_arity;
  if (q.truncation() < needed)
    throw PreconditionError("ce_complex: structure known up to arity " + std::to_string(q.truncation()) +
                            ", need " + std::to_string(needed));
  require_linfty(q, needed, "ce_complex");

  const GradedSpace &space = q.space();
  CeComplex out;
  out.variant = variant;
  out.max_arity = max_arity;
  out.basis = elementary_basis(space, variant == Variant::nonreduced ? 0 : 1, max_arity);

  std::map<ElementaryCoderivation, int> index;
  for (const auto &[k, list] : out.basis) {
    out.complex.set_dimension(k, static_cast<int>(list.size()));
    for (std::size_t j = 0; j < list.size(); ++j)
      index.emplace(list[j], static_cast<int>(j));
  }

  ElementaryBracket bracket(q, max_arity);
  for (const auto &[k, list] : out.basis) {
    std::vector<SparseVec> cols;
    cols.reserve(list.size());
    for (const auto &e : list) {
      SparseVec col;
      for (const auto &[key, c] : bracket(e)) {
        auto pos = index.find(ElementaryCoderivation{key.first, key.second});
        if (pos == index.end())
          throw InternalConsistencyError("CE differential leaves the truncated basis");
        col.emplace(pos->second, c);
      }
      cols.push_back(std::move(col));
    }
    out.complex.set_differential(k, std::move(cols));
  }
  if (auto k = out.complex.d_squared_violation())
    throw InternalConsistencyError("CE differential does not square to zero in degree " + std::to_string(*k));
  return out;
}

bool HInjectivityReport::injective() const { return total_kernel() == 0; }

int HInjectivityReport::total_kernel() const {
  int total = 0;
  for (const auto &d : degrees)
    total += d.kernel;
  return total;
}

HInjectivityReport h_injectivity(const Coderivation &q, int max_arity) {
  CeComplex red = ce_complex(q, Variant::reduced, max_arity);
  CeComplex nr = ce_complex(q, Variant::nonreduced, max_arity);
  HInjectivityReport out;
  out.max_arity = max_arity;
  for (const auto &[k, list] : red.basis) {
    HInjectivityDegree d;
    d.degree = k;
    d.reduced_cohomology = red.complex.cohomology_dimension(k);
    d.nonreduced_cohomology = nr.complex.cohomology_dimension(k);

    // ev1 ∘ d_nr out of degree k - 1: keep only unit components
    const auto &target = nr.basis[k];
    std::vector<SparseVec> unit_parts;
    for (const auto &col : nr.complex.differential(k - 1)) {
      SparseVec part;
      for (const auto &[i, c] : col)
        if (target[static_cast<std::size_t>(i)].arity() == 0)
          part.emplace(i, c);
      unit_parts.push_back(std::move(part));
    }
    const long kernel = static_cast<long>(nr.complex.rank(k - 1)) - static_cast<long>(rank_of(unit_parts)) -
                        static_cast<long>(red.complex.rank(k - 1));
    if (kernel < 0)
      throw InternalConsistencyError("negative kernel dimension for H(i)");
    d.kernel = static_cast<int>(kernel);
    out.degrees.push_back(d);
  }
  return out;
}

} // namespace linf

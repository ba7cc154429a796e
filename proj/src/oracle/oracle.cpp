#include "linf/oracle/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "linf/core/errors.hpp"
#include "linf/core/permutation.hpp"

namespace linf::oracle {

int koszul_sign_bubble(std::span<const int> perm, std::span<const int> degrees) {
  if (perm.size() != degrees.size())
    throw ArgumentError("koszul_sign_bubble: length mismatch");
  // Sort the permuted sequence back into the original order; each adjacent
  // swap of two odd entries flips the sign.
  std::vector<int> p(perm.begin(), perm.end());
  int sign = 1;
  for (std::size_t pass = 0; pass < p.size(); ++pass)
    for (std::size_t k = 0; k + 1 < p.size(); ++k)
      if (p[k] > p[k + 1]) {
        if (degrees[static_cast<std::size_t>(p[k])] % 2 != 0 &&
            degrees[static_cast<std::size_t>(p[k + 1])] % 2 != 0)
          sign = -sign;
        std::swap(p[k], p[k + 1]);
      }
  return sign;
}

namespace {

Scalar factorial(int n) {
  Scalar f(1);
  for (int k = 2; k <= n; ++k)
    f *= Scalar(k);
  return f;
}

std::vector<int> degrees_of(const GradedSpace &space, const Word &w) {
  std::vector<int> d;
  for (int g : w)
    d.push_back(space.degree(g));
  return d;
}

Vector bracket_of(const TensorMap &b, const Vector &x, const Vector &y) {
  Vector out;
  for (const auto &[i, a] : x)
    for (const auto &[j, c] : y)
      out.add(b.evaluate(Word{i, j}), a * c);
  return out;
}

Vector apply_d(const TensorMap &d, const Vector &x) {
  Vector out;
  for (const auto &[i, a] : x)
    out.add(d.evaluate(Word{i}), a);
  return out;
}

Vector basis(int i) { return Vector(i, Scalar(1)); }

} // namespace

SymElement expand_all_permutations(const Coderivation &q, const Word &monomial) {
  const GradedSpace &space = q.space();
  const int n = static_cast<int>(monomial.size());
  const auto degs = degrees_of(space, monomial);
  SymElement out;
  const int i_min = q.variant() == Variant::nonreduced ? 0 : 1;
  for (int i = i_min; i <= n; ++i) {
    const Scalar weight = Scalar(1) / (factorial(i) * factorial(n - i));
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      Word sub, rest;
      for (int k = 0; k < n; ++k)
        (k < i ? sub : rest).push_back(monomial[static_cast<std::size_t>(sigma[static_cast<std::size_t>(k)])]);
      Vector value = q.evaluate(sub);
      if (value.is_zero())
        continue;
      const int eps = koszul_sign_bubble(sigma, degs);
      for (const auto &[g, c] : value) {
        Word term{g};
        term.insert(term.end(), rest.begin(), rest.end());
        auto canon = canonicalize(space, term);
        if (canon.sign != 0)
          out.add(canon.word, c * weight * Scalar(eps * canon.sign));
      }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
  return out;
}

Coderivation nr_product_by_composition(const Coderivation &q, const Coderivation &r, int max_arity) {
  return corestrict(q.space(), q.variant(), q.degree() + r.degree(), max_arity, [&](const Word &w) {
    SymElement out;
    for (const auto &[u, c] : expand_all_permutations(r, w))
      out.add(expand_all_permutations(q, u), c);
    return out;
  });
}

SymElement morphism_all_permutations(const CoalgebraMorphism &f, const Word &monomial) {
  const int n = static_cast<int>(monomial.size());
  if (n == 0)
    return SymElement(Word{}, Scalar(1));
  const auto degs = degrees_of(f.source(), monomial);
  SymElement out;

  // compositions (i_1, ..., i_k) of n
  std::vector<std::vector<int>> compositions{{}};
  std::vector<std::vector<int>> done;
  while (!compositions.empty()) {
    auto c = compositions.back();
    compositions.pop_back();
    const int used = std::accumulate(c.begin(), c.end(), 0);
    if (used == n) {
      done.push_back(c);
      continue;
    }
    for (int part = 1; used + part <= n; ++part) {
      auto next = c;
      next.push_back(part);
      compositions.push_back(std::move(next));
    }
  }

  for (const auto &comp : done) {
    Scalar weight = Scalar(1) / factorial(static_cast<int>(comp.size()));
    bool vanishes = false;
    for (int part : comp) {
      weight /= factorial(part);
      if (!f.coefficient(part))
        vanishes = true;
    }
    if (vanishes)
      continue;
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      SymElement product(Word{}, weight * Scalar(koszul_sign_bubble(sigma, degs)));
      std::size_t pos = 0;
      for (int part : comp) {
        Word sub;
        for (int k = 0; k < part; ++k)
          sub.push_back(monomial[static_cast<std::size_t>(sigma[pos++])]);
        Vector value = f.coefficient(part)->evaluate(sub);
        SymElement next;
        for (const auto &[u, c] : product)
          for (const auto &[t, d] : value) {
            Word joined = u;
            joined.push_back(t);
            auto canon = canonicalize(f.target(), joined);
            if (canon.sign != 0)
              next.add(canon.word, c * d * Scalar(canon.sign));
          }
        product = std::move(next);
      }
      out += product;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
  return out;
}

std::optional<Word> violation_antisymmetry(const DglaData &data) {
  const auto &s = data.space;
  for (int x = 0; x < static_cast<int>(s.dim()); ++x)
    for (int y = 0; y < static_cast<int>(s.dim()); ++y) {
      Vector lhs = data.bracket.evaluate(Word{x, y});
      Vector rhs = data.bracket.evaluate(Word{y, x}).scaled(
          Scalar(-parity_sign(static_cast<long>(s.degree(x)) * s.degree(y))));
      if (!(lhs == rhs))
        return Word{x, y};
    }
  return std::nullopt;
}

std::optional<Word> violation_d_squared(const DglaData &data) {
  for (int x = 0; x < static_cast<int>(data.space.dim()); ++x)
    if (!apply_d(data.differential, apply_d(data.differential, basis(x))).is_zero())
      return Word{x};
  return std::nullopt;
}

std::optional<Word> violation_leibniz(const DglaData &data) {
  const auto &s = data.space;
  const auto &d = data.differential;
  const auto &b = data.bracket;
  for (int x = 0; x < static_cast<int>(s.dim()); ++x)
    for (int y = 0; y < static_cast<int>(s.dim()); ++y) {
      Vector lhs = apply_d(d, b.evaluate(Word{x, y}));
      Vector rhs = bracket_of(b, apply_d(d, basis(x)), basis(y)) +
                   bracket_of(b, basis(x), apply_d(d, basis(y))).scaled(Scalar(parity_sign(s.degree(x))));
      if (!(lhs == rhs))
        return Word{x, y};
    }
  return std::nullopt;
}

std::optional<Word> violation_jacobi(const DglaData &data) {
  const auto &s = data.space;
  const auto &b = data.bracket;
  const int n = static_cast<int>(s.dim());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        Vector lhs = bracket_of(b, basis(x), b.evaluate(Word{y, z}));
        Vector rhs = bracket_of(b, b.evaluate(Word{x, y}), basis(z)) +
                     bracket_of(b, basis(y), b.evaluate(Word{x, z}))
                         .scaled(Scalar(parity_sign(static_cast<long>(s.degree(x)) * s.degree(y))));
        if (!(lhs == rhs))
          return Word{x, y, z};
      }
  return std::nullopt;
}

bool holds_antisymmetry(const DglaData &data) { return !violation_antisymmetry(data); }
bool holds_d_squared(const DglaData &data) { return !violation_d_squared(data); }
bool holds_leibniz(const DglaData &data) { return !violation_leibniz(data); }
bool holds_jacobi(const DglaData &data) { return !violation_jacobi(data); }

std::optional<AxiomFailure> dgla_axioms(const DglaData &data) {
  if (auto w = violation_antisymmetry(data))
    return AxiomFailure{"antisymmetry", *w};
  if (auto w = violation_d_squared(data))
    return AxiomFailure{"d^2", *w};
  if (auto w = violation_leibniz(data))
    return AxiomFailure{"leibniz", *w};
  if (auto w = violation_jacobi(data))
    return AxiomFailure{"jacobi", *w};
  return std::nullopt;
}

KapranovRecursion::KapranovRecursion(TensorMap product, TensorMap d)
    : product_(std::move(product)), d_(std::move(d)) {}

Vector KapranovRecursion::operator()(const Word &tuple) {
  auto it = memo_.find(tuple);
  if (it != memo_.end())
    return it->second;
  Vector v = compute(tuple);
  memo_.emplace(tuple, v);
  return v;
}

Vector KapranovRecursion::left_multiply(const Vector &x, const Vector &y) const {
  Vector out;
  for (const auto &[i, ci] : x)
    for (const auto &[j, cj] : y)
      out.add(product_.evaluate(Word{i, j}), ci * cj);
  return out;
}

Vector KapranovRecursion::compute(const Word &tuple) {
  const GradedSpace &s = product_.source();
  const bool d_odd = d_.degree() % 2 != 0;
  if (tuple.size() == 1)
    return d_.evaluate(tuple);
  const int x = tuple[0];
  const Vector vx(x, Scalar(1));
  const Word ys(tuple.begin() + 1, tuple.end());
  const Scalar twist(d_odd && s.is_odd(x) ? -1 : 1);
  if (tuple.size() == 2) {
    const Vector y(ys[0], Scalar(1));
    Vector out = left_multiply(d_.evaluate(Word{x}), y);
    out.add(left_multiply(vx, d_.evaluate(ys)), twist);
    out -= apply_linear(d_, left_multiply(vx, y));
    return out;
  }
  Vector out;
  int prefix = 0;
  for (std::size_t k = 0; k < ys.size(); ++k) {
    const Scalar sign(s.is_odd(x) && prefix % 2 != 0 ? -1 : 1);
    for (const auto &[g, c] : left_multiply(vx, Vector(ys[k], Scalar(1)))) {
      Word replaced = ys;
      replaced[k] = g;
      out.add((*this)(replaced), -(sign * c));
    }
    prefix += s.degree(ys[k]);
  }
  out.add(left_multiply(vx, (*this)(ys)), twist);
  return out;
}

} // namespace linf::oracle

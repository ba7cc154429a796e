#include "linf/prelie/prelie.hpp"

#include "linf/core/errors.hpp"
#include "linf/core/permutation.hpp"

namespace linf {

namespace {

int sign_of(bool odd) { return odd ? -1 : 1; }

Vector multiply(const TensorMap &m, const Vector &a, const Vector &b) {
  Vector out;
  for (const auto &[i, ci] : a)
    for (const auto &[j, cj] : b)
      out.add(m.evaluate(Word{i, j}), ci * cj);
  return out;
}

Vector basis(int g) { return Vector(g, Scalar(1)); }

std::string triple(const GradedSpace &s, const Word &w) { return "(" + format_word(s, w, ", ") + ")"; }

void require_product(const PreLieAlgebra &l) {
  if (l.product.arity() != 2 || l.product.degree() != 0 || !(l.product.source() == l.space) ||
      !(l.product.target() == l.space))
    throw ArgumentError("pre-Lie product must be a degree-0 binary operation on the carrier");
}

Vector bracket_of(const PreLieAlgebra &l, const GradedSpace &s, int x, int y) {
  Vector out = l.product.evaluate(Word{x, y});
  out.add(l.product.evaluate(Word{y, x}), Scalar(-sign_of(s.is_odd(x) && s.is_odd(y))));
  return out;
}

} // namespace

std::string PreLieCheck::describe(const GradedSpace &space) const {
  if (associator_failure)
    return "associator symmetry fails on " + triple(space, *associator_failure);
  if (jacobi_failure)
    return "internal sign error: pre-Lie identity holds but Jacobi fails on " + triple(space, *jacobi_failure);
  return "ok";
}

PreLieCheck check_prelie(const PreLieAlgebra &l) {
  require_product(l);
  const auto &s = l.space;
  const int n = static_cast<int>(s.dim());
  const TensorMap &m = l.product;
  auto assoc = [&](int x, int y, int z) {
    Vector a = multiply(m, m.evaluate(Word{x, y}), basis(z));
    a -= multiply(m, basis(x), m.evaluate(Word{y, z}));
    return a;
  };
  PreLieCheck out;
  for (int x = 0; x < n && !out.associator_failure; ++x)
    for (int y = 0; y < n && !out.associator_failure; ++y)
      for (int z = 0; z < n; ++z) {
        Vector lhs = assoc(x, y, z), rhs;
        if (l.chirality == Chirality::left)
          rhs = assoc(y, x, z).scaled(Scalar(sign_of(s.is_odd(x) && s.is_odd(y))));
        else
          rhs = assoc(x, z, y).scaled(Scalar(sign_of(s.is_odd(y) && s.is_odd(z))));
        if (!(lhs == rhs)) {
          out.associator_failure = Word{x, y, z};
          break;
        }
      }
  if (out.associator_failure)
    return out;

  TensorMap b(s, 2, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      b.add(Word{x, y}, bracket_of(l, s, x, y));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        Vector lhs = multiply(b, basis(x), b.evaluate(Word{y, z}));
        Vector rhs = multiply(b, b.evaluate(Word{x, y}), basis(z));
        rhs.add(multiply(b, basis(y), b.evaluate(Word{x, z})), Scalar(sign_of(s.is_odd(x) && s.is_odd(y))));
        if (!(lhs == rhs)) {
          out.jacobi_failure = Word{x, y, z};
          return out;
        }
      }
  return out;
}

PreLieAlgebra right_to_left(const PreLieAlgebra &l) {
  if (l.chirality == Chirality::left)
    return l;
  if (auto c = check_prelie(l); !c.passed())
    throw PreconditionError("right_to_left: " + c.describe(l.space));
  const auto &s = l.space;
  TensorMap left(s, 2, 0);
  for (const auto &[w, v] : l.product.entries())
    left.add(Word{w[1], w[0]}, v.scaled(Scalar(-sign_of(s.is_odd(w[0]) && s.is_odd(w[1])))));
  return {s, Chirality::left, std::move(left), l.differential};
}

TensorMap associated_bracket(const PreLieAlgebra &l) {
  if (auto c = check_prelie(l); !c.passed())
    throw StructuralError("associated_bracket: " + c.describe(l.space));
  const int n = static_cast<int>(l.space.dim());
  TensorMap b(l.space, 2, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      b.add(Word{x, y}, bracket_of(l, l.space, x, y));
  return b;
}

namespace {

int vector_degree(const GradedSpace &s, const Vector &v, const char *who) {
  auto d = homogeneous_degree(s, v);
  if (!d && !v.is_zero())
    throw ArgumentError(std::string(who) + ": element is not homogeneous");
  return d.value_or(0);
}

TensorMap left_multiplication(const GradedSpace &s, const TensorMap &m, const Vector &x, int degree) {
  TensorMap out(s, 1, degree);
  for (int y = 0; y < static_cast<int>(s.dim()); ++y)
    out.add(Word{y}, multiply(m, x, basis(y)));
  return out;
}

} // namespace

TensorMap nabla(const PreLieAlgebra &l, const Vector &x) {
  const PreLieAlgebra left = right_to_left(l);
  return left_multiplication(l.space, left.product, x, vector_degree(l.space, x, "nabla"));
}

TensorMap inner_derivation(const PreLieAlgebra &l, const Vector &z) {
  return left_multiplication(l.space, associated_bracket(l), z, vector_degree(l.space, z, "inner_derivation"));
}

TensorMap commutator(const TensorMap &d1, const TensorMap &d2) {
  if (d1.arity() != 1 || d2.arity() != 1 || !(d1.source() == d2.source()))
    throw ArgumentError("commutator: expects linear endomorphisms of one space");
  const auto &s = d1.source();
  const int sign = sign_of((d1.degree() % 2 != 0) && (d2.degree() % 2 != 0));
  TensorMap out(s, 1, d1.degree() + d2.degree());
  for (int x = 0; x < static_cast<int>(s.dim()); ++x) {
    Vector v = apply_linear(d1, d2.evaluate(Word{x}));
    v.add(apply_linear(d2, d1.evaluate(Word{x})), Scalar(-sign));
    out.add(Word{x}, v);
  }
  return out;
}

std::string DerivationCheck::describe(const GradedSpace &space) const {
  if (bracket_failure)
    return "not a bracket derivation on " + triple(space, *bracket_failure);
  if (square_failure)
    return "d² is nonzero on " + space.name(*square_failure);
  return "ok";
}

DerivationCheck check_derivation(const PreLieAlgebra &l, const TensorMap &d) {
  if (d.arity() != 1 || !(d.source() == l.space) || !(d.target() == l.space))
    throw StructuralError("check_derivation: d must be a linear endomorphism of the carrier");
  const PreLieAlgebra left = right_to_left(l);
  const TensorMap b = associated_bracket(left);
  const auto &s = l.space;
  const int n = static_cast<int>(s.dim());
  const bool d_odd = d.degree() % 2 != 0;
  DerivationCheck out;
  auto leibniz = [&](const TensorMap &m, int x, int y) {
    Vector lhs = apply_linear(d, m.evaluate(Word{x, y}));
    Vector rhs = multiply(m, d.evaluate(Word{x}), basis(y));
    rhs.add(multiply(m, basis(x), d.evaluate(Word{y})), Scalar(sign_of(d_odd && s.is_odd(x))));
    return lhs == rhs;
  };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!out.bracket_failure && !leibniz(b, x, y))
        out.bracket_failure = Word{x, y};
      if (!out.product_failure && !leibniz(left.product, x, y))
        out.product_failure = Word{x, y};
    }
  for (int x = 0; x < n && !out.square_failure; ++x)
    if (!apply_linear(d, d.evaluate(Word{x})).is_zero())
      out.square_failure = x;
  return out;
}

PreLieAlgebra vector_field_algebra(int n) {
  if (n < 1)
    throw ArgumentError("vector_field_algebra: n must be positive");
  std::vector<Generator> gens;
  for (int i = 1; i <= n; ++i)
    gens.push_back({"e" + std::to_string(i), 0});
  for (int i = 1; i <= n; ++i)
    gens.push_back({"e" + std::to_string(i) + "t", 1});
  GradedSpace s(std::move(gens));
  auto e = [n](int i, bool theta) { return i - 1 + (theta ? n : 0); };
  TensorMap m(s, 2, 0);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const int k = i + j - 1;
      if (k > n)
        continue;
      m.add(Word{e(i, false), e(j, false)}, e(k, false), Scalar(j));
      m.add(Word{e(i, true), e(j, false)}, e(k, true), Scalar(j));
      m.add(Word{e(i, false), e(j, true)}, e(k, true), Scalar(j));
    }
  PreLieAlgebra l{s, Chirality::left, std::move(m), std::nullopt};
  if (n >= 2)
    l.differential = inner_derivation(l, basis(e(2, true)));
  return l;
}

} // namespace linf

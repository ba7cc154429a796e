#include "linf/prelie/kapranov.hpp"

#include "linf/coalgebra/tensor_coder.hpp"
#include "linf/core/errors.hpp"
#include "linf/linfty/linfty.hpp"

namespace linf {

const char *variant_name(KapranovVariant v) { return v == KapranovVariant::plain ? "plain" : "alternating"; }

namespace {

Vector basis(int g) { return Vector(g, Scalar(1)); }

PreLieAlgebra checked_left(const PreLieAlgebra &l, const char *who) {
  if (auto c = check_prelie(l); !c.passed())
    throw PreconditionError(std::string(who) + ": " + c.describe(l.space));
  return right_to_left(l);
}

void require_derivation(const PreLieAlgebra &left, const TensorMap &d, const char *who) {
  auto c = check_derivation(left, d);
  if (!c.is_derivation())
    throw PreconditionError(std::string(who) + ": " + c.describe(left.space));
}

SymMap checked_symmetric(const TensorMap &t, int arity) {
  if (auto bad = symmetry_violation(t))
    throw InternalConsistencyError("kapranov: arity " + std::to_string(arity) +
                                   " bracket is not graded symmetric on " +
                                   format_word(t.source(), *bad, ","));
  return to_symmetric(t);
}

} // namespace

KapranovTower kapranov(const PreLieAlgebra &l, const TensorMap &d, int max_arity, KapranovVariant variant) {
  if (max_arity < 1)
    throw ArgumentError("kapranov: max arity must be positive");
  PreLieAlgebra left = checked_left(l, "kapranov");
  require_derivation(left, d, "kapranov");
  const GradedSpace &s = left.space;
  const int dim = static_cast<int>(s.dim());
  const Scalar sign(variant == KapranovVariant::plain ? 1 : -1);

  KapranovTower tower{left, d, variant, max_arity, Coderivation(s, Variant::reduced, d.degree(), max_arity)};
  tower.structure.set_coefficient(to_symmetric(d));
  if (max_arity < 2)
    return tower;

  std::vector<TensorMap> nab;
  for (int x = 0; x < dim; ++x)
    nab.push_back(nabla(left, basis(x)));

  TensorMap phi(s, 2, d.degree());
  for (int x = 0; x < dim; ++x) {
    TensorMap nabla_dx(s, 1, s.degree(x) + d.degree());
    for (const auto &[u, c] : d.evaluate(Word{x}))
      nabla_dx += nab[static_cast<std::size_t>(u)].scaled(c);
    const TensorMap defect = nabla_dx - gerstenhaber_bracket(d, nab[static_cast<std::size_t>(x)]);
    for (const auto &[w, v] : defect.entries())
      phi.add(Word{x, w[0]}, v.scaled(sign));
  }
  tower.structure.set_coefficient(checked_symmetric(phi, 2));

  for (int n = 2; n < max_arity; ++n) {
    TensorMap next(s, n + 1, d.degree());
    for (int x = 0; x < dim; ++x) {
      const TensorMap br = gerstenhaber_bracket(phi, nab[static_cast<std::size_t>(x)]);
      for (const auto &[w, v] : br.entries()) {
        Word xw{x};
        xw.insert(xw.end(), w.begin(), w.end());
        next.add(xw, v.scaled(-sign));
      }
    }
    phi = std::move(next);
    tower.structure.set_coefficient(checked_symmetric(phi, n + 1));
  }
  return tower;
}

Coderivation sign_automorphism(const Coderivation &q) {
  Coderivation out(q.space(), q.variant(), q.degree(), q.truncation());
  out.set_unit_image(-q.unit_image());
  for (const auto &[n, m] : q.taylor())
    out.set_coefficient(n % 2 == 0 ? m.scaled(Scalar(-1)) : m);
  return out;
}

Coderivation kapranov_witness(const PreLieAlgebra &l, int x, int sign) {
  Coderivation w = sigma(l.space, basis(x));
  w += linear_coderivation(to_symmetric(nabla(l, basis(x)).scaled(Scalar(sign))), Variant::nonreduced);
  return w;
}

std::optional<RecursionFailure> verify_compact_recursion(const KapranovTower &tower, std::optional<int> sign) {
  const int s = sign.value_or(tower.witness_sign());
  const int up_to = tower.max_arity - 1;
  const GradedSpace &space = tower.base.space;
  const Coderivation q = tower.structure.embedded();
  for (int x = 0; x < static_cast<int>(space.dim()); ++x) {
    Coderivation lhs = nr_bracket(q, kapranov_witness(tower.base, x, s), up_to);
    Coderivation rhs(space, Variant::nonreduced, lhs.degree());
    for (const auto &[u, c] : tower.derivation.evaluate(Word{x}))
      rhs += kapranov_witness(tower.base, u, s).scaled(c);
    if (auto arity = first_difference(lhs, rhs, up_to))
      return RecursionFailure{x, *arity + 1};
  }
  return std::nullopt;
}

std::optional<int> verify_lie_morphism(const PreLieAlgebra &l, const TensorMap &d1, const TensorMap &d2,
                                       int max_arity) {
  PreLieAlgebra left = checked_left(l, "verify_lie_morphism");
  require_derivation(left, d1, "verify_lie_morphism");
  require_derivation(left, d2, "verify_lie_morphism");
  const auto t1 = kapranov(left, d1, max_arity);
  const auto t2 = kapranov(left, d2, max_arity);
  const auto t12 = kapranov(left, commutator(d1, d2), max_arity);
  return first_difference(nr_bracket(t1.structure, t2.structure, max_arity), t12.structure, max_arity);
}

KapranovSplitting kapranov_splitting(const PreLieAlgebra &l, const Coderivation &q, int max_arity) {
  PreLieAlgebra left = checked_left(l, "kapranov_splitting");
  if (!(q.space() == left.space))
    throw ArgumentError("kapranov_splitting: structure lives on a different carrier");
  const SymMap d = q.coefficient_or_zero(1);
  for (int x = 0; x < static_cast<int>(left.space.dim()); ++x)
    if (!apply_linear(d, d.evaluate(Word{x})).is_zero())
      throw PreconditionError("kapranov_splitting: d² is nonzero on " + left.space.name(x));
  require_linfty(q, max_arity, "kapranov_splitting");
  KapranovSplitting out;
  for (int x = 0; x < static_cast<int>(left.space.dim()); ++x)
    out.witness.push_back(kapranov_witness(left, x, 1));
  out.failure = verify_splitting_witness(q, out.witness, max_arity);
  return out;
}

} // namespace linf

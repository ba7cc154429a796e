#include <doctest.h>

#include <set>

#include "../support/dgla_fixtures.hpp"
#include "linf/core/errors.hpp"
#include "linf/core/permutation.hpp"
#include "linf/linfty/ce.hpp"
#include "linf/linfty/homotopy_abelian.hpp"
#include "linf/linfty/linfty.hpp"
#include "linf/linfty/splitting.hpp"
#include "linf/linfty/transfer.hpp"

using namespace linf;
using namespace linf::testing;

namespace {

GradedSpace space_of(std::initializer_list<std::pair<const char *, int>> gens) {
  std::vector<Generator> g;
  for (auto [n, d] : gens)
    g.push_back({n, d});
  return GradedSpace(std::move(g));
}

// Linear structure with a random square-zero q_1 of the shape V^k -> V^{k+1}
// given by a random rank-one-per-degree map.
Coderivation random_abelian(Gen &gen, const GradedSpace &s) {
  // q_1 = δ ∘ π with π projecting onto one generator per degree and δ
  // sending it into the next degree; then q_1² = 0 once every image
  // generator is sent to zero.
  SymMap q1(s, 1, 1);
  std::set<int> used_as_target;
  for (int g = 0; g < static_cast<int>(s.dim()); ++g) {
    if (used_as_target.count(g))
      continue;
    auto next = s.basis_in_degree(s.degree(g) + 1);
    for (int h : next)
      if (!used_as_target.count(h) && h != g && gen.chance(0.5)) {
        bool h_is_source = false;
        for (const auto &[w, v] : q1.entries())
          if (w[0] == h)
            h_is_source = true;
        if (h_is_source)
          continue;
        q1.add(Word{g}, h, gen.nonzero_scalar());
        used_as_target.insert(h);
        break;
      }
  }
  return linear_coderivation(q1);
}

bool squares_to_zero(const SymMap &q1) {
  for (int g = 0; g < static_cast<int>(q1.source().dim()); ++g)
    if (!apply_linear(q1, apply_linear(q1, Vector(g, Scalar(1)))).is_zero())
      return false;
  return true;
}

} // namespace

TEST_CASE("fixtures satisfy the dgla axioms") {
  CHECK_FALSE(oracle::dgla_axioms(as_data(sl2())));
  CHECK_FALSE(oracle::dgla_axioms(as_data(gl11(1, Scalar(2)))));
  CHECK_FALSE(oracle::dgla_axioms(as_data(gl11(3, Scalar(0)))));
  CHECK_FALSE(oracle::dgla_axioms(as_data(sl11(Scalar(-1)))));
  CHECK_FALSE(oracle::dgla_axioms(as_data(cone(Scalar(3), Scalar(1, 2)))));
  CHECK_FALSE(oracle::dgla_axioms(as_data(ladder(Scalar(1), Scalar(2), Scalar(-1)))));
  CHECK_FALSE(oracle::dgla_axioms(as_data(affine_plus_cone(Scalar(1), Scalar(1)))));
  Gen gen(100);
  for (int i = 0; i < 30; ++i) {
    auto g = random_valid_dgla(gen, i);
    CHECK_FALSE(oracle::dgla_axioms(as_data(g)));
  }
}

TEST_CASE("from_dgla") {
  // abelian with d = 0
  auto ab = DglaBuilder({{"x", 0}, {"y", 1}}).build();
  auto q0 = from_dgla(ab);
  CHECK(q0.top_arity() == -1);
  CHECK(q0.space().degree(0) == -1);

  auto q = from_dgla(sl2());
  CHECK(q.coefficient(1) == nullptr);
  REQUIRE(q.coefficient(2) != nullptr);
  CHECK(check_linfty(q, 5).passed());
  // q_2(h ⊙ e) = (-1)^{|h|}[h, e] = 2e
  CHECK(q.evaluate(Word{0, 1}) == Vector(1, Scalar(2)));

  // Jacobi corruption: [e, f] = h + e
  auto bad = DglaBuilder({{"h", 0}, {"e", 0}, {"f", 0}})
                 .bracket("h", "e", Scalar(2), "e")
                 .bracket("h", "f", Scalar(-2), "f")
                 .bracket("e", "f", Scalar(1), "h")
                 .bracket("e", "f", Scalar(1), "e")
                 .build();
  CHECK_FALSE(oracle::holds_jacobi(as_data(bad)));
  auto check = check_linfty(from_dgla(bad), 4);
  CHECK_FALSE(check.passed());
  CHECK(check.lowest_failure() == 3);

  // wrong degree
  Dgla wrong = sl2();
  wrong.differential = TensorMap(wrong.space, 1, 0);
  CHECK_THROWS_AS(from_dgla(wrong), ArgumentError);
  // non-antisymmetric bracket
  Dgla skew = sl2();
  skew.bracket.add(Word{1, 2}, 0, Scalar(1));
  CHECK_THROWS_AS(from_dgla(skew), ArgumentError);
}

TEST_CASE("check_linfty detects each broken axiom at its arity") {
  Gen gen(7);
  int found[3] = {0, 0, 0};
  for (int i = 0; i < 21; ++i) {
    auto g = random_valid_dgla(gen, i);
    REQUIRE(check_linfty(from_dgla(g), 4).passed());
    for (Axiom a : {Axiom::d_squared, Axiom::leibniz, Axiom::jacobi}) {
      auto c = corrupt(g, a);
      if (!c)
        continue;
      ++found[static_cast<int>(a)];
      auto check = check_linfty(from_dgla(c->dgla), 4);
      CHECK_FALSE(check.passed());
      if (c->only_target)
        CHECK(check.lowest_failure() == (a == Axiom::d_squared ? 1 : a == Axiom::leibniz ? 2 : 3));
    }
  }
  CHECK(found[0] > 0);
  CHECK(found[1] > 0);
  CHECK(found[2] > 0);
}

TEST_CASE("Q•Q = 0 exactly when the dgla axioms hold, on random perturbations") {
  Gen gen(8);
  for (int i = 0; i < 40; ++i) {
    auto g = random_valid_dgla(gen, i);
    // random symmetric-preserving perturbation
    const auto &s = g.space;
    int x = gen.uniform(0, static_cast<int>(s.dim()) - 1);
    auto targets = s.basis_in_degree(s.degree(x) + 1);
    if (!targets.empty() && gen.chance(0.5))
      g.differential.add(Word{x}, targets[0], gen.nonzero_scalar());
    bool ok_axioms = !oracle::dgla_axioms(as_data(g));
    CHECK(check_linfty(from_dgla(g), 3).passed() == ok_axioms);
  }
}

TEST_CASE("tangent complex and weak equivalences") {
  auto q = from_dgla(gl11(1, Scalar(1)));
  auto t = tangent(q);
  CHECK(squares_to_zero(t.differential));
  auto id = CoalgebraMorphism::identity(q.space());
  CHECK(is_weak_equivalence(id, q, q, 3));

  auto c = contraction_from_cohomology(q.space(), t.differential);
  auto tr = transfer(q, c, 3);
  CHECK(is_weak_equivalence(tr.morphism, tr.minimal, q, 3));

  // f_1 = 0 between complexes with nonzero cohomology
  auto s = space_of({{"x", 0}});
  CoalgebraMorphism zero(s, s);
  Coderivation z(s, Variant::reduced, 1);
  CHECK_FALSE(is_weak_equivalence(zero, z, z, 3));

  // non-intertwining
  auto sl = from_dgla(sl2());
  CHECK_THROWS_AS(is_weak_equivalence(CoalgebraMorphism::identity(sl.space()), sl,
                                      Coderivation(sl.space(), Variant::reduced, 1), 3),
                  StructuralError);
}

TEST_CASE("elementary bracket agrees with the generic NR bracket") {
  Gen gen(15);
  for (int trial = 0; trial < 8; ++trial) {
    auto g = random_valid_dgla(gen, trial);
    auto q = from_dgla(g);
    const int n_max = 3;
    ElementaryBracket fast(q, n_max);
    for (const auto &[k, list] : elementary_basis(q.space(), 0, n_max))
      for (const auto &e : list) {
        auto slow = nr_bracket(q.embedded(), as_coderivation(q.space(), e, Variant::nonreduced), n_max);
        Coderivation rebuilt(q.space(), Variant::nonreduced, slow.degree(), n_max);
        Vector unit;
        std::map<int, SymMap> parts;
        for (const auto &[key, c] : fast(e)) {
          if (key.first.empty()) {
            unit.add(key.second, c);
            continue;
          }
          const int n = static_cast<int>(key.first.size());
          parts.try_emplace(n, q.space(), n, slow.degree()).first->second.add(key.first, key.second, c);
        }
        rebuilt.set_unit_image(unit);
        for (auto &[n, m] : parts)
          rebuilt.set_coefficient(m);
        CHECK_FALSE(first_difference(rebuilt, slow, n_max));
      }
  }
}

TEST_CASE("CE complexes") {
  // one even generator, Q = 0: zero differential, cohomology = cochains
  auto s = space_of({{"x", 0}});
  Coderivation zero(s, Variant::reduced, 1);
  for (auto variant : {Variant::reduced, Variant::nonreduced}) {
    auto ce = ce_complex(zero, variant, 3);
    for (int k : ce.complex.degrees())
      CHECK(ce.complex.cohomology_dimension(k) == ce.complex.dimension(k));
  }
  // abelian with q_1 = 0 on a mixed space
  auto m = space_of({{"a", 0}, {"b", -1}});
  auto ce = ce_complex(Coderivation(m, Variant::reduced, 1), Variant::nonreduced, 3);
  for (int k : ce.complex.degrees())
    for (const auto &col : ce.complex.differential(k))
      CHECK(col.empty());

  // sl2: stable under raising N in low degrees. On sl2[1] every generator has
  // degree -1, so a coderivation of arity n has degree n - 1 ... plus the
  // output degree; degrees k <= N - 2 only see arities <= N - 1.
  auto q = from_dgla(sl2());
  for (auto variant : {Variant::reduced, Variant::nonreduced}) {
    auto c3 = ce_complex(q, variant, 3);
    auto c4 = ce_complex(q, variant, 4);
    for (int k = -1; k <= 1; ++k)
      CHECK(c3.complex.cohomology_dimension(k) == c4.complex.cohomology_dimension(k));
  }

  // not an L∞ structure
  auto bad = from_dgla(sl2());
  SymMap extra(bad.space(), 1, 1);
  CHECK_THROWS_AS(ce_complex(Coderivation(bad.space(), Variant::reduced, 1, 2), Variant::nonreduced, 2),
                  PreconditionError);
  Dgla broken = sl2();
  broken.bracket.add(Word{1, 2}, 1, Scalar(1));
  broken.bracket.add(Word{2, 1}, 1, Scalar(-1));
  CHECK_THROWS_AS(ce_complex(from_dgla(broken), Variant::reduced, 3), PreconditionError);
}

TEST_CASE("CE differential squares to zero on random structures") {
  Gen gen(16);
  for (int i = 0; i < 10; ++i) {
    auto q = from_dgla(random_valid_dgla(gen, i));
    CHECK_NOTHROW(ce_complex(q, Variant::nonreduced, 3));
    CHECK_NOTHROW(ce_complex(q, Variant::reduced, 3));
  }
}

TEST_CASE("H(i) injectivity") {
  auto s = space_of({{"x", 0}, {"y", 1}, {"z", -1}});
  SymMap q1(s, 1, 1);
  q1.add(Word{0}, 1, Scalar(1));
  auto ab = linear_coderivation(q1);
  CHECK(h_injectivity(ab, 3).injective());

  auto sl = h_injectivity(from_dgla(sl2()), 2);
  CHECK_FALSE(sl.injective());
  // the kernel is spanned by the inner classes [Q, σ_v], one per v, which
  // become exact once the unit component is allowed
  int k0 = -1;
  for (const auto &d : sl.degrees)
    if (d.degree == 0)
      k0 = d.kernel;
  CHECK(k0 == 3);
  CHECK(sl.total_kernel() == 3);
}

TEST_CASE("splitting: abelian, sl2 and conjugated abelian structures") {
  auto s = space_of({{"x", 0}, {"y", 1}, {"z", -1}});
  SymMap q1(s, 1, 1);
  q1.add(Word{0}, 1, Scalar(2));
  auto ab = linear_coderivation(q1);
  auto split = find_splitting(ab, 3);
  CHECK(split.feasible);
  CHECK_FALSE(verify_splitting_witness(ab, split.witness, 3));
  CHECK_FALSE(verify_splitting_witness(ab, sigma_splitting(s), 3));

  auto sl = from_dgla(sl2());
  for (int n = 1; n <= 3; ++n) {
    auto r = find_splitting(sl, n);
    CHECK_FALSE(r.feasible);
    CHECK(r.infeasible_at == 1);
    CHECK(r.certificate_size > 0);
  }
  auto failure = verify_splitting_witness(sl, sigma_splitting(sl.space()), 2);
  REQUIRE(failure);
  CHECK(failure->arity == 1);

  Gen gen(60);
  for (int trial = 0; trial < 6; ++trial) {
    auto sp = gen.space(2, 3, -1, 1);
    auto lin = random_abelian(gen, sp);
    REQUIRE(squares_to_zero(lin.coefficient_or_zero(1)));
    auto f = gen.unipotent_automorphism(sp, 4);
    auto q = conjugate(f, lin);
    REQUIRE(check_linfty(q, 4).passed());
    auto res = find_splitting(q, 3);
    CHECK(res.feasible);
    SplittingMap witness;
    for (int v = 0; v < static_cast<int>(sp.dim()); ++v)
      witness.push_back(conjugate(f, sigma(sp, Vector(v, Scalar(1)))));
    CHECK_FALSE(verify_splitting_witness(q, witness, 3));
    CHECK_FALSE(verify_splitting_witness(q, res.witness, 3));
  }
}

TEST_CASE("splitting feasibility is invariant under unipotent conjugation") {
  Gen gen(61);
  for (int i = 0; i < 8; ++i) {
    auto q = from_dgla(random_valid_dgla(gen, i));
    auto f = gen.unipotent_automorphism(q.space(), 3);
    auto conj = conjugate(f, q.truncated(3));
    auto a = find_splitting(q, 2), b = find_splitting(conj, 2);
    CHECK(a.feasible == b.feasible);
    CHECK(a.infeasible_at == b.infeasible_at);
    if (a.feasible) {
      // witnesses transport: v ↦ F⁻¹ s(v) F
      SplittingMap moved;
      for (const auto &sv : a.witness)
        moved.push_back(conjugate(f, sv.truncated(3)));
      CHECK_FALSE(verify_splitting_witness(conj, moved, 2));
    }
  }
}

TEST_CASE("contractions") {
  auto s = space_of({{"x", 0}, {"y", 1}});
  auto id = contraction_from_cohomology(s, SymMap(s, 1, 1));
  CHECK(id.cohomology == s);
  CHECK(id.inclusion == identity_map(s));
  CHECK(id.homotopy.is_zero());

  SymMap d(s, 1, 1);
  d.add(Word{0}, 1, Scalar(3));
  auto acyclic = contraction_from_cohomology(s, d);
  CHECK(acyclic.cohomology.dim() == 0);
  CHECK(acyclic.homotopy.evaluate(Word{1}) == Vector(0, Scalar(1, 3)));

  Gen gen(70);
  for (int trial = 0; trial < 20; ++trial) {
    auto sp = gen.space(1, 4, -1, 2);
    auto lin = random_abelian(gen, sp);
    auto c = contraction_from_cohomology(sp, lin.coefficient_or_zero(1));
    CHECK_FALSE(contraction_violation(lin.coefficient_or_zero(1), c));
    int total = 0;
    for (auto [k, h] : cohomology_dimensions(tangent(lin)))
      total += h;
    CHECK(static_cast<int>(c.cohomology.dim()) == total);
  }
}

TEST_CASE("homotopy transfer") {
  auto s = space_of({{"x", 0}, {"y", 1}});
  SymMap d(s, 1, 1);
  d.add(Word{0}, 1, Scalar(1));
  auto ab = linear_coderivation(d);
  auto tr = transfer(ab, contraction_from_cohomology(s, d), 4);
  CHECK(tr.minimal.top_arity() == -1);

  auto sl = from_dgla(sl2());
  auto c = contraction_from_cohomology(sl.space(), sl.coefficient_or_zero(1));
  auto t = transfer(sl, c, 3);
  CHECK(t.lowest_nonzero() == 2);
  // r_2 = p q_2 (i ⊗ i)
  const auto &h = c.cohomology;
  for (const auto &w : symmetric_monomials(h, 2)) {
    Vector expected;
    for (const auto &[a, ca] : c.inclusion.evaluate(Word{w[0]}))
      for (const auto &[b, cb] : c.inclusion.evaluate(Word{w[1]}))
        expected.add(apply_linear(c.projection, sl.evaluate(Word{a, b})), ca * cb);
    CHECK(t.minimal.evaluate(w) == expected);
  }

  Gen gen(71);
  for (int i = 0; i < 10; ++i) {
    auto q = from_dgla(random_valid_dgla(gen, i));
    auto cc = contraction_from_cohomology(q.space(), q.coefficient_or_zero(1));
    CHECK_NOTHROW(transfer(q, cc, 4));
  }
  Contraction broken = c;
  broken.projection = SymMap(sl.space(), h, 1, 0);
  CHECK_THROWS_AS(transfer(sl, broken, 3), PreconditionError);
}

TEST_CASE("homotopy abelian verdicts") {
  auto s = space_of({{"x", 0}, {"y", 1}});
  SymMap d(s, 1, 1);
  d.add(Word{0}, 1, Scalar(1));
  auto ab = is_homotopy_abelian(linear_coderivation(d), 3);
  CHECK(ab.supported);

  auto sl = is_homotopy_abelian(from_dgla(sl2()), 1);
  CHECK_FALSE(sl.supported);
  CHECK(sl.refuted_at == 2);
  CHECK(sl.splitting.infeasible_at == 1);
  CHECK_FALSE(sl.injectivity.injective());

  // the three checks agree on every random fixture (the verdict throws otherwise)
  Gen gen(72);
  int supported = 0, refuted = 0;
  for (int i = 0; i < 14; ++i) {
    auto q = from_dgla(random_valid_dgla(gen, i));
    auto v = is_homotopy_abelian(q, 2);
    (v.supported ? supported : refuted)++;
  }
  CHECK(supported > 0);
  CHECK(refuted > 0);

  Gen gen2(73);
  for (int trial = 0; trial < 4; ++trial) {
    auto sp = gen2.space(2, 3, -1, 1);
    auto f = gen2.unipotent_automorphism(sp, 4);
    auto q = conjugate(f, random_abelian(gen2, sp));
    CHECK(is_homotopy_abelian(q, 3).supported);
  }
}

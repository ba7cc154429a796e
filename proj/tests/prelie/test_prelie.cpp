#include <doctest.h>

#include <functional>
#include <map>

#include "../support/generators.hpp"
#include "linf/coalgebra/tensor_coder.hpp"
#include "linf/core/errors.hpp"
#include "linf/core/permutation.hpp"
#include "linf/linfty/homotopy_abelian.hpp"
#include "linf/linfty/linfty.hpp"
#include "linf/linfty/transfer.hpp"
#include "linf/oracle/oracle.hpp"
#include "linf/prelie/kapranov.hpp"

using namespace linf;
using namespace linf::testing;

namespace {

Vector basis(int g) { return Vector(g, Scalar(1)); }

int sgn(bool odd) { return odd ? -1 : 1; }

Vector mul(const TensorMap &m, const Vector &a, const Vector &b) {
  Vector out;
  for (const auto &[i, ci] : a)
    for (const auto &[j, cj] : b)
      out.add(m.evaluate(Word{i, j}), ci * cj);
  return out;
}

int deg(const GradedSpace &s, const Word &w) { return word_degree(s, w); }

using TowerOracle = oracle::KapranovRecursion;

PreLieAlgebra with_product(const GradedSpace &s, TensorMap m, Chirality c = Chirality::left) {
  return {s, c, std::move(m), std::nullopt};
}

// x ◁ y = (-1)^{|x||y|+1} y ▷ x, the inverse of right_to_left.
PreLieAlgebra to_right(const PreLieAlgebra &l) {
  TensorMap r(l.space, 2, 0);
  for (const auto &[w, v] : l.product.entries())
    r.add(Word{w[1], w[0]}, v.scaled(Scalar(-sgn(l.space.is_odd(w[0]) && l.space.is_odd(w[1])))));
  return {l.space, Chirality::right, r, l.differential};
}

int idx(const PreLieAlgebra &l, const char *name) { return l.space.index_of(name); }

Vector random_homogeneous(Gen &gen, const GradedSpace &s, int degree) {
  Vector v;
  while (v.is_zero())
    v = gen.vector_of_degree(s, degree);
  return v;
}

} // namespace

TEST_CASE("vector field fixture passes the exhaustive checks") {
  for (int n = 1; n <= 5; ++n) {
    auto l = vector_field_algebra(n);
    CHECK(check_prelie(l).passed());
    CHECK(l.space.dim() == static_cast<std::size_t>(2 * n));
    if (n >= 2) {
      auto c = check_derivation(l, *l.differential);
      CHECK(c.passed());
      CHECK_FALSE(c.is_product_derivation());
      CHECK(c.product_failure);
    }
  }
}

TEST_CASE("check_prelie") {
  // associative: truncated polynomials with an odd exterior generator
  GradedSpace s({{"1", 0}, {"x", 0}, {"x2", 0}, {"t", 1}, {"xt", 1}});
  TensorMap m(s, 2, 0);
  auto add = [&](const char *a, const char *b, const char *c, int k = 1) {
    m.add(Word{s.index_of(a), s.index_of(b)}, s.index_of(c), Scalar(k));
  };
  for (const char *g : {"1", "x", "x2", "t", "xt"}) {
    add("1", g, g);
    if (std::string(g) != "1")
      add(g, "1", g);
  }
  add("x", "x", "x2");
  add("x", "t", "xt");
  add("t", "x", "xt");
  auto assoc = with_product(s, m);
  CHECK(check_prelie(assoc).passed());
  CHECK(check_prelie(with_product(s, m, Chirality::right)).passed());

  // one perturbed constant in the fixture
  auto l = vector_field_algebra(3);
  TensorMap bad = l.product;
  bad.add(Word{idx(l, "e1"), idx(l, "e2")}, idx(l, "e2"), Scalar(1));
  auto c = check_prelie(with_product(l.space, bad));
  REQUIRE_FALSE(c.passed());
  CHECK(c.associator_failure);
  CHECK(c.describe(l.space).find("associator symmetry fails on (") != std::string::npos);

  // falsification oracle: every single-constant perturbation of W_3 ⊗ Λθ
  // either keeps the identity or is caught at a triple where the brute
  // associator comparison fails
  int caught = 0;
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y)
      for (int z : l.space.basis_in_degree(l.space.degree(x) + l.space.degree(y))) {
        TensorMap p = l.product;
        p.add(Word{x, y}, z, Scalar(1));
        auto pl = with_product(l.space, p);
        auto r = check_prelie(pl);
        if (r.passed())
          continue;
        ++caught;
        REQUIRE(r.associator_failure);
        const auto &t = *r.associator_failure;
        auto a = [&](int i, int j, int k) {
          return mul(p, p.evaluate(Word{i, j}), basis(k)) - mul(p, basis(i), p.evaluate(Word{j, k}));
        };
        CHECK_FALSE(a(t[0], t[1], t[2]) ==
                    a(t[1], t[0], t[2]).scaled(Scalar(sgn(l.space.is_odd(t[0]) && l.space.is_odd(t[1])))));
      }
  CHECK(caught > 10);
}

TEST_CASE("associated bracket and nabla") {
  GradedSpace s({{"a", 0}, {"b", 1}});
  auto ab = with_product(s, TensorMap(s, 2, 0));
  CHECK(associated_bracket(ab).is_zero());

  auto l = vector_field_algebra(4);
  auto b = associated_bracket(l);
  CHECK(b.evaluate(Word{idx(l, "e1"), idx(l, "e2")}) == basis(idx(l, "e2")));
  for (int u = 4; u < 8; ++u)
    CHECK(b.evaluate(Word{u, u}).is_zero());
  // [∇_x, ∇_y] = ∇_{[x,y]}
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      auto nx = nabla(l, basis(x)), ny = nabla(l, basis(y));
      CHECK(commutator(nx, ny).entries() == nabla(l, b.evaluate(Word{x, y})).entries());
    }
  TensorMap bad = l.product;
  bad.add(Word{0, 1}, 1, Scalar(1));
  CHECK_THROWS_AS(associated_bracket(with_product(l.space, bad)), StructuralError);
}

TEST_CASE("right to left conversion") {
  // even degrees: ▷ is the opposite product negated
  auto even = vector_field_algebra(3);
  GradedSpace s({{"e1", 0}, {"e2", 0}, {"e3", 0}});
  TensorMap w(s, 2, 0);
  for (const auto &[word, v] : even.product.entries())
    if (word[0] < 3 && word[1] < 3)
      for (const auto &[g, c] : v)
        w.add(word, g, c);
  auto right = to_right(with_product(s, w));
  CHECK(check_prelie(right).passed());
  auto back = right_to_left(right);
  for (const auto &[word, v] : right.product.entries())
    CHECK(back.product.evaluate(Word{word[1], word[0]}) == -v);
  CHECK(associated_bracket(back) == associated_bracket(right));

  auto l = vector_field_algebra(4);
  auto r = to_right(l);
  CHECK(check_prelie(r).passed());
  CHECK(right_to_left(r).product == l.product);
  CHECK(associated_bracket(r) == associated_bracket(l));

  // failing input
  TensorMap bad = r.product;
  bad.add(Word{0, 1}, 1, Scalar(1));
  CHECK_THROWS_AS(right_to_left(with_product(l.space, bad, Chirality::right)), PreconditionError);

  // Gerstenhaber product on multilinear maps of arity <= 2 over V = {a, b},
  // arities past 2 discarded
  GradedSpace v({{"a", 0}, {"b", 1}});
  std::vector<std::pair<Word, int>> maps;
  std::vector<Generator> gens;
  for (int k = 1; k <= 2; ++k)
    for (const auto &word : tensor_words(v, k))
      for (int out = 0; out < 2; ++out) {
        maps.push_back({word, out});
        gens.push_back({"m" + std::to_string(gens.size()), v.degree(out) - deg(v, word)});
      }
  GradedSpace g(gens);
  auto as_map = [&](int i) {
    TensorMap t(v, static_cast<int>(maps[i].first.size()), g.degree(i));
    t.add(maps[i].first, maps[i].second, Scalar(1));
    return t;
  };
  TensorMap circ(g, 2, 0);
  for (int i = 0; i < static_cast<int>(maps.size()); ++i)
    for (int j = 0; j < static_cast<int>(maps.size()); ++j) {
      auto p = gerstenhaber_product(as_map(i), as_map(j));
      if (p.arity() > 2)
        continue;
      for (const auto &[word, val] : p.entries())
        for (const auto &[out, c] : val)
          for (int k = 0; k < static_cast<int>(maps.size()); ++k)
            if (maps[k].first == word && maps[k].second == out)
              circ.add(Word{i, j}, k, c);
    }
  auto gerst = with_product(g, circ, Chirality::right);
  CHECK(check_prelie(gerst).passed());
  CHECK(check_prelie(right_to_left(gerst)).passed());
}

TEST_CASE("check_derivation") {
  auto l = vector_field_algebra(4);
  auto zero = TensorMap(l.space, 1, 1);
  auto c0 = check_derivation(l, zero);
  CHECK(c0.passed());
  CHECK(c0.is_product_derivation());

  // an inner derivation squaring to something nonzero: ad(e2 + e3t) mixes
  // degrees, so take the even inner derivation ad(e1) and compose
  auto ad1 = inner_derivation(l, basis(idx(l, "e1")));
  auto c1 = check_derivation(l, ad1);
  CHECK(c1.is_derivation());
  CHECK_FALSE(c1.passed());
  CHECK(c1.square_failure);

  TensorMap bad = *l.differential;
  bad.add(Word{idx(l, "e1")}, idx(l, "e1t"), Scalar(1));
  CHECK_FALSE(check_derivation(l, bad).is_derivation());

  // a genuine ▷-derivation: the Euler-type grading e_i ↦ (i-1) e_i
  TensorMap euler(l.space, 1, 0);
  for (int i = 1; i <= 4; ++i) {
    euler.add(Word{i - 1}, i - 1, Scalar(i - 1));
    euler.add(Word{i + 3}, i + 3, Scalar(i - 1));
  }
  CHECK(check_derivation(l, euler).is_product_derivation());
  CHECK(check_derivation(l, euler).is_derivation());
}

TEST_CASE("kapranov tower on the fixture") {
  auto l = vector_field_algebra(4);
  const auto &d = *l.differential;
  auto t = kapranov(l, d, 4);
  const auto &q = t.structure;
  CHECK(q.coefficient_or_zero(1) == to_symmetric(d));
  const int e2 = idx(l, "e2"), e4t = idx(l, "e4t");
  CHECK(q.evaluate(Word{e2, e2}) == Vector(e4t, Scalar(-2)));
  // Φ_n(f_1..f_n) is f_1⋯f_n z^{(n)} up to a constant for d = ad(z θ), so
  // z = x² stops at arity 2 while z = x⁴ reaches every arity up to 4
  CHECK(q.top_arity() == 2);
  auto t4 = kapranov(l, inner_derivation(l, basis(idx(l, "e4t"))), 4);
  for (int n = 2; n <= 4; ++n)
    CHECK_FALSE(t4.structure.coefficient_or_zero(n).is_zero());
  CHECK_FALSE(verify_compact_recursion(t4));
  TowerOracle oracle4(l.product, t4.derivation);
  for (int n = 2; n <= 4; ++n)
    for (const auto &w : tensor_words(l.space, n)) {
      auto canon = canonicalize(l.space, w);
      Vector expected =
          canon.sign == 0 ? Vector() : t4.structure.evaluate(canon.word).scaled(Scalar(canon.sign));
      REQUIRE(oracle4(w) == expected);
    }

  // brute-force recursion on every ordered basis tuple, which also checks
  // symmetry against the Koszul-signed canonical value
  TowerOracle oracle(l.product, d);
  for (int n = 1; n <= 4; ++n)
    for (const auto &w : tensor_words(l.space, n)) {
      auto canon = canonicalize(l.space, w);
      Vector expected = canon.sign == 0 ? Vector() : q.evaluate(canon.word).scaled(Scalar(canon.sign));
      REQUIRE(oracle(w) == expected);
    }

  // Φ_2 defect is graded symmetric by itself on every basis pair
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y)
      CHECK(oracle(Word{x, y}) ==
            oracle(Word{y, x}).scaled(Scalar(sgn(l.space.is_odd(x) && l.space.is_odd(y)))));
}

TEST_CASE("kapranov degenerate inputs") {
  auto l = vector_field_algebra(4);
  auto t0 = kapranov(l, TensorMap(l.space, 1, 1), 4);
  CHECK(t0.structure.top_arity() == -1);

  TensorMap euler(l.space, 1, 0);
  for (int i = 1; i <= 4; ++i) {
    euler.add(Word{i - 1}, i - 1, Scalar(i - 1));
    euler.add(Word{i + 3}, i + 3, Scalar(i - 1));
  }
  auto te = kapranov(l, euler, 4);
  CHECK(te.structure.top_arity() == 1);

  GradedSpace s({{"a", 0}, {"b", 1}, {"c", 1}});
  TensorMap d(s, 1, 1);
  d.add(Word{0}, 1, Scalar(1));
  auto ab = kapranov(with_product(s, TensorMap(s, 2, 0)), d, 4);
  CHECK(ab.structure.top_arity() == 1);

  TensorMap bad = *l.differential;
  bad.add(Word{0}, 4, Scalar(1));
  CHECK_THROWS_AS(kapranov(l, bad, 3), PreconditionError);
  TensorMap badp = l.product;
  badp.add(Word{0, 1}, 1, Scalar(1));
  CHECK_THROWS_AS(kapranov(with_product(l.space, badp), *l.differential, 3), PreconditionError);
}

TEST_CASE("compact recursion") {
  auto l = vector_field_algebra(4);
  auto plain = kapranov(l, *l.differential, 4);
  auto alt = kapranov(l, *l.differential, 4, KapranovVariant::alternating);
  CHECK_FALSE(verify_compact_recursion(plain));
  CHECK_FALSE(verify_compact_recursion(alt));
  auto mismatch = verify_compact_recursion(plain, -1);
  REQUIRE(mismatch);
  CHECK(mismatch->arity == 2);
  CHECK(alt.structure.truncation() == 4);
  CHECK_FALSE(first_difference(alt.structure, sign_automorphism(plain.structure), 4));
  CHECK(first_difference(alt.structure, plain.structure, 4) == 2);
}

TEST_CASE("random inner derivations") {
  Gen gen(404);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = gen.uniform(2, 4);
    auto l = vector_field_algebra(n);
    const int degree = gen.uniform(0, 1);
    auto d = inner_derivation(l, random_homogeneous(gen, l.space, degree));
    const int arity = n == 4 ? 3 : 4;
    auto t = kapranov(l, d, arity);
    CHECK_FALSE(verify_compact_recursion(t));
    auto a = kapranov(l, d, arity, KapranovVariant::alternating);
    CHECK_FALSE(verify_compact_recursion(a));
    CHECK_FALSE(first_difference(a.structure, sign_automorphism(t.structure), arity));
    TowerOracle oracle(l.product, d);
    for (int k = 2; k <= arity; ++k)
      for (const auto &w : symmetric_monomials(l.space, k))
        CHECK(oracle(w) == t.structure.evaluate(w));
    // right input gives the same tower
    auto r = kapranov(to_right(l), d, arity);
    CHECK_FALSE(first_difference(r.structure, t.structure, arity));
  }
}

TEST_CASE("lie morphism") {
  auto l = vector_field_algebra(4);
  const auto &d = *l.differential;
  auto d1 = inner_derivation(l, basis(idx(l, "e1")));
  auto d3 = inner_derivation(l, basis(idx(l, "e3t")));
  CHECK_FALSE(verify_lie_morphism(l, d1, d3, 4));
  CHECK_FALSE(verify_lie_morphism(l, d, d3, 4));
  CHECK_FALSE(verify_lie_morphism(l, d, d, 4));
  CHECK_FALSE(verify_lie_morphism(l, d, TensorMap(l.space, 1, 0), 4));
  // [Φ(d), Φ(d)] = Φ(2d²) = 0 since d² = 0
  auto t = kapranov(l, d, 4);
  CHECK(nr_bracket(t.structure, t.structure, 4).is_zero_up_to(4));
  TensorMap bad = d;
  bad.add(Word{0}, 4, Scalar(1));
  CHECK_THROWS_AS(verify_lie_morphism(l, bad, d1, 3), PreconditionError);

  Gen gen(405);
  for (int trial = 0; trial < 6; ++trial) {
    auto a = inner_derivation(l, random_homogeneous(gen, l.space, gen.uniform(0, 1)));
    auto b = inner_derivation(l, random_homogeneous(gen, l.space, gen.uniform(0, 1)));
    CHECK_FALSE(verify_lie_morphism(l, a, b, 3));
  }
}

TEST_CASE("kapranov splitting and homotopy abelianity") {
  auto l = vector_field_algebra(4);
  auto t = kapranov(l, *l.differential, 4);
  auto q = t.structure;
  CHECK(check_linfty(q, 4).passed());
  auto split = kapranov_splitting(l, q, 3);
  CHECK_FALSE(split.failure);
  CHECK(find_splitting(q, 3).feasible);

  // one perturbed coefficient of Φ_3
  Coderivation corrupted = q;
  SymMap extra(l.space, 3, 1);
  extra.add(Word{0, 0, 1}, idx(l, "e4t"), Scalar(1));
  corrupted.add_to_coefficient(extra);
  auto cs = kapranov_splitting(l, corrupted, 2);
  REQUIRE(cs.failure);
  CHECK(cs.failure->arity == 2);

  auto c = contraction_from_cohomology(l.space, q.coefficient_or_zero(1));
  auto tr = transfer(q, c, 3);
  CHECK_FALSE(tr.lowest_nonzero());

  auto v = is_homotopy_abelian(kapranov(l, *l.differential, 4).structure, 3);
  CHECK(v.supported);

  // abelian product, d = 0: s = σ
  GradedSpace s({{"a", 0}, {"b", 1}});
  auto ab = with_product(s, TensorMap(s, 2, 0));
  auto tab = kapranov(ab, TensorMap(s, 1, 1), 3);
  auto sab = kapranov_splitting(ab, tab.structure, 2);
  CHECK_FALSE(sab.failure);
  CHECK_FALSE(first_difference(sab.witness[0], sigma(s, basis(0)), 3));

  // d² != 0 is refused
  CHECK_THROWS_AS(kapranov_splitting(l, kapranov(l, inner_derivation(l, basis(0)), 3).structure, 2),
                  PreconditionError);
}

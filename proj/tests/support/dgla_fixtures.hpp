#pragma once

// Small dg Lie algebras for tests, built from structure constants and
// re-verified by the direct axiom oracle.

#include <functional>
#include <string>

#include "generators.hpp"
#include "linf/core/linalg.hpp"
#include "linf/linfty/linfty.hpp"
#include "linf/oracle/oracle.hpp"

namespace linf::testing {

class DglaBuilder {
public:
  explicit DglaBuilder(std::vector<Generator> gens)
      : space_(std::move(gens)), d_(space_, 1, 1), bracket_(space_, 2, 0) {}

  int operator[](const std::string &name) const { return space_.index_of(name); }

  /// [x, y] = c·z together with the antisymmetric partner.
  DglaBuilder &bracket(const std::string &x, const std::string &y, const Scalar &c, const std::string &z) {
    const int a = space_.index_of(x), b = space_.index_of(y);
    bracket_.add(Word{a, b}, space_.index_of(z), c);
    if (a != b) {
      const int s = -parity_sign(static_cast<long>(space_.degree(a)) * space_.degree(b));
      bracket_.add(Word{b, a}, space_.index_of(z), c * Scalar(s));
    }
    return *this;
  }

  DglaBuilder &d(const std::string &x, const Scalar &c, const std::string &y) {
    d_.add(Word{space_.index_of(x)}, space_.index_of(y), c);
    return *this;
  }

  /// d = ad(c·z), requiring z odd of degree 1.
  DglaBuilder &inner_d(const std::string &z, const Scalar &c) {
    const int e = space_.index_of(z);
    for (int x = 0; x < static_cast<int>(space_.dim()); ++x)
      d_.add(Word{x}, bracket_.evaluate(Word{e, x}).scaled(c));
    return *this;
  }

  Dgla build() const { return {space_, d_, bracket_}; }

private:
  GradedSpace space_;
  TensorMap d_;
  TensorMap bracket_;
};

inline oracle::DglaData as_data(const Dgla &g) { return {g.space, g.differential, g.bracket}; }

inline Dgla sl2() {
  return DglaBuilder({{"h", 0}, {"e", 0}, {"f", 0}})
      .bracket("h", "e", Scalar(2), "e")
      .bracket("h", "f", Scalar(-2), "f")
      .bracket("e", "f", Scalar(1), "h")
      .build();
}

/// gl(1|1) graded by E12 in degree deg, E21 in degree -deg (deg odd), with
/// d = ad(λ E12) when deg = 1.
inline Dgla gl11(int deg, const Scalar &lambda) {
  DglaBuilder b({{"E11", 0}, {"E22", 0}, {"E12", deg}, {"E21", -deg}});
  b.bracket("E11", "E12", Scalar(1), "E12")
      .bracket("E11", "E21", Scalar(-1), "E21")
      .bracket("E22", "E12", Scalar(-1), "E12")
      .bracket("E22", "E21", Scalar(1), "E21")
      .bracket("E12", "E21", Scalar(1), "E11")
      .bracket("E12", "E21", Scalar(1), "E22");
  if (deg == 1)
    b.inner_d("E12", lambda);
  return b.build();
}

/// sl(1|1)-type: [E12, E21] = I central, d = ad(λ E12).
inline Dgla sl11(const Scalar &lambda) {
  return DglaBuilder({{"I", 0}, {"E12", 1}, {"E21", -1}})
      .bracket("E12", "E21", Scalar(1), "I")
      .inner_d("E12", lambda)
      .build();
}

/// x in degree 0, y in degree 1, dx = μy, [x, y] = λy.
inline Dgla cone(const Scalar &mu, const Scalar &lambda) {
  return DglaBuilder({{"x", 0}, {"y", 1}}).d("x", mu, "y").bracket("x", "y", lambda, "y").build();
}

/// p, q, r in degrees -1, 0, 1: q acts diagonally on the abelian ideal
/// {p, r} by [q, p] = βp, [q, r] = γr, and dq = αr.
inline Dgla ladder(const Scalar &alpha, const Scalar &beta, const Scalar &gamma) {
  return DglaBuilder({{"p", -1}, {"q", 0}, {"r", 1}})
      .d("q", alpha, "r")
      .bracket("q", "p", beta, "p")
      .bracket("q", "r", gamma, "r")
      .build();
}

/// Direct sum of the 2-dim nonabelian Lie algebra and a cone.
inline Dgla affine_plus_cone(const Scalar &mu, const Scalar &lambda) {
  return DglaBuilder({{"a", 0}, {"b", 0}, {"x", 0}, {"y", 1}})
      .bracket("a", "b", Scalar(1), "b")
      .d("x", mu, "y")
      .bracket("x", "y", lambda, "y")
      .build();
}

/// Transport of structure along a random degree-preserving automorphism.
inline Dgla random_basis_change(const Dgla &g, Gen &gen) {
  const GradedSpace &s = g.space;
  const std::size_t n = s.dim();
  DenseMatrix p(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    p(i, i) = gen.nonzero_scalar();
    for (std::size_t j = 0; j < i; ++j)
      if (s.degree(static_cast<int>(i)) == s.degree(static_cast<int>(j)) && gen.chance(0.5))
        p(i, j) = Scalar(gen.uniform(-2, 2));
  }
  DenseMatrix pinv = p.inverse();
  auto col = [&](const DenseMatrix &m, int j) {
    Vector v;
    for (std::size_t i = 0; i < n; ++i)
      v.add(static_cast<int>(i), m(i, static_cast<std::size_t>(j)));
    return v;
  };
  auto map = [&](const DenseMatrix &m, const Vector &v) {
    Vector out;
    for (const auto &[j, c] : v)
      out.add(col(m, j), c);
    return out;
  };
  TensorMap d(s, 1, 1), b(s, 2, 0);
  for (int x = 0; x < static_cast<int>(n); ++x) {
    Vector px = col(pinv, x);
    Vector dx;
    for (const auto &[i, c] : px)
      dx.add(g.differential.evaluate(Word{i}), c);
    d.add(Word{x}, map(p, dx));
    for (int y = 0; y < static_cast<int>(n); ++y) {
      Vector py = col(pinv, y);
      Vector bxy;
      for (const auto &[i, a] : px)
        for (const auto &[j, c] : py)
          bxy.add(g.bracket.evaluate(Word{i, j}), a * c);
      b.add(Word{x, y}, map(p, bxy));
    }
  }
  return {s, d, b};
}

/// The i-th of a family of random valid dglas of dimension <= 4.
inline Dgla random_valid_dgla(Gen &gen, int i) {
  auto param = [&] { return gen.nonzero_scalar(); };
  Dgla base = [&]() -> Dgla {
    switch (i % 7) {
    case 0: return gl11(1, param());
    case 1: return sl11(param());
    case 2: return ladder(param(), param(), param());
    case 3: return cone(param(), param());
    case 4: return gl11(3, Scalar(0));
    case 5: return affine_plus_cone(param(), param());
    default: return sl2();
    }
  }();
  return random_basis_change(base, gen);
}

enum class Axiom { d_squared, leibniz, jacobi };

inline const char *axiom_name(Axiom a) {
  switch (a) {
  case Axiom::d_squared: return "d^2";
  case Axiom::leibniz: return "leibniz";
  default: return "jacobi";
  }
}

inline bool holds(const oracle::DglaData &g, Axiom a) {
  switch (a) {
  case Axiom::d_squared: return oracle::holds_d_squared(g);
  case Axiom::leibniz: return oracle::holds_leibniz(g);
  default: return oracle::holds_jacobi(g);
  }
}

struct Corruption {
  Dgla dgla;
  bool only_target = false; ///< the other two axioms still hold
  std::string description;
};

/// Searches single structure-constant perturbations (a bracket constant is
/// perturbed together with its antisymmetric partner) for one that breaks
/// the target axiom, preferring one that leaves the other axioms intact.
inline std::optional<Corruption> corrupt(const Dgla &g, Axiom target) {
  const GradedSpace &s = g.space;
  const int n = static_cast<int>(s.dim());
  std::optional<Corruption> fallback;
  auto consider = [&](Dgla candidate, std::string what) -> bool {
    auto data = as_data(candidate);
    if (holds(data, target) || !oracle::holds_antisymmetry(data))
      return false;
    bool others = true;
    for (Axiom a : {Axiom::d_squared, Axiom::leibniz, Axiom::jacobi})
      if (a != target && !holds(data, a))
        others = false;
    if (others) {
      fallback = Corruption{std::move(candidate), true, std::move(what)};
      return true;
    }
    if (!fallback)
      fallback = Corruption{std::move(candidate), false, std::move(what)};
    return false;
  };
  for (int x = 0; x < n; ++x)
    for (int y : s.basis_in_degree(s.degree(x) + 1)) {
      Dgla c = g;
      c.differential.add(Word{x}, y, Scalar(1));
      if (consider(std::move(c), "d(" + s.name(x) + ") += " + s.name(y)))
        return fallback;
    }
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y)
      for (int z : s.basis_in_degree(s.degree(x) + s.degree(y))) {
        if (x == y && s.is_odd(x) == false)
          continue; // [x, x] = 0 for even x by antisymmetry
        Dgla c = g;
        c.bracket.add(Word{x, y}, z, Scalar(1));
        if (x != y)
          c.bracket.add(Word{y, x}, z, Scalar(-parity_sign(static_cast<long>(s.degree(x)) * s.degree(y))));
        if (consider(std::move(c), "[" + s.name(x) + "," + s.name(y) + "] += " + s.name(z)))
          return fallback;
      }
  return fallback;
}

} // namespace linf::testing

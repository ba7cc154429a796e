#pragma once

#include <climits>
#include <functional>
#include <map>
#include <optional>

#include "linf/core/multilinear.hpp"

namespace linf {

enum class Variant { reduced, nonreduced };

/// Truncation value meaning "no truncation": absent coefficients are zero.
inline constexpr int kExact = INT_MAX / 4;

/// Saturating arithmetic on truncation levels.
inline int truncation_add(int n, int delta) { return n >= kExact ? kExact : n + delta; }

/// Coderivation of the reduced (S̄V) or non-reduced (SV) symmetric coalgebra,
/// given by its Taylor coefficients q_n : V^{⊙n} -> V.
///
/// `truncation()` is the highest arity that is known: coefficients above it
/// are not zero but unknown. kExact marks a tower whose stored coefficients
/// are the whole story. Operations report results only at arities that are
/// fully determined by known inputs.
class Coderivation {
public:
  Coderivation(GradedSpace space, Variant variant, int degree, int truncation = kExact);

  const GradedSpace &space() const { return space_; }
  Variant variant() const { return variant_; }
  int degree() const { return degree_; }
  int truncation() const { return truncation_; }
  bool is_exact() const { return truncation_ >= kExact; }

  /// Image of 1 (arity-0 coefficient). Zero for the reduced variant.
  const Vector &unit_image() const { return unit_image_; }
  void set_unit_image(Vector v);

  /// Nullptr when the coefficient is zero.
  const SymMap *coefficient(int arity) const;
  /// The coefficient as a SymMap, materialized as zero when absent.
  SymMap coefficient_or_zero(int arity) const;
  void set_coefficient(SymMap q);
  void add_to_coefficient(const SymMap &q);
  const std::map<int, SymMap> &taylor() const { return taylor_; }

  /// q_n(w) for a word of length n (n = 0 is the unit image).
  Vector evaluate(const Word &word) const;

  /// Highest arity with a stored nonzero coefficient; -1 for zero.
  int top_arity() const;
  /// True if every coefficient of arity <= up_to vanishes.
  bool is_zero_up_to(int up_to) const;

  /// Copy with truncation lowered to `n` and higher coefficients dropped.
  Coderivation truncated(int n) const;
  /// Reduced -> non-reduced inclusion (q_1, q_2, ...) -> (0, q_1, q_2, ...).
  Coderivation embedded() const;

  Coderivation scaled(const Scalar &factor) const;
  Coderivation &operator+=(const Coderivation &o);
  Coderivation &operator-=(const Coderivation &o);
  friend Coderivation operator+(Coderivation a, const Coderivation &b) { return a += b; }
  friend Coderivation operator-(Coderivation a, const Coderivation &b) { return a -= b; }

private:
  void check_compatible(const Coderivation &o) const;

  GradedSpace space_;
  Variant variant_;
  int degree_;
  int truncation_;
  Vector unit_image_;
  std::map<int, SymMap> taylor_;
};

/// Lowest arity <= up_to at which the two coderivations differ, if any.
std::optional<int> first_difference(const Coderivation &a, const Coderivation &b, int up_to);

/// Linear coderivation with q_1 = map.
Coderivation linear_coderivation(const SymMap &map, Variant variant = Variant::reduced);

/// Action of the coderivation on a canonical monomial, by the unshuffle
/// expansion Σ_i Σ_σ ε(σ) q_i(v_σ(1..i)) ⊙ v_σ(i+1..n).
/// Throws StructuralError for a reduced coderivation holding a unit image.
SymElement expand(const Coderivation &q, const Word &monomial);
SymElement expand(const Coderivation &q, const SymElement &element);

/// Projection onto V^{⊙1}: rebuilds the Taylor tower from an action given
/// on canonical monomials of length <= max_arity.
Coderivation corestrict(const GradedSpace &space, Variant variant, int degree, int max_arity,
                        const std::function<SymElement(const Word &)> &action);

/// Nijenhuis–Richardson product q•r. Arity n of the result uses q up to
/// n+1 (n when r is reduced) and r up to n; the result is truncated at the
/// highest arity so determined. `limit` optionally caps the computed arity.
Coderivation nr_product(const Coderivation &q, const Coderivation &r,
                        std::optional<int> limit = std::nullopt);

/// [q, r] = q•r - (-1)^{|q||r|} r•q.
Coderivation nr_bracket(const Coderivation &q, const Coderivation &r,
                        std::optional<int> limit = std::nullopt);

/// σ_v: the non-reduced coderivation with σ_v(1) = v and no other
/// coefficients. `degree` is needed only when v is zero.
Coderivation sigma(const GradedSpace &space, const Vector &v, std::optional<int> degree = {});

/// Evaluation at the identity, Q ↦ Q(1). StructuralError on reduced input.
Vector ev1(const Coderivation &q);

/// [Q, σ_v], with the side check σ_v • Q = 0.
Coderivation bracket_with_sigma(const Coderivation &q, const Vector &v);

} // namespace linf

#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>

#include "linf/core/graded_space.hpp"
#include "linf/core/lincomb.hpp"

namespace linf {

/// Graded-symmetric multilinear map source^{⊙n} -> target of fixed degree.
///
/// Stored sparsely on canonical monomials. Evaluation on any word sorts it
/// first and applies the Koszul sign of the sort; a repeated odd generator
/// gives zero. Arity 1 SymMaps double as linear maps.
class SymMap {
public:
  SymMap(GradedSpace source, GradedSpace target, int arity, int degree);
  /// Endomorphism-type map on a single space.
  SymMap(GradedSpace space, int arity, int degree) : SymMap(space, space, arity, degree) {}

  const GradedSpace &source() const { return source_; }
  const GradedSpace &target() const { return target_; }
  int arity() const { return arity_; }
  int degree() const { return degree_; }

  /// Adds c * out to the value on `inputs` (any order; canonicalized with
  /// sign). Throws ArgumentError if the output degree is inconsistent.
  void add(Word inputs, int out, const Scalar &c);
  void add(Word inputs, const Vector &value);

  Vector evaluate(std::span<const int> inputs) const;
  /// Linear extension to a combination of words of length arity().
  Vector evaluate(const SymElement &element) const;

  const std::map<Word, Vector> &entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  SymMap scaled(const Scalar &factor) const;
  SymMap &operator+=(const SymMap &o);
  SymMap &operator-=(const SymMap &o);
  friend SymMap operator+(SymMap a, const SymMap &b) { return a += b; }
  friend SymMap operator-(SymMap a, const SymMap &b) { return a -= b; }
  friend bool operator==(const SymMap &a, const SymMap &b);

private:
  void check_compatible(const SymMap &o) const;

  GradedSpace source_;
  GradedSpace target_;
  int arity_;
  int degree_;
  std::map<Word, Vector> entries_;
};

/// Multilinear map source^{⊗n} -> target with no symmetry assumption.
class TensorMap {
public:
  TensorMap(GradedSpace source, GradedSpace target, int arity, int degree);
  TensorMap(GradedSpace space, int arity, int degree) : TensorMap(space, space, arity, degree) {}

  const GradedSpace &source() const { return source_; }
  const GradedSpace &target() const { return target_; }
  int arity() const { return arity_; }
  int degree() const { return degree_; }

  void add(const Word &inputs, int out, const Scalar &c);
  void add(const Word &inputs, const Vector &value);

  Vector evaluate(std::span<const int> inputs) const;
  const std::map<Word, Vector> &entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  TensorMap scaled(const Scalar &factor) const;
  TensorMap &operator+=(const TensorMap &o);
  TensorMap &operator-=(const TensorMap &o);
  friend TensorMap operator+(TensorMap a, const TensorMap &b) { return a += b; }
  friend TensorMap operator-(TensorMap a, const TensorMap &b) { return a -= b; }
  friend bool operator==(const TensorMap &a, const TensorMap &b);

private:
  void check_compatible(const TensorMap &o) const;

  GradedSpace source_;
  GradedSpace target_;
  int arity_;
  int degree_;
  std::map<Word, Vector> entries_;
};

/// Apply a linear map (arity-1 SymMap) to a vector.
Vector apply_linear(const SymMap &map, const Vector &v);
Vector apply_linear(const TensorMap &map, const Vector &v);

/// Composition a∘b of arity-1 maps (b applied first).
SymMap compose_linear(const SymMap &a, const SymMap &b);

SymMap identity_map(const GradedSpace &space);

/// Tensor map t(v_1,...,v_n) = s(v_1 ⊙ ... ⊙ v_n) on every word.
TensorMap to_tensor(const SymMap &map);

/// First word on which the tensor map is not graded symmetric, if any.
std::optional<Word> symmetry_violation(const TensorMap &map);

/// Restricts a graded-symmetric tensor map to canonical monomials.
/// Throws ArgumentError naming the offending word if it is not symmetric.
SymMap to_symmetric(const TensorMap &map);

/// Degree of a vector if homogeneous; nullopt for zero or mixed degree.
std::optional<int> homogeneous_degree(const GradedSpace &space, const Vector &v);

/// "2*e1 - 1/2*f" style rendering for diagnostics.
std::string format_vector(const GradedSpace &space, const Vector &v);
std::string format_word(const GradedSpace &space, const Word &w, const char *sep = "⊙");

} // namespace linf

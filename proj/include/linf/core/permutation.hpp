#pragma once

#include <span>
#include <utility>
#include <vector>

#include "linf/core/graded_space.hpp"
#include "linf/core/lincomb.hpp"

namespace linf {

/// 0-based permutation in one-line notation: position k of the permuted
/// sequence holds element perm[k] of the original one.
using Permutation = std::vector<int>;

/// Koszul sign ε(σ; v_1..v_n), defined by
///   v_1 ⊙ ... ⊙ v_n = ε(σ) v_σ(1) ⊙ ... ⊙ v_σ(n).
/// Every inversion pair contributes (-1)^(product of the two degrees).
/// Throws ArgumentError on a length mismatch or a non-bijection.
int koszul_sign(std::span<const int> perm, std::span<const int> degrees);

/// (p,q)-unshuffles, i.e. permutations increasing on the first p and on the
/// last q positions, in lexicographic order. There are binomial(p+q, p).
std::vector<Permutation> unshuffles(int p, int q);

/// Cached variant for hot loops; same content as unshuffles().
const std::vector<Permutation> &unshuffles_cached(int p, int q);

/// Canonical form of a symmetric monomial written as an arbitrary word.
struct CanonicalWord {
  int sign = 0; ///< 0 when the monomial vanishes (repeated odd generator)
  Word word;
};

/// Sorts the word into canonical (non-decreasing) order, tracking the
/// Koszul sign. Returns sign 0 if an odd generator repeats.
CanonicalWord canonicalize(const GradedSpace &space, Word word);

/// Sum of generator degrees of a word.
int word_degree(const GradedSpace &space, std::span<const int> word);

/// Canonical symmetric monomials of the given length: non-decreasing words
/// with no repeated odd generator. Length 0 yields the empty word.
std::vector<Word> symmetric_monomials(const GradedSpace &space, int length);

/// All words (tensor monomials) of the given length.
std::vector<Word> tensor_words(const GradedSpace &space, int length);

/// Set partitions of {0..n-1}; blocks sorted internally and ordered by their
/// smallest element.
std::vector<std::vector<std::vector<int>>> set_partitions(int n);

/// Symmetric product of canonical words, with sign. Sign 0 if it vanishes.
CanonicalWord multiply_words(const GradedSpace &space, const Word &a, const Word &b);

} // namespace linf

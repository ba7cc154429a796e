#include "linf/core/permutation.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "linf/core/errors.hpp"

namespace linf {

int koszul_sign(std::span<const int> perm, std::span<const int> degrees) {
  const std::size_t n = perm.size();
  if (degrees.size() != n)
    throw ArgumentError("koszul_sign: permutation has length " + std::to_string(n) +
                        " but " + std::to_string(degrees.size()) + " degrees were given");
  std::vector<bool> seen(n, false);
  for (int p : perm) {
    if (p < 0 || static_cast<std::size_t>(p) >= n || seen[static_cast<std::size_t>(p)])
      throw ArgumentError("koszul_sign: not a permutation");
    seen[static_cast<std::size_t>(p)] = true;
  }
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = k + 1; l < n; ++l)
      if (perm[k] > perm[l] && (degrees[perm[k]] % 2 != 0) && (degrees[perm[l]] % 2 != 0))
        sign = -sign;
  return sign;
}

std::vector<Permutation> unshuffles(int p, int q) {
  if (p < 0 || q < 0)
    throw ArgumentError("unshuffles: negative block size");
  const int n = p + q;
  std::vector<Permutation> out;
  // choose the first block as a p-subset in lexicographic order
  std::vector<int> pick(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i)
    pick[i] = i;
  while (true) {
    Permutation sigma(pick.begin(), pick.end());
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (int i : pick)
      used[i] = true;
    for (int i = 0; i < n; ++i)
      if (!used[i])
        sigma.push_back(i);
    out.push_back(std::move(sigma));
    int i = p - 1;
    while (i >= 0 && pick[i] == n - p + i)
      --i;
    if (i < 0)
      break;
    ++pick[i];
    for (int j = i + 1; j < p; ++j)
      pick[j] = pick[j - 1] + 1;
  }
  return out;
}

const std::vector<Permutation> &unshuffles_cached(int p, int q) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::vector<Permutation>> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(p, q);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, unshuffles(p, q)).first;
  return it->second;
}

CanonicalWord canonicalize(const GradedSpace &space, Word word) {
  int sign = 1;
  // insertion sort; each adjacent swap of two odd generators flips the sign
  for (std::size_t i = 1; i < word.size(); ++i) {
    for (std::size_t j = i; j > 0 && word[j - 1] > word[j]; --j) {
      if (space.is_odd(word[j - 1]) && space.is_odd(word[j]))
        sign = -sign;
      std::swap(word[j - 1], word[j]);
    }
  }
  for (std::size_t i = 1; i < word.size(); ++i)
    if (word[i] == word[i - 1] && space.is_odd(word[i]))
      return {0, {}};
  return {sign, std::move(word)};
}

int word_degree(const GradedSpace &space, std::span<const int> word) {
  int d = 0;
  for (int g : word)
    d += space.degree(g);
  return d;
}

namespace {

void extend_monomials(const GradedSpace &space, int length, Word &prefix, int start,
                      std::vector<Word> &out) {
  if (static_cast<int>(prefix.size()) == length) {
    out.push_back(prefix);
    return;
  }
  for (int g = start; g < static_cast<int>(space.dim()); ++g) {
    prefix.push_back(g);
    extend_monomials(space, length, prefix, space.is_odd(g) ? g + 1 : g, out);
    prefix.pop_back();
  }
}

void extend_words(int dim, int length, Word &prefix, std::vector<Word> &out) {
  if (static_cast<int>(prefix.size()) == length) {
    out.push_back(prefix);
    return;
  }
  for (int g = 0; g < dim; ++g) {
    prefix.push_back(g);
    extend_words(dim, length, prefix, out);
    prefix.pop_back();
  }
}

void extend_partitions(int n, int next, std::vector<std::vector<int>> &blocks,
                       std::vector<std::vector<std::vector<int>>> &out) {
  if (next == n) {
    out.push_back(blocks);
    return;
  }
  // index loop: the recursion appends to `blocks`, so references would dangle
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    blocks[i].push_back(next);
    extend_partitions(n, next + 1, blocks, out);
    blocks[i].pop_back();
  }
  blocks.push_back({next});
  extend_partitions(n, next + 1, blocks, out);
  blocks.pop_back();
}

} // namespace

std::vector<Word> symmetric_monomials(const GradedSpace &space, int length) {
  std::vector<Word> out;
  Word prefix;
  extend_monomials(space, length, prefix, 0, out);
  return out;
}

std::vector<Word> tensor_words(const GradedSpace &space, int length) {
  std::vector<Word> out;
  Word prefix;
  extend_words(static_cast<int>(space.dim()), length, prefix, out);
  return out;
}

std::vector<std::vector<std::vector<int>>> set_partitions(int n) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> blocks;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  extend_partitions(n, 0, blocks, out);
  return out;
}

CanonicalWord multiply_words(const GradedSpace &space, const Word &a, const Word &b) {
  Word joined = a;
  joined.insert(joined.end(), b.begin(), b.end());
  return canonicalize(space, std::move(joined));
}

} // namespace linf

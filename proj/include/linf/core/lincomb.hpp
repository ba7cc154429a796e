#pragma once

#include <map>
#include <vector>

#include "linf/core/scalar.hpp"

namespace linf {

/// Sparse formal linear combination over an ordered key set.
/// Zero coefficients are never stored.
template <class Key> class LinComb {
public:
  using Terms = std::map<Key, Scalar>;

  LinComb() = default;
  LinComb(const Key &k, const Scalar &c) { add(k, c); }

  void add(const Key &k, const Scalar &c) {
    if (c.is_zero())
      return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero())
        terms_.erase(it);
    }
  }

  void add(const LinComb &other, const Scalar &factor = Scalar(1)) {
    if (factor.is_zero())
      return;
    for (const auto &[k, c] : other.terms_)
      add(k, c * factor);
  }

  Scalar coefficient(const Key &k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms &terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  LinComb scaled(const Scalar &factor) const {
    LinComb out;
    out.add(*this, factor);
    return out;
  }

  LinComb &operator+=(const LinComb &o) { add(o); return *this; }
  LinComb &operator-=(const LinComb &o) { add(o, Scalar(-1)); return *this; }
  friend LinComb operator+(LinComb a, const LinComb &b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb &b) { return a -= b; }
  LinComb operator-() const { return scaled(Scalar(-1)); }

  friend bool operator==(const LinComb &a, const LinComb &b) { return a.terms_ == b.terms_; }

private:
  Terms terms_;
};

/// A word of generator indices: a tensor monomial, or a symmetric monomial
/// when non-decreasing.
using Word = std::vector<int>;

/// Linear combination of generators.
using Vector = LinComb<int>;

/// Element of the (non-reduced) symmetric coalgebra: combination of canonical
/// symmetric monomials. The empty word is the unit 1.
using SymElement = LinComb<Word>;

} // namespace linf

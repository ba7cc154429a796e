#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace linf {

/// Exact rational number. Always in lowest terms with positive denominator.
class Scalar {
public:
  Scalar() = default;
  Scalar(long value) : value_(value) {} // NOLINT(google-explicit-constructor)
  Scalar(long num, long den);
  explicit Scalar(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  /// Accepts "p", "-p", "+p" or "p/q" with q != 0. Throws ParseError otherwise.
  static Scalar parse(std::string_view text);

  /// "p" for integers, "p/q" otherwise.
  std::string str() const;

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }
  bool is_integer() const { return value_.get_den() == 1; }
  const mpq_class &raw() const { return value_; }

  Scalar operator-() const { return Scalar(mpq_class(-value_)); }
  Scalar &operator+=(const Scalar &o) { value_ += o.value_; return *this; }
  Scalar &operator-=(const Scalar &o) { value_ -= o.value_; return *this; }
  Scalar &operator*=(const Scalar &o) { value_ *= o.value_; return *this; }
  Scalar &operator/=(const Scalar &o);

  friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar &b) { return a /= b; }

  friend bool operator==(const Scalar &a, const Scalar &b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Scalar &a, const Scalar &b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream &operator<<(std::ostream &os, const Scalar &s) { return os << s.str(); }

private:
  mpq_class value_;
};

/// (-1)^e as a machine sign.
inline int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

} // namespace linf

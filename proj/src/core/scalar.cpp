#include "linf/core/scalar.hpp"

#include <cctype>

#include "linf/core/errors.hpp"

namespace linf {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty())
    return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return false;
  return true;
}

} // namespace

Scalar::Scalar(long num, long den) {
  if (den == 0)
    throw ArgumentError("zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Scalar &Scalar::operator/=(const Scalar &o) {
  if (o.is_zero())
    throw ArgumentError("division by zero");
  value_ /= o.value_;
  return *this;
}

Scalar Scalar::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("invalid rational literal \"" + std::string(text) + "\"");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0)
    throw ParseError("zero denominator in rational literal \"" + std::string(text) + "\"");
  if (negative)
    n = -n;
  return Scalar(mpq_class(n, d));
}

std::string Scalar::str() const {
  if (is_integer())
    return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

} // namespace linf

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace fmstab {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when a value violates a documented precondition or invariant.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when two operands live on different numerical lattices.
class ContextMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Raised by the text parsers (rationals, classes, surds, configs).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline int sign(const Rational& q) { return q.sign(); }

inline bool is_integer(const Rational& q) { return denominator_of(q) == 1; }

inline Rational factorial(int n) {
  if (n < 0) throw DomainError("factorial of negative integer");
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return Rational(f);
}

inline Rational pow(const Rational& base, int e) {
  if (e < 0) {
    if (base == 0) throw DomainError("zero raised to a negative power");
    return pow(Rational(1) / base, -e);
  }
  Rational out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

/// Largest integer not exceeding q.
inline Integer floor(const Rational& q) {
  Integer n = numerator_of(q), d = denominator_of(q);
  Integer quot = n / d;  // truncates toward zero
  if (n < 0 && quot * d != n) quot -= 1;
  return quot;
}

inline Integer ceil(const Rational& q) { return -floor(-q); }

/// Canonical "p/q" form, always with an explicit denominator.
inline std::string to_fraction_string(const Rational& q) {
  return numerator_of(q).str() + "/" + denominator_of(q).str();
}

/// Short form: "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) {
  if (is_integer(q)) return numerator_of(q).str();
  return to_fraction_string(q);
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline Integer parse_integer(std::string_view s, std::string_view whole) {
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw ParseError("malformed rational literal '" + std::string(whole) + "'");
  for (char c : digits) {
    if (c < '0' || c > '9') throw ParseError("malformed rational literal '" + std::string(whole) + "'");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace detail

/// Parses "p/q" (q > 0, gcd(p, q) = 1) or the integer shorthand "p".
inline Rational parse_rational(std::string_view text) {
  std::string_view s = detail::trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(detail::parse_integer(s, text));
  std::string_view num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!den.empty() && (den.front() == '-' || den.front() == '+'))
    throw ParseError("denominator must be a positive integer in '" + std::string(text) + "'");
  Integer p = detail::parse_integer(num, text);
  Integer q = detail::parse_integer(den, text);
  if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  if (boost::multiprecision::gcd(p, q) != 1)
    throw ParseError("rational literal '" + std::string(text) + "' is not in reduced form");
  return Rational(p, q);
}

}  // namespace fmstab

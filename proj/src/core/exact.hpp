#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "core/errors.hpp"

namespace pmx {

// Exact extended value: an arbitrary-precision rational or +infinity.
//
// The order is total: finite values compare exactly, +infinity is greater
// than every finite value and equal to itself. Arithmetic on finite values
// is exact; finite + inf = inf, inf - finite = inf. inf - inf is rejected.
// No floating point anywhere.
class ExactValue {
 public:
  using Rational = boost::multiprecision::cpp_rational;

  ExactValue() : q_(0) {}
  ExactValue(long long n) : q_(n) {}  // NOLINT: implicit by design
  explicit ExactValue(Rational q) : q_(std::move(q)) {}

  static ExactValue infinity() {
    ExactValue v;
    v.infinite_ = true;
    return v;
  }
  static ExactValue fraction(long long num, long long den);

  // Accepts "inf", "p", "-p", "p/q" with arbitrary-precision integers.
  static ExactValue parse(const std::string& text);

  bool is_infinite() const { return infinite_; }
  bool is_zero() const { return !infinite_ && q_ == 0; }
  bool is_negative() const { return !infinite_ && q_ < 0; }
  const Rational& rational() const;

  // "inf", "p", or "p/q" in lowest terms.
  std::string str() const;

  ExactValue operator+(const ExactValue& o) const;
  ExactValue operator-(const ExactValue& o) const;
  ExactValue operator*(const ExactValue& o) const;
  ExactValue& operator+=(const ExactValue& o) { return *this = *this + o; }

  // -1 / 0 / +1 with inf handling; inf vs inf compares equal.
  int compare(const ExactValue& o) const;

  bool operator==(const ExactValue& o) const { return compare(o) == 0; }
  bool operator!=(const ExactValue& o) const { return compare(o) != 0; }
  bool operator<(const ExactValue& o) const { return compare(o) < 0; }
  bool operator<=(const ExactValue& o) const { return compare(o) <= 0; }
  bool operator>(const ExactValue& o) const { return compare(o) > 0; }
  bool operator>=(const ExactValue& o) const { return compare(o) >= 0; }

 private:
  bool infinite_ = false;
  Rational q_;
};

// Strict lexicographic order on equal-length vectors of exact values.
bool lex_less(const std::vector<ExactValue>& a, const std::vector<ExactValue>& b);

}  // namespace pmx

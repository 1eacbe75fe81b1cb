#include "core/exact.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace pmx {

using Int = boost::multiprecision::cpp_int;

ExactValue ExactValue::fraction(long long num, long long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  return ExactValue(Rational(Int(num), Int(den)));
}

const ExactValue::Rational& ExactValue::rational() const {
  if (infinite_) throw DomainError("rational() on infinite value");
  return q_;
}

ExactValue ExactValue::parse(const std::string& text) {
  if (text.empty()) throw InputError("empty exact value");
  if (text == "inf" || text == "+inf") return infinity();
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return ExactValue(Rational(Int(text)));
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (den == 0) throw InputError("exact value with zero denominator: " + text);
    return ExactValue(Rational(num, den));
  } catch (const std::runtime_error&) {
    throw InputError("malformed exact value: \"" + text + "\"");
  }
}

std::string ExactValue::str() const {
  if (infinite_) return "inf";
  const Int num = boost::multiprecision::numerator(q_);
  const Int den = boost::multiprecision::denominator(q_);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

ExactValue ExactValue::operator+(const ExactValue& o) const {
  if (infinite_ || o.infinite_) return infinity();
  return ExactValue(q_ + o.q_);
}

ExactValue ExactValue::operator-(const ExactValue& o) const {
  if (o.infinite_) {
    if (infinite_) throw DomainError("inf - inf is undefined");
    throw DomainError("finite - inf is undefined for costs");
  }
  if (infinite_) return infinity();
  return ExactValue(q_ - o.q_);
}

ExactValue ExactValue::operator*(const ExactValue& o) const {
  if (infinite_ || o.infinite_) {
    if (is_zero() || o.is_zero()) throw DomainError("0 * inf is undefined");
    return infinity();
  }
  return ExactValue(q_ * o.q_);
}

int ExactValue::compare(const ExactValue& o) const {
  if (infinite_ && o.infinite_) return 0;
  if (infinite_) return 1;
  if (o.infinite_) return -1;
  if (q_ < o.q_) return -1;
  if (q_ > o.q_) return 1;
  return 0;
}

bool lex_less(const std::vector<ExactValue>& a, const std::vector<ExactValue>& b) {
  if (a.size() != b.size())
    throw DomainError("lexicographic comparison of unequal-length vectors");
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int c = a[i].compare(b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace pmx

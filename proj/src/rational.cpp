#include "naryd/rational.hpp"

#include <stdexcept>

namespace naryd {

Rational::Rational(long numerator, long denominator) : Rational(mpz_class(numerator), mpz_class(denominator)) {}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) {
    throw std::invalid_argument("rational with zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  // U+2212 MINUS SIGN, as typeset in some reports.
  static const std::string kUnicodeMinus = "\xE2\x88\x92";
  if (s.rfind(kUnicodeMinus, 0) == 0) {
    s = "-" + s.substr(kUnicodeMinus.size());
  }
  const auto bad = [&] { return std::invalid_argument("malformed rational \"" + std::string(text) + "\""); };
  if (s.empty()) throw bad();
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  const auto digits_only = [](const std::string& t, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') return false;
    }
    return true;
  };
  if (!digits_only(num, true) || !digits_only(den, false)) throw bad();
  mpz_class p(num[0] == '+' ? num.substr(1) : num, 10);
  mpz_class q(den, 10);
  if (q == 0) throw std::invalid_argument("rational with zero denominator");
  return Rational(p, q);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational");
  value_ /= o.value_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero rational");
  return Rational(mpq_class(1 / value_));
}

}  // namespace naryd

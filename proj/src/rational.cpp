#include "hkas/rational.hpp"

#include <cctype>

#include "hkas/error.hpp"

namespace hkas {

namespace {

BigInt parse_integer(std::string_view text, bool allow_sign, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (allow_sign && i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) {
    throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(whole) + "'");
  }
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(whole) + "'");
    }
    value = value * 10 + (text[i] - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(value) {}

Rational::Rational(BigInt numerator, BigInt denominator) {
  if (denominator == 0) {
    throw Error(ErrorCode::ParseError, "zero denominator");
  }
  value_ = boost::multiprecision::cpp_rational(std::move(numerator), std::move(denominator));
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, true, text), BigInt(1));
  }
  BigInt num = parse_integer(text.substr(0, slash), true, text);
  BigInt den = parse_integer(text.substr(slash + 1), false, text);
  return Rational(std::move(num), std::move(den));
}

BigInt Rational::numerator() const { return boost::multiprecision::numerator(value_); }
BigInt Rational::denominator() const { return boost::multiprecision::denominator(value_); }

bool Rational::is_zero() const { return value_ == 0; }
bool Rational::is_positive() const { return value_ > 0; }

double Rational::to_double() const { return value_.convert_to<double>(); }

std::string Rational::to_string() const {
  return numerator().str() + "/" + denominator().str();
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.value_ == 0) {
    throw Error(ErrorCode::ProbabilityError, "division by zero");
  }
  value_ /= other.value_;
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (b.value_ < a.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace hkas

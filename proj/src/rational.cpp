#include "sarx/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace sarx {

namespace {

bool allDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void malformed(std::string_view text) {
  throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Rational parseRational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) malformed(text);

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational result;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!allDigits(num) || !allDigits(den)) malformed(text);
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    result = Rational(n, d);
    result.canonicalize();
  } else {
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      auto expText = s.substr(e + 1);
      bool expNegative = false;
      if (!expText.empty() && (expText.front() == '+' || expText.front() == '-')) {
        expNegative = expText.front() == '-';
        expText.remove_prefix(1);
      }
      if (!allDigits(expText) || expText.size() > 6) malformed(text);
      exponent = std::stol(std::string(expText));
      if (expNegative) exponent = -exponent;
      s = s.substr(0, e);
    }
    std::string_view intPart = s;
    std::string_view fracPart;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
      intPart = s.substr(0, dot);
      fracPart = s.substr(dot + 1);
    }
    if (intPart.empty() && fracPart.empty()) malformed(text);
    if (!intPart.empty() && !allDigits(intPart)) malformed(text);
    if (!fracPart.empty() && !allDigits(fracPart)) malformed(text);
    std::string digits = std::string(intPart) + std::string(fracPart);
    mpz_class mantissa(digits, 10);
    exponent -= static_cast<long>(fracPart.size());
    if (exponent >= 0) {
      result = Rational(mantissa * pow10(static_cast<unsigned long>(exponent)));
    } else {
      result = Rational(mantissa, pow10(static_cast<unsigned long>(-exponent)));
      result.canonicalize();
    }
  }
  return negative ? Rational(-result) : result;
}

std::string toFractionString(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace sarx

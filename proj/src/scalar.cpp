#include "cliffwave/scalar.hpp"

#include <stdexcept>

namespace cliffwave {

Exact& Exact::operator/=(const Exact& o) {
  mpq_class den = o.re * o.re + o.im * o.im;
  if (sgn(den) == 0) throw std::domain_error("Exact: division by zero");
  mpq_class r = (re * o.re + im * o.im) / den;
  mpq_class i = (im * o.re - re * o.im) / den;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

std::string Exact::str() const {
  if (sgn(im) == 0) return re.get_str();
  if (sgn(re) == 0) return im.get_str() + "i";
  std::string s = re.get_str();
  s += sgn(im) > 0 ? "+" : "";
  return s + im.get_str() + "i";
}

mpq_class parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
  auto dot = text.find('.');
  auto exp = text.find_first_of("eE");
  if (dot == std::string::npos && exp == std::string::npos) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("parse_rational: bad rational '" + text + "'");
    q.canonicalize();
    if (sgn(q.get_den()) == 0) throw std::invalid_argument("parse_rational: zero denominator");
    return q;
  }
  // Decimal literal: exact value of the written digits.
  std::string mant = exp == std::string::npos ? text : text.substr(0, exp);
  long e10 = exp == std::string::npos ? 0 : std::stol(text.substr(exp + 1));
  std::string digits;
  for (char c : mant) {
    if (c == '.') continue;
    digits += c;
  }
  if (dot != std::string::npos) {
    std::size_t frac_end = exp == std::string::npos ? text.size() : exp;
    e10 -= static_cast<long>(frac_end - dot - 1);
  }
  mpz_class num;
  if (num.set_str(digits, 10) != 0) throw std::invalid_argument("parse_rational: bad decimal '" + text + "'");
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(e10 < 0 ? -e10 : e10));
  mpq_class q = e10 < 0 ? mpq_class(num, pow10) : mpq_class(num * pow10);
  q.canonicalize();
  return q;
}

}  // namespace cliffwave

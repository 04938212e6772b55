#pragma once

#include <complex>
#include <string>

#include <gmpxx.h>

namespace cliffwave {

using Approx = std::complex<double>;

// Complex number with arbitrary-precision rational parts.
struct Exact {
  mpq_class re{0};
  mpq_class im{0};

  Exact() = default;
  Exact(long v) : re(v) {}
  Exact(int v) : re(v) {}
  Exact(mpq_class r) : re(std::move(r)) { re.canonicalize(); }
  Exact(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {
    re.canonicalize();
    im.canonicalize();
  }

  static Exact rational(long num, long den = 1) { return Exact(mpq_class(num, den)); }
  static Exact imag_unit() { return Exact(mpq_class(0), mpq_class(1)); }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  Exact conj() const { return Exact(re, -im); }

  Exact& operator+=(const Exact& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Exact& operator-=(const Exact& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Exact& operator*=(const Exact& o) {
    mpq_class r = re * o.re - im * o.im;
    mpq_class i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  Exact& operator/=(const Exact& o);

  friend Exact operator+(Exact a, const Exact& b) { return a += b; }
  friend Exact operator-(Exact a, const Exact& b) { return a -= b; }
  friend Exact operator*(Exact a, const Exact& b) { return a *= b; }
  friend Exact operator/(Exact a, const Exact& b) { return a /= b; }
  Exact operator-() const { return Exact(-re, -im); }

  friend bool operator==(const Exact& a, const Exact& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const Exact& a, const Exact& b) { return !(a == b); }

  Approx to_approx() const { return {re.get_d(), im.get_d()}; }
  std::string str() const;
};

// Uniform helpers so templated algebra code can work over both backends.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Exact> {
  static constexpr bool exact = true;
  static Exact zero() { return Exact(); }
  static Exact one() { return Exact(1); }
  static Exact i() { return Exact::imag_unit(); }
  static bool is_zero(const Exact& s) { return s.is_zero(); }
  static Exact conj(const Exact& s) { return s.conj(); }
  static Exact from_int(long v) { return Exact(v); }
  static Exact from_rational(long num, long den) { return Exact::rational(num, den); }
  static Approx to_approx(const Exact& s) { return s.to_approx(); }
  static double abs2(const Exact& s) { return mpq_class(s.re * s.re + s.im * s.im).get_d(); }
};

template <>
struct ScalarTraits<Approx> {
  static constexpr bool exact = false;
  static Approx zero() { return {0.0, 0.0}; }
  static Approx one() { return {1.0, 0.0}; }
  static Approx i() { return {0.0, 1.0}; }
  // Only exact zeros are dropped; round-off residue is kept so nothing is silently lost.
  static bool is_zero(const Approx& s) { return s.real() == 0.0 && s.imag() == 0.0; }
  static Approx conj(const Approx& s) { return std::conj(s); }
  static Approx from_int(long v) { return {static_cast<double>(v), 0.0}; }
  static Approx from_rational(long num, long den) {
    return {static_cast<double>(num) / static_cast<double>(den), 0.0};
  }
  static Approx to_approx(const Approx& s) { return s; }
  static double abs2(const Approx& s) { return std::norm(s); }
};

// Parses "p/q", "p" or a decimal literal into an exact rational.
mpq_class parse_rational(const std::string& text);

}  // namespace cliffwave

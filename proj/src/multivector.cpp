#include "cliffwave/multivector.hpp"

#include <cmath>
#include <sstream>

namespace cliffwave {

namespace {

// Solves (left multiplication by a) y = 1 with Gaussian elimination.
template <class S, class IsZero, class Pick>
Multivector<S> invert_impl(const Multivector<S>& a, IsZero is_zero, Pick better_pivot) {
  const int dim = a.dim();
  if (dim > 12) throw std::invalid_argument("inverse: algebra too large");
  const std::size_t n = std::size_t{1} << dim;
  using Traits = ScalarTraits<S>;
  std::vector<std::vector<S>> m(n, std::vector<S>(n + 1, Traits::zero()));
  for (std::size_t col = 0; col < n; ++col) {
    Multivector<S> prod = a * Multivector<S>::blade(dim, static_cast<Blade>(col));
    for (const auto& [b, s] : prod.terms()) m[b][col] = s;
  }
  m[0][n] = Traits::one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = n;
    for (std::size_t r = col; r < n; ++r) {
      if (is_zero(m[r][col])) continue;
      if (piv == n || better_pivot(m[r][col], m[piv][col])) piv = r;
    }
    if (piv == n) throw std::domain_error("inverse: element is not invertible");
    std::swap(m[piv], m[col]);
    S inv = Traits::one() / m[col][col];
    for (std::size_t c = col; c <= n; ++c) m[col][c] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || is_zero(m[r][col])) continue;
      S f = m[r][col];
      for (std::size_t c = col; c <= n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  Multivector<S> y(dim);
  for (std::size_t r = 0; r < n; ++r) y.add(static_cast<Blade>(r), m[r][n]);
  return y;
}

template <class S>
std::string to_string_impl(const Multivector<S>& a, auto fmt) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, s] : a.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << fmt(s) << ")";
    if (b != 0) {
      os << "e";
      for (int i = 0; i < a.dim(); ++i)
        if (b & (Blade{1} << i)) os << "_" << i;
    }
  }
  return os.str();
}

}  // namespace

ExactMV inverse(const ExactMV& a) {
  return invert_impl<Exact>(
      a, [](const Exact& s) { return s.is_zero(); }, [](const Exact&, const Exact&) { return false; });
}

ApproxMV inverse(const ApproxMV& a) {
  double scale = std::sqrt(a.norm2());
  double tiny = 1e-14 * (scale > 0 ? scale : 1.0);
  return invert_impl<Approx>(
      a, [tiny](const Approx& s) { return std::abs(s) <= tiny; },
      [](const Approx& x, const Approx& y) { return std::abs(x) > std::abs(y); });
}

double max_abs_diff(const ApproxMV& a, const ApproxMV& b) {
  ApproxMV d = a - b;
  double m = 0.0;
  for (const auto& [blade, s] : d.terms()) m = std::max(m, std::abs(s));
  return m;
}

std::string to_string(const ExactMV& a) {
  return to_string_impl(a, [](const Exact& s) { return s.str(); });
}

std::string to_string(const ApproxMV& a) {
  return to_string_impl(a, [](const Approx& s) {
    std::ostringstream os;
    os << s.real();
    if (s.imag() != 0.0) os << (s.imag() > 0 ? "+" : "") << s.imag() << "i";
    return os.str();
  });
}

}  // namespace cliffwave

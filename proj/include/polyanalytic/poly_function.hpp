#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polyanalytic/power_series.hpp"

namespace polyanalytic {

/// A q-analytic function f(z) = sum_{k<q} conj(z)^k h_k(z) with polynomial
/// analytic components h_k.
///
/// Coefficients live in a dense q x width matrix: coeffs(k, j) multiplies
/// conj(z)^k z^j. q is declared, not inferred, so a zero top row is kept.
template <typename Scalar>
class PolyFunction {
 public:
  using Complex = std::complex<Scalar>;
  using CoeffMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  using ComplexArray = Eigen::Array<Complex, Eigen::Dynamic, 1>;

  /// The zero function, q = 1.
  PolyFunction() : coeffs_(CoeffMatrix::Zero(1, 1)) {}

  explicit PolyFunction(CoeffMatrix coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.rows() < 1) throw std::invalid_argument("PolyFunction: q must be >= 1");
    if (coeffs_.cols() < 1) coeffs_ = CoeffMatrix::Zero(coeffs_.rows(), 1);
  }

  explicit PolyFunction(const std::vector<PowerSeries<Scalar>>& components) {
    if (components.empty()) throw std::invalid_argument("PolyFunction: q must be >= 1");
    Eigen::Index width = 1;
    for (const auto& h : components) width = std::max(width, h.coeffs().size());
    coeffs_ = CoeffMatrix::Zero(static_cast<Eigen::Index>(components.size()), width);
    for (std::size_t k = 0; k < components.size(); ++k) {
      const auto& c = components[k].coeffs();
      coeffs_.row(static_cast<Eigen::Index>(k)).head(c.size()) = c.transpose();
    }
  }

  static PolyFunction constant(Complex c) {
    CoeffMatrix m(1, 1);
    m(0, 0) = c;
    return PolyFunction(std::move(m));
  }

  int q() const { return static_cast<int>(coeffs_.rows()); }
  Eigen::Index width() const { return coeffs_.cols(); }
  const CoeffMatrix& coeffs() const { return coeffs_; }
  Complex coeff(Eigen::Index k, Eigen::Index j) const {
    return k < coeffs_.rows() && j < coeffs_.cols() ? coeffs_(k, j) : Complex(0);
  }

  PowerSeries<Scalar> component(int k) const {
    return PowerSeries<Scalar>(typename PowerSeries<Scalar>::Coeffs(coeffs_.row(k).transpose()));
  }
  std::vector<PowerSeries<Scalar>> components() const {
    std::vector<PowerSeries<Scalar>> out;
    for (int k = 0; k < q(); ++k) out.push_back(component(k));
    return out;
  }

  bool is_zero() const {
    return (coeffs_.array() == Complex(0)).all();
  }

  Complex operator()(const Complex& z) const {
    const Complex zbar = std::conj(z);
    Complex acc(0);
    for (int k = q() - 1; k >= 0; --k) acc = acc * zbar + row_at(k, z);
    return acc;
  }

  ComplexArray operator()(const ComplexArray& z) const {
    const ComplexArray zbar = z.conjugate();
    ComplexArray acc = ComplexArray::Zero(z.size());
    bool started = false;
    for (int k = q() - 1; k >= 0; --k) {
      const Eigen::Index top = row_degree(k);
      if (started) acc *= zbar;
      if (top < 0) continue;
      started = true;
      ComplexArray h = ComplexArray::Constant(z.size(), coeffs_(k, top));
      for (Eigen::Index j = top - 1; j >= 0; --j) h = h * z + coeffs_(k, j);
      acc += h;
    }
    return acc;
  }

  /// Coefficient equality after zero-padding both operands to a common shape.
  friend bool operator==(const PolyFunction& a, const PolyFunction& b) {
    const Eigen::Index rows = std::max(a.coeffs_.rows(), b.coeffs_.rows());
    const Eigen::Index cols = std::max(a.coeffs_.cols(), b.coeffs_.cols());
    for (Eigen::Index k = 0; k < rows; ++k)
      for (Eigen::Index j = 0; j < cols; ++j)
        if (a.coeff(k, j) != b.coeff(k, j)) return false;
    return true;
  }

 private:
  Eigen::Index row_degree(int k) const {
    for (Eigen::Index j = coeffs_.cols() - 1; j >= 0; --j)
      if (coeffs_(k, j) != Complex(0)) return j;
    return -1;
  }

  Complex row_at(int k, const Complex& z) const {
    Complex acc(0);
    for (Eigen::Index j = row_degree(k); j >= 0; --j) acc = acc * z + coeffs_(k, j);
    return acc;
  }

  CoeffMatrix coeffs_;
};

/// Dilation factor r of f_r(z) = f(r z); 0 < r <= 1.
template <typename Scalar>
class DilationFactor {
 public:
  explicit DilationFactor(Scalar r) : r_(r) {
    if (!(r > Scalar(0) && r <= Scalar(1)))
      throw std::invalid_argument("dilation factor must lie in (0, 1], got " + std::to_string(r));
  }
  Scalar value() const { return r_; }

 private:
  Scalar r_;
};

template <typename Scalar>
std::complex<Scalar> eval(const PolyFunction<Scalar>& f, const std::complex<Scalar>& z) {
  return f(z);
}

template <typename Scalar>
typename PolyFunction<Scalar>::ComplexArray eval(const PolyFunction<Scalar>& f,
                                                 const typename PolyFunction<Scalar>::ComplexArray& z) {
  return f(z);
}

/// Holomorphic Wirtinger derivative: d/dz (conj(z)^k h_k) = conj(z)^k h_k'.
template <typename Scalar>
PolyFunction<Scalar> d_z(const PolyFunction<Scalar>& f) {
  using M = typename PolyFunction<Scalar>::CoeffMatrix;
  const Eigen::Index n = f.width();
  if (n <= 1) return PolyFunction<Scalar>(M::Zero(f.q(), 1));
  M out(f.q(), n - 1);
  for (Eigen::Index k = 0; k < f.q(); ++k)
    for (Eigen::Index j = 1; j < n; ++j) out(k, j - 1) = f.coeffs()(k, j) * Scalar(j);
  return PolyFunction<Scalar>(std::move(out));
}

/// Antiholomorphic Wirtinger derivative. Lowers q by one (never below 1):
/// component k of the result is (k + 1) h_{k+1}.
template <typename Scalar>
PolyFunction<Scalar> d_zbar(const PolyFunction<Scalar>& f) {
  using M = typename PolyFunction<Scalar>::CoeffMatrix;
  if (f.q() == 1) return PolyFunction<Scalar>(M::Zero(1, f.width()));
  M out(f.q() - 1, f.width());
  for (Eigen::Index k = 0; k + 1 < f.q(); ++k) out.row(k) = f.coeffs().row(k + 1) * Scalar(k + 1);
  return PolyFunction<Scalar>(std::move(out));
}

/// f_r(z) = f(r z): coefficient of conj(z)^k z^j scales by r^(k+j).
template <typename Scalar>
PolyFunction<Scalar> dilate(const PolyFunction<Scalar>& f, DilationFactor<Scalar> factor) {
  const Scalar r = factor.value();
  const Eigen::Index top = f.q() + f.width();
  std::vector<Scalar> power(static_cast<std::size_t>(top), Scalar(1));
  for (Eigen::Index n = 1; n < top; ++n) power[n] = power[n - 1] * r;
  auto out = f.coeffs();
  for (Eigen::Index k = 0; k < out.rows(); ++k)
    for (Eigen::Index j = 0; j < out.cols(); ++j) out(k, j) *= power[k + j];
  return PolyFunction<Scalar>(std::move(out));
}

/// Drops every z^j term with j > m; the conj(z) degree is untouched.
template <typename Scalar>
PolyFunction<Scalar> truncate(const PolyFunction<Scalar>& f, int m) {
  if (m < 0) throw std::invalid_argument("truncate: m must be >= 0");
  const Eigen::Index keep = std::min<Eigen::Index>(f.width(), m + 1);
  return PolyFunction<Scalar>(typename PolyFunction<Scalar>::CoeffMatrix(f.coeffs().leftCols(keep)));
}

/// Monomial key: (power of conj(z), power of z).
using Monomial = std::pair<int, int>;

template <typename Scalar>
PolyFunction<Scalar> from_monomials(const std::map<Monomial, std::complex<Scalar>>& entries, int q) {
  if (q < 1) throw std::invalid_argument("from_monomials: q must be >= 1");
  int width = 1;
  for (const auto& [key, c] : entries) {
    const auto [k, j] = key;
    if (k < 0 || j < 0) throw std::invalid_argument("from_monomials: negative exponent");
    if (k >= q)
      throw std::invalid_argument("from_monomials: conj(z) power " + std::to_string(k) + " >= q = " +
                                  std::to_string(q));
    width = std::max(width, j + 1);
  }
  typename PolyFunction<Scalar>::CoeffMatrix m = PolyFunction<Scalar>::CoeffMatrix::Zero(q, width);
  for (const auto& [key, c] : entries) m(key.first, key.second) = c;
  return PolyFunction<Scalar>(std::move(m));
}

namespace detail {
template <typename Scalar>
typename PolyFunction<Scalar>::CoeffMatrix padded(const PolyFunction<Scalar>& f, Eigen::Index rows,
                                                  Eigen::Index cols) {
  typename PolyFunction<Scalar>::CoeffMatrix m = PolyFunction<Scalar>::CoeffMatrix::Zero(rows, cols);
  m.topLeftCorner(f.q(), f.width()) = f.coeffs();
  return m;
}
}  // namespace detail

template <typename Scalar>
PolyFunction<Scalar> operator+(const PolyFunction<Scalar>& f, const PolyFunction<Scalar>& g) {
  const Eigen::Index rows = std::max(f.q(), g.q());
  const Eigen::Index cols = std::max(f.width(), g.width());
  return PolyFunction<Scalar>(detail::padded(f, rows, cols) + detail::padded(g, rows, cols));
}

/// Coefficient-wise difference; q = max(q_f, q_g).
template <typename Scalar>
PolyFunction<Scalar> sub(const PolyFunction<Scalar>& f, const PolyFunction<Scalar>& g) {
  const Eigen::Index rows = std::max(f.q(), g.q());
  const Eigen::Index cols = std::max(f.width(), g.width());
  return PolyFunction<Scalar>(detail::padded(f, rows, cols) - detail::padded(g, rows, cols));
}

template <typename Scalar>
PolyFunction<Scalar> operator-(const PolyFunction<Scalar>& f, const PolyFunction<Scalar>& g) {
  return sub(f, g);
}

template <typename Scalar>
PolyFunction<Scalar> operator*(const std::complex<Scalar>& c, const PolyFunction<Scalar>& f) {
  return PolyFunction<Scalar>(typename PolyFunction<Scalar>::CoeffMatrix(c * f.coeffs()));
}

/// conj(z)^k h(z) as a PolyFunction with q = k + 1.
template <typename Scalar>
PolyFunction<Scalar> zbar_power_times(int k, const PowerSeries<Scalar>& h) {
  std::vector<PowerSeries<Scalar>> comps(static_cast<std::size_t>(k) + 1);
  comps[static_cast<std::size_t>(k)] = h;
  return PolyFunction<Scalar>(comps);
}

using PowerSeriesd = PowerSeries<double>;
using PolyFunctiond = PolyFunction<double>;

}  // namespace polyanalytic

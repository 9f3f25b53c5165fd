#pragma once

#include <Eigen/Dense>

#include <complex>
#include <initializer_list>

namespace polyanalytic {

/// Truncated power series sum_j c_j z^j with complex coefficients.
///
/// The coefficient vector may carry trailing zeros; equality compares the
/// series after zero-padding, so {1, 0} == {1}.
template <typename Scalar>
class PowerSeries {
 public:
  using Complex = std::complex<Scalar>;
  using Coeffs = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;
  using ComplexArray = Eigen::Array<Complex, Eigen::Dynamic, 1>;

  PowerSeries() : coeffs_(Coeffs::Zero(1)) {}
  explicit PowerSeries(Coeffs coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() == 0) coeffs_ = Coeffs::Zero(1);
  }
  PowerSeries(std::initializer_list<Complex> coeffs) : coeffs_(Coeffs::Zero(std::max<Eigen::Index>(1, coeffs.size()))) {
    Eigen::Index j = 0;
    for (const auto& c : coeffs) coeffs_(j++) = c;
  }

  const Coeffs& coeffs() const { return coeffs_; }
  Complex coeff(Eigen::Index j) const { return j < coeffs_.size() ? coeffs_(j) : Complex(0); }
  Eigen::Index degree() const { return coeffs_.size() - 1; }

  /// Index of the last nonzero coefficient, or -1 for the zero series.
  Eigen::Index effective_degree() const {
    for (Eigen::Index j = coeffs_.size() - 1; j >= 0; --j)
      if (coeffs_(j) != Complex(0)) return j;
    return -1;
  }

  bool is_zero() const { return effective_degree() < 0; }

  Complex operator()(const Complex& z) const {
    Complex acc(0);
    for (Eigen::Index j = effective_degree(); j >= 0; --j) acc = acc * z + coeffs_(j);
    return acc;
  }

  ComplexArray operator()(const ComplexArray& z) const {
    const Eigen::Index top = effective_degree();
    if (top < 0) return ComplexArray::Zero(z.size());
    ComplexArray acc = ComplexArray::Constant(z.size(), coeffs_(top));
    for (Eigen::Index j = top - 1; j >= 0; --j) acc = acc * z + coeffs_(j);
    return acc;
  }

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
    const Eigen::Index n = std::max(a.coeffs_.size(), b.coeffs_.size());
    for (Eigen::Index j = 0; j < n; ++j)
      if (a.coeff(j) != b.coeff(j)) return false;
    return true;
  }

 private:
  Coeffs coeffs_;
};

template <typename Scalar>
PowerSeries<Scalar> derivative(const PowerSeries<Scalar>& h) {
  using Coeffs = typename PowerSeries<Scalar>::Coeffs;
  const Eigen::Index n = h.coeffs().size();
  if (n <= 1) return PowerSeries<Scalar>();
  Coeffs out(n - 1);
  for (Eigen::Index j = 1; j < n; ++j) out(j - 1) = h.coeffs()(j) * Scalar(j);
  return PowerSeries<Scalar>(std::move(out));
}

/// Taylor polynomial of exp(z) of the given degree.
template <typename Scalar>
PowerSeries<Scalar> exp_series(int degree) {
  typename PowerSeries<Scalar>::Coeffs c(degree + 1);
  Scalar term = 1;
  for (int j = 0; j <= degree; ++j) {
    if (j > 0) term /= Scalar(j);
    c(j) = term;
  }
  return PowerSeries<Scalar>(std::move(c));
}

}  // namespace polyanalytic

#pragma once

// Truncated Fock space: pure states, dense operators and density operators
// of a single bosonic mode, basis |0>, ..., |N-1>.

#include <Eigen/Dense>

#include <complex>

namespace wphase {

using Complex = std::complex<double>;

inline constexpr int kDefaultDim = 64;

/// Pure state amplitudes amps[n] = <n|psi>.
class FockVector {
 public:
  explicit FockVector(int dim);
  explicit FockVector(Eigen::VectorXcd amps);

  int dim() const { return static_cast<int>(amps_.size()); }
  Complex operator[](int n) const { return amps_[n]; }
  Complex& operator[](int n) { return amps_[n]; }
  const Eigen::VectorXcd& amps() const { return amps_; }

  double norm_squared() const { return amps_.squaredNorm(); }
  /// <this|other>
  Complex inner(const FockVector& other) const;

 private:
  Eigen::VectorXcd amps_;
};

/// Dense N x N operator; entry (s, r) = <s|A|r>.
class FockOperator {
 public:
  explicit FockOperator(int dim);
  explicit FockOperator(Eigen::MatrixXcd entries);

  static FockOperator identity(int dim);
  /// |ket><bra|
  static FockOperator outer(const FockVector& ket, const FockVector& bra);

  int dim() const { return static_cast<int>(m_.rows()); }
  Complex operator()(int s, int r) const { return m_(s, r); }
  Complex& operator()(int s, int r) { return m_(s, r); }
  const Eigen::MatrixXcd& matrix() const { return m_; }

  FockOperator adjoint() const { return FockOperator(Eigen::MatrixXcd(m_.adjoint())); }
  Complex trace() const { return m_.trace(); }
  /// ||A - A^dagger||_F
  double hermiticity_defect() const;
  double frobenius_norm() const { return m_.norm(); }
  /// max |A_sr|
  double max_abs() const;

  FockOperator operator*(const FockOperator& o) const;
  FockOperator operator+(const FockOperator& o) const;
  FockOperator operator-(const FockOperator& o) const;
  FockOperator operator*(Complex c) const { return FockOperator(Eigen::MatrixXcd(m_ * c)); }
  FockVector operator*(const FockVector& v) const;

 private:
  Eigen::MatrixXcd m_;
};

/// Hermitian, unit-trace, positive semidefinite operator. The constructor
/// validates all three; trace_tolerance absorbs truncation tails.
class DensityOperator {
 public:
  explicit DensityOperator(FockOperator op, double trace_tolerance = 1e-8);
  static DensityOperator pure(const FockVector& psi, double trace_tolerance = 1e-8);

  const FockOperator& op() const { return op_; }
  int dim() const { return op_.dim(); }
  /// Smallest eigenvalue, for diagnostics.
  double min_eigenvalue() const;

 private:
  FockOperator op_;
};

/// |n> in a space of dimension dim. Throws DimensionError if n >= dim.
FockVector fock_state(int n, int dim);

/// Sufficient truncation for coherent_state: |alpha|^2 + 10 sqrt(|alpha|^2 + 1).
int coherent_min_dim(Complex alpha);

/// Truncated coherent state, amplitudes exp(-|alpha|^2/2) alpha^n / sqrt(n!)
/// evaluated in log space. Throws TruncationError when dim is below
/// coherent_min_dim(alpha).
FockVector coherent_state(Complex alpha, int dim);

/// Tr[rho A]. Throws DimensionError on mismatched truncation.
Complex expectation(const DensityOperator& rho, const FockOperator& a);

/// diag(exp(i n theta)), n = 0..dim-1.
FockOperator number_rotation(double theta, int dim);

}  // namespace wphase

#include "wphase/hilbert.hpp"

#include <cmath>
#include <string>

#include "wphase/errors.hpp"

namespace wphase {

namespace {

void require_positive_dim(int dim) {
  if (dim <= 0) throw DimensionError("Fock space dimension must be positive, got " + std::to_string(dim));
}

void require_same_dim(int a, int b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": dimension mismatch " + std::to_string(a) + " vs " +
                         std::to_string(b));
  }
}

}  // namespace

FockVector::FockVector(int dim) {
  require_positive_dim(dim);
  amps_ = Eigen::VectorXcd::Zero(dim);
}

FockVector::FockVector(Eigen::VectorXcd amps) : amps_(std::move(amps)) { require_positive_dim(dim()); }

Complex FockVector::inner(const FockVector& other) const {
  require_same_dim(dim(), other.dim(), "FockVector::inner");
  return amps_.dot(other.amps_);  // Eigen conjugates the left operand
}

FockOperator::FockOperator(int dim) {
  require_positive_dim(dim);
  m_ = Eigen::MatrixXcd::Zero(dim, dim);
}

FockOperator::FockOperator(Eigen::MatrixXcd entries) : m_(std::move(entries)) {
  if (m_.rows() != m_.cols()) throw DimensionError("FockOperator must be square");
  require_positive_dim(dim());
}

FockOperator FockOperator::identity(int dim) {
  require_positive_dim(dim);
  return FockOperator(Eigen::MatrixXcd(Eigen::MatrixXcd::Identity(dim, dim)));
}

FockOperator FockOperator::outer(const FockVector& ket, const FockVector& bra) {
  require_same_dim(ket.dim(), bra.dim(), "FockOperator::outer");
  return FockOperator(Eigen::MatrixXcd(ket.amps() * bra.amps().adjoint()));
}

double FockOperator::hermiticity_defect() const { return (m_ - m_.adjoint()).norm(); }

double FockOperator::max_abs() const { return m_.cwiseAbs().maxCoeff(); }

FockOperator FockOperator::operator*(const FockOperator& o) const {
  require_same_dim(dim(), o.dim(), "FockOperator product");
  return FockOperator(Eigen::MatrixXcd(m_ * o.m_));
}

FockOperator FockOperator::operator+(const FockOperator& o) const {
  require_same_dim(dim(), o.dim(), "FockOperator sum");
  return FockOperator(Eigen::MatrixXcd(m_ + o.m_));
}

FockOperator FockOperator::operator-(const FockOperator& o) const {
  require_same_dim(dim(), o.dim(), "FockOperator difference");
  return FockOperator(Eigen::MatrixXcd(m_ - o.m_));
}

FockVector FockOperator::operator*(const FockVector& v) const {
  require_same_dim(dim(), v.dim(), "FockOperator action");
  return FockVector(Eigen::VectorXcd(m_ * v.amps()));
}

DensityOperator::DensityOperator(FockOperator op, double trace_tolerance) : op_(std::move(op)) {
  const double scale = std::max(1.0, op_.frobenius_norm());
  if (op_.hermiticity_defect() > 1e-12 * scale) {
    throw DomainError("DensityOperator: operator is not hermitian");
  }
  const Complex tr = op_.trace();
  if (std::abs(tr - 1.0) > trace_tolerance) {
    throw DomainError("DensityOperator: trace " + std::to_string(tr.real()) + " differs from 1");
  }
  if (min_eigenvalue() < -1e-10) throw DomainError("DensityOperator: operator is not positive semidefinite");
}

DensityOperator DensityOperator::pure(const FockVector& psi, double trace_tolerance) {
  return DensityOperator(FockOperator::outer(psi, psi), trace_tolerance);
}

double DensityOperator::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(op_.matrix(), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

FockVector fock_state(int n, int dim) {
  require_positive_dim(dim);
  if (n < 0 || n >= dim) {
    throw DimensionError("fock_state: index " + std::to_string(n) + " outside [0, " + std::to_string(dim) + ")");
  }
  FockVector v(dim);
  v[n] = 1.0;
  return v;
}

int coherent_min_dim(Complex alpha) {
  const double n_mean = std::norm(alpha);
  return static_cast<int>(std::ceil(n_mean + 10.0 * std::sqrt(n_mean + 1.0)));
}

FockVector coherent_state(Complex alpha, int dim) {
  require_positive_dim(dim);
  if (dim < coherent_min_dim(alpha)) {
    throw TruncationError("coherent_state: dim " + std::to_string(dim) + " below required " +
                          std::to_string(coherent_min_dim(alpha)) + " for |alpha| = " +
                          std::to_string(std::abs(alpha)));
  }
  FockVector v(dim);
  const double mod = std::abs(alpha);
  if (mod == 0.0) {
    v[0] = 1.0;
    return v;
  }
  const double log_mod = std::log(mod);
  const double arg = std::arg(alpha);
  const double half_n_mean = 0.5 * mod * mod;
  for (int n = 0; n < dim; ++n) {
    const double logmag = -half_n_mean + n * log_mod - 0.5 * std::lgamma(n + 1.0);
    v[n] = std::polar(std::exp(logmag), n * arg);
  }
  return v;
}

Complex expectation(const DensityOperator& rho, const FockOperator& a) {
  require_same_dim(rho.dim(), a.dim(), "expectation");
  // Tr[rho A] = sum_{s,r} rho(r,s) A(s,r)
  return rho.op().matrix().transpose().cwiseProduct(a.matrix()).sum();
}

FockOperator number_rotation(double theta, int dim) {
  FockOperator r(dim);
  for (int n = 0; n < dim; ++n) r(n, n) = std::polar(1.0, n * theta);
  return r;
}

}  // namespace wphase

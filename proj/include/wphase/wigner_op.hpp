#pragma once

// The Wigner phase operator rho_w(theta) in truncated Fock space.
//
// Entry (s, r) is <s|rho_w(theta)|r> = C(s, r) exp(i (s - r) theta) with a
// real theta-independent coefficient C. Three independent evaluators of the
// entry are provided: the finite alternating double sum, the terminating
// 2F1 closed form, and the (n, k, l) Fock decomposition restricted to the
// terms that reach |s><r|. The normal-ordered operator series itself is
// never summed.

#include <string_view>

#include "wphase/hilbert.hpp"

namespace wphase {

enum class ElementForm { DoubleSum, Hypergeometric, FockDecomposition };

std::string_view form_name(ElementForm form);

/// Largest dimension accepted by build_matrix and the matrix-level checks.
inline constexpr int kStabilityCeiling = 64;

Complex element_double_sum(int s, int r, double theta);
Complex element_hypergeometric(int s, int r, double theta);
Complex element_fock_decomposition(int s, int r, double theta);
Complex element(ElementForm form, int s, int r, double theta);

struct WignerPhaseMatrix {
  double theta;  // reduced to [0, 2 pi)
  FockOperator op;
  ElementForm form;
};

/// rho_w(0) for the given form: real coefficients C(s, r). Computed once per
/// form and shared (thread-safe cache); later calls slice the cached block.
const Eigen::MatrixXd& coefficient_matrix(int dim, ElementForm form = ElementForm::DoubleSum);

/// rho_w(theta) = R(theta) rho_w(0) R(theta)^dagger with R = number_rotation.
/// Throws DomainError when dim exceeds kStabilityCeiling.
WignerPhaseMatrix build_matrix(double theta, int dim, ElementForm form = ElementForm::DoubleSum);

/// Equispaced rectangle rule for int_0^{2 pi} rho_w(theta) d theta. Exact
/// (identity) once n_theta >= dim; below that entries with |s - r| a
/// multiple of n_theta alias.
FockOperator completeness_integral(int dim, int n_theta);

/// ||M^2 - M||_F for M = rho_w(theta).
double idempotence_defect(double theta, int dim);

}  // namespace wphase

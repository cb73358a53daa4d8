#pragma once

// Gauss rules generated from three-term recurrences. Nodes start from the
// Golub-Welsch eigenvalues and are polished by Newton iteration in wide
// precision; weights come from the Christoffel formula, so even the tiny
// outer weights are accurate to full relative precision.

#include <vector>

#include "wphase/wide.hpp"

namespace wphase {

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<WideReal> nodes_wide;
  std::vector<WideReal> weights_wide;

  int size() const { return static_cast<int>(nodes.size()); }
};

/// Rule for int_{-inf}^{inf} exp(-x^2) f(x) dx, exact for degree 2n - 1.
GaussRule gauss_hermite(int n);

/// Rule for int_0^inf t^alpha exp(-t) f(t) dt, exact for degree 2n - 1.
GaussRule gauss_laguerre(int n, double alpha);

/// Shared, thread-safe cache of gauss_hermite(n).
const GaussRule& gauss_hermite_cached(int n);

/// Rule for int_0^inf r exp(-r^2) f(r) dr, exact for polynomials f of degree
/// <= exact_degree. Nodes are signed radii: the even part of f is integrated
/// by Gauss-Laguerre (alpha = 0) and the odd part by Gauss-Laguerre
/// (alpha = 1/2) in t = r^2, evaluating f at +sqrt(t) and -sqrt(t).
struct RadialRule {
  int exact_degree = 0;
  std::vector<double> radii;
  std::vector<double> weights;
  std::vector<WideReal> radii_wide;
  std::vector<WideReal> weights_wide;

  int size() const { return static_cast<int>(radii.size()); }
};

RadialRule make_radial_rule(int exact_degree);

}  // namespace wphase

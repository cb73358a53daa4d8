#include "wphase/quadrature.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "wphase/errors.hpp"

namespace wphase {

namespace {

// Monic orthogonal polynomials p_{k+1} = (x - a_k) p_k - b_k p_{k-1}.
struct Recurrence {
  std::vector<WideReal> a;  // a_0 .. a_{n-1}
  std::vector<WideReal> b;  // b_0 (unused) .. b_{n-1}
  WideReal mu0;             // integral of the weight
};

struct PolyEval {
  WideReal p_n, dp_n, p_nm1;
};

PolyEval evaluate(const Recurrence& rec, const WideReal& x) {
  const int n = static_cast<int>(rec.a.size());
  WideReal p_prev = 0, p = 1, dp_prev = 0, dp = 0;
  for (int k = 0; k < n; ++k) {
    const WideReal shift = x - rec.a[k];
    const WideReal bk = k > 0 ? rec.b[k] : WideReal(0);
    const WideReal p_next = shift * p - bk * p_prev;
    const WideReal dp_next = p + shift * dp - bk * dp_prev;
    p_prev = p;
    p = p_next;
    dp_prev = dp;
    dp = dp_next;
  }
  return {p, dp, p_prev};
}

GaussRule gauss_from_recurrence(const Recurrence& rec) {
  const int n = static_cast<int>(rec.a.size());
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(std::max(n - 1, 0));
  for (int k = 0; k < n; ++k) diag[k] = static_cast<double>(rec.a[k]);
  for (int k = 1; k < n; ++k) sub[k - 1] = std::sqrt(static_cast<double>(rec.b[k]));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);

  WideReal norm_nm1 = rec.mu0;  // ||p_{n-1}||^2 = mu0 b_1 ... b_{n-1}
  for (int k = 1; k < n; ++k) norm_nm1 *= rec.b[k];

  static const WideReal newton_tol("1e-46");
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  rule.nodes_wide.resize(n);
  rule.weights_wide.resize(n);
  for (int i = 0; i < n; ++i) {
    WideReal x = es.eigenvalues()[i];
    for (int it = 0; it < 12; ++it) {
      const PolyEval ev = evaluate(rec, x);
      const WideReal dx = ev.p_n / ev.dp_n;
      x -= dx;
      if (boost::multiprecision::abs(dx) <= newton_tol * (1 + boost::multiprecision::abs(x))) break;
    }
    const PolyEval ev = evaluate(rec, x);
    const WideReal w = norm_nm1 / (ev.p_nm1 * ev.dp_n);
    rule.nodes_wide[i] = x;
    rule.weights_wide[i] = w;
    rule.nodes[i] = static_cast<double>(x);
    rule.weights[i] = static_cast<double>(w);
  }
  return rule;
}

void require_nodes(int n) {
  if (n < 1) throw DomainError("Gauss rule needs at least one node, got " + std::to_string(n));
}

}  // namespace

GaussRule gauss_hermite(int n) {
  require_nodes(n);
  Recurrence rec;
  rec.a.assign(n, WideReal(0));
  rec.b.resize(n);
  for (int k = 0; k < n; ++k) rec.b[k] = WideReal(k) / 2;
  rec.mu0 = boost::multiprecision::sqrt(boost::math::constants::pi<WideReal>());
  return gauss_from_recurrence(rec);
}

GaussRule gauss_laguerre(int n, double alpha) {
  require_nodes(n);
  if (!(alpha > -1.0)) throw DomainError("gauss_laguerre: alpha must exceed -1");
  const WideReal al(alpha);
  Recurrence rec;
  rec.a.resize(n);
  rec.b.resize(n);
  for (int k = 0; k < n; ++k) {
    rec.a[k] = 2 * k + al + 1;
    rec.b[k] = WideReal(k) * (k + al);
  }
  rec.mu0 = boost::multiprecision::tgamma(al + 1);
  return gauss_from_recurrence(rec);
}

const GaussRule& gauss_hermite_cached(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<GaussRule>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<GaussRule>(gauss_hermite(n));
  return *slot;
}

RadialRule make_radial_rule(int exact_degree) {
  if (exact_degree < 0) throw DomainError("make_radial_rule: negative degree");
  RadialRule rule;
  rule.exact_degree = exact_degree;
  auto push = [&](const WideReal& r, const WideReal& w) {
    rule.radii_wide.push_back(r);
    rule.weights_wide.push_back(w);
    rule.radii.push_back(static_cast<double>(r));
    rule.weights.push_back(static_cast<double>(w));
  };
  // Even part: degree floor(D/2) in t.
  const int even_nodes = (exact_degree / 2) / 2 + 1;
  const GaussRule even = gauss_laguerre(even_nodes, 0.0);
  for (int i = 0; i < even.size(); ++i) {
    const WideReal rho = boost::multiprecision::sqrt(even.nodes_wide[i]);
    const WideReal w = even.weights_wide[i] / 4;
    push(rho, w);
    push(-rho, w);
  }
  // Odd part f = r O(r^2): degree floor((D-1)/2) in t.
  if (exact_degree >= 1) {
    const int odd_nodes = ((exact_degree - 1) / 2) / 2 + 1;
    const GaussRule odd = gauss_laguerre(odd_nodes, 0.5);
    for (int j = 0; j < odd.size(); ++j) {
      const WideReal rho = boost::multiprecision::sqrt(odd.nodes_wide[j]);
      const WideReal w = odd.weights_wide[j] / (4 * rho);
      push(rho, w);
      push(-rho, -w);
    }
  }
  return rule;
}

}  // namespace wphase

#include "snlab/lethargy.hpp"

#include <cmath>

namespace snlab {

LethargyTarget::LethargyTarget(std::vector<double> d) : d_(std::move(d)) {
  if (d_.empty()) throw DomainError("LethargyTarget: empty target");
  for (std::size_t i = 0; i < d_.size(); ++i) {
    if (!(d_[i] > 0.0) || !std::isfinite(d_[i])) {
      throw DomainError("LethargyTarget: d_" + std::to_string(i) + " must be positive");
    }
    if (i > 0 && !(d_[i] < d_[i - 1])) {
      throw DomainError("LethargyTarget: not strictly decreasing at n = " + std::to_string(i));
    }
  }
}

KernelOperatorSpec kernel_spec(const LethargyTarget& target) {
  KernelOperatorSpec k;
  k.coefficients = target.values();
  const std::size_t n = k.coefficients.size();
  double half = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    k.coefficient_sum += k.coefficients[i];
    if (i + 1 == n / 2) half = k.coefficient_sum;
  }
  if (n < 2) half = k.coefficient_sum;
  k.tail_growth = k.coefficient_sum > 0.0 ? (k.coefficient_sum - half) / k.coefficient_sum : 0.0;
  k.summable = k.tail_growth < 1e-3;
  return k;
}

PrescribedWidths build_prescribed_widths(const LethargyTarget& target) {
  PrescribedWidths out;
  const auto& d = target.values();
  const auto n = static_cast<Eigen::Index>(d.size());
  out.op = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) out.op(i, i) = d[static_cast<std::size_t>(i)];
  out.kernel = kernel_spec(target);
  return out;
}

WidthFloorReport verify_width_floor(const ComplexMatrix& t, const LethargyTarget& target) {
  const auto n = static_cast<Eigen::Index>(target.size());
  if (std::min(t.rows(), t.cols()) < n) {
    throw DomainError("verify_width_floor: operator has fewer than " + std::to_string(n) + " s-numbers");
  }
  require_finite(t, "verify_width_floor");
  const auto s = singular_values(t);
  WidthFloorReport rep;
  rep.min_slack = std::numeric_limits<double>::infinity();
  const double tol = 1e-12 * std::max(s.front(), 1e-300);
  for (Eigen::Index i = 0; i < n; ++i) {
    WidthFloorRow row;
    row.n = static_cast<int>(i);
    row.target = target.values()[static_cast<std::size_t>(i)];
    row.delta = s[static_cast<std::size_t>(i)];       // delta_n = s_{n+1}
    row.alpha_next = s[static_cast<std::size_t>(i)];  // alpha_{n+1} = s_{n+1}
    row.slack = row.delta - row.target;
    rep.min_slack = std::min(rep.min_slack, row.slack);
    if (row.slack < -tol && !rep.first_violation) rep.first_violation = row.n;
    if (row.alpha_next < row.delta - tol) rep.order_holds = false;
    // alpha_n = s_n >= s_{n+1} = delta_n
    if (i > 0 && s[static_cast<std::size_t>(i) - 1] < row.delta - tol) rep.order_holds = false;
    rep.rows.push_back(row);
  }
  rep.floors_met = !rep.first_violation.has_value();
  return rep;
}

}  // namespace snlab

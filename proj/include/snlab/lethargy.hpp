#pragma once

#include <optional>
#include <span>
#include <vector>

#include "snlab/operators.hpp"

namespace snlab {

/// Strictly decreasing positive targets d_0 > d_1 > ... > d_{N-1}.
class LethargyTarget {
 public:
  explicit LethargyTarget(std::vector<double> d);
  const std::vector<double>& values() const { return d_; }
  std::size_t size() const { return d_.size(); }

 private:
  std::vector<double> d_;
};

/// T = sum_j alpha_j f_j(.) y_j with unit-norm f_j, y_j; here f_j = e_j^*,
/// y_j = e_j.
struct KernelOperatorSpec {
  std::vector<double> coefficients;
  double coefficient_sum = 0.0;
  /// Relative growth of the partial sum over the last doubling of the horizon.
  double tail_growth = 0.0;
  /// Partial sums have visibly settled within the horizon.
  bool summable = false;
};

KernelOperatorSpec kernel_spec(const LethargyTarget& target);

struct PrescribedWidths {
  ComplexMatrix op;
  KernelOperatorSpec kernel;
};

/// diag(d_0, ..., d_{N-1}): under the spectral norm delta_n = d_n.
PrescribedWidths build_prescribed_widths(const LethargyTarget& target);

struct WidthFloorRow {
  int n = 0;
  double target = 0.0;
  double delta = 0.0;      // delta_n
  double alpha_next = 0.0; // alpha_{n+1}
  double slack = 0.0;      // delta_n - d_n
};

struct WidthFloorReport {
  std::vector<WidthFloorRow> rows;
  double min_slack = 0.0;
  std::optional<int> first_violation;
  /// alpha_n >= delta_n for n >= 1 (the s-number order).
  bool order_holds = true;
  bool floors_met = true;
};

/// Checks alpha_{n+1}(T) >= delta_n(T) >= d_n for n = 0..N-1 (spectral norm).
WidthFloorReport verify_width_floor(const ComplexMatrix& t, const LethargyTarget& target);

}  // namespace snlab

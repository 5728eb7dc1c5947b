#pragma once

#include <array>
#include <optional>
#include <stdexcept>

#include "afsmc/sim.hpp"

namespace afsmc::sim {

struct JointMetrics {
  // First time after which |e| stays within band*|e(0)|; empty if the error
  // is still outside the band at the end of the horizon.
  std::optional<double> settling_time;
  double overshoot = 0.0;  // fraction of |e(0)| crossed past zero
  double ise = 0.0;
  double iae = 0.0;
  // Mean |e| over the final 10% of the horizon.
  double steady_state_error = 0.0;
  // Total variation of the torque, sum |tau(t+dt) - tau(t)|.
  double chattering = 0.0;
  double max_torque = 0.0;
};

struct Metrics {
  std::array<JointMetrics, 3> joints;
  double band = 0.02;

  double total_ise() const;
};

struct EmptyTrace : std::runtime_error {
  EmptyTrace();
};

// Wraps a failure of one side of a comparison; `cause` holds the original
// exception for rethrow.
struct CompareSideError : std::runtime_error {
  CompareSideError(char side_label, std::exception_ptr cause_ptr,
                   const std::string& message);
  char side;
  std::exception_ptr cause;
};

Metrics compute_metrics(const SimTrace& trace, double band = 0.02);

struct ComparisonReport {
  Metrics a;
  Metrics b;
  // a-over-b per joint; both-zero pairs report 1.
  std::array<JointMetrics, 3> ratio;
  double total_ise_ratio = 0.0;
};

ComparisonReport compare(const SimConfig& config_a, const SimConfig& config_b);

}  // namespace afsmc::sim

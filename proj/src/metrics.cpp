#include "afsmc/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace afsmc::sim {

EmptyTrace::EmptyTrace() : std::runtime_error("trace has no samples") {}

double Metrics::total_ise() const {
  return joints[0].ise + joints[1].ise + joints[2].ise;
}

Metrics compute_metrics(const SimTrace& trace, double band) {
  if (trace.samples.empty()) {
    throw EmptyTrace();
  }
  const auto& samples = trace.samples;
  const std::size_t n = samples.size();
  const double t_end = samples.back().t;

  Metrics out;
  out.band = band;
  for (int j = 0; j < 3; ++j) {
    JointMetrics& m = out.joints[j];
    const double e0 = samples.front().e[j];
    const double e0_mag = std::abs(e0);
    const double sign0 = (e0 > 0.0) - (e0 < 0.0);
    const double band_abs = band * e0_mag;

    // Last sample outside the band decides settling.
    std::size_t first_settled = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (std::abs(samples[i].e[j]) > band_abs) {
        first_settled = i + 1;
      }
    }
    if (first_settled < n) {
      m.settling_time = samples[first_settled].t;
    }

    double overshoot_abs = 0.0;
    double max_tau = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      overshoot_abs =
          std::max(overshoot_abs, -samples[i].e[j] * sign0);
      max_tau = std::max(max_tau, std::abs(samples[i].tau[j]));
    }
    m.overshoot = e0_mag > 0.0 ? std::max(0.0, overshoot_abs) / e0_mag : 0.0;
    m.max_torque = max_tau;

    for (std::size_t i = 0; i + 1 < n; ++i) {
      const double h = samples[i + 1].t - samples[i].t;
      const double ea = samples[i].e[j];
      const double eb = samples[i + 1].e[j];
      m.ise += 0.5 * h * (ea * ea + eb * eb);
      m.iae += 0.5 * h * (std::abs(ea) + std::abs(eb));
      m.chattering += std::abs(samples[i + 1].tau[j] - samples[i].tau[j]);
    }

    const double tail_start = 0.9 * t_end;
    double tail_sum = 0.0;
    std::size_t tail_count = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (samples[i].t >= tail_start) {
        tail_sum += std::abs(samples[i].e[j]);
        ++tail_count;
      }
    }
    m.steady_state_error = tail_count > 0 ? tail_sum / tail_count : 0.0;
  }
  return out;
}

namespace {

double ratio_of(double a, double b) {
  if (a == b) return 1.0;  // covers the 0/0 case for identical runs
  return a / b;
}

JointMetrics ratio_metrics(const JointMetrics& a, const JointMetrics& b) {
  JointMetrics r;
  if (a.settling_time && b.settling_time) {
    r.settling_time = ratio_of(*a.settling_time, *b.settling_time);
  }
  r.overshoot = ratio_of(a.overshoot, b.overshoot);
  r.ise = ratio_of(a.ise, b.ise);
  r.iae = ratio_of(a.iae, b.iae);
  r.steady_state_error = ratio_of(a.steady_state_error, b.steady_state_error);
  r.chattering = ratio_of(a.chattering, b.chattering);
  r.max_torque = ratio_of(a.max_torque, b.max_torque);
  return r;
}

}  // namespace

CompareSideError::CompareSideError(char side_label,
                                   std::exception_ptr cause_ptr,
                                   const std::string& message)
    : std::runtime_error(std::string("side ") + side_label + ": " + message),
      side(side_label),
      cause(std::move(cause_ptr)) {}

namespace {

Metrics run_side(const SimConfig& config, char side) {
  try {
    return compute_metrics(run(config));
  } catch (const std::exception& err) {
    throw CompareSideError(side, std::current_exception(), err.what());
  }
}

}  // namespace

ComparisonReport compare(const SimConfig& config_a, const SimConfig& config_b) {
  ComparisonReport report;
  report.a = run_side(config_a, 'A');
  report.b = run_side(config_b, 'B');
  for (int j = 0; j < 3; ++j) {
    report.ratio[j] = ratio_metrics(report.a.joints[j], report.b.joints[j]);
  }
  report.total_ise_ratio =
      ratio_of(report.a.total_ise(), report.b.total_ise());
  return report;
}

}  // namespace afsmc::sim

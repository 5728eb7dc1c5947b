#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "afsmc/control.hpp"
#include "afsmc/dynamics.hpp"
#include "afsmc/fuzzy.hpp"
#include "afsmc/trajectory.hpp"
#include "afsmc/types.hpp"

namespace afsmc::sim {

// Error universes sized to the default setpoint task; velocity universes at
// twice the position widths per second.
inline std::array<fuzzy::FuzzyConfig, 3> default_joint_fuzzy() {
  std::array<fuzzy::FuzzyConfig, 3> f;
  f[0].e_partition.half_width = 1.1;
  f[0].edot_partition.half_width = 2.2;
  f[1].e_partition.half_width = 1.6;
  f[1].edot_partition.half_width = 3.2;
  f[2].e_partition.half_width = 3.2;
  f[2].edot_partition.half_width = 6.4;
  return f;
}

struct SimConfig {
  double dt = 0.001;     // s
  double duration = 5.0; // s
  dynamics::JointState initial{Vec3::Constant(0.01), Vec3::Zero()};
  TrajectorySpec trajectory;
  DisturbanceSpec disturbance;
  control::ControllerConfig controller;
  std::array<fuzzy::FuzzyConfig, 3> fuzzy_configs = default_joint_fuzzy();
  dynamics::ManipulatorParams params;
  double divergence_limit = 1e6;

  void validate() const;
};

struct TraceSample {
  double t;
  Vec3 q;
  Vec3 qdot;
  Vec3 qd;
  Vec3 e;
  Vec3 s;
  Vec3 tau;
  Vec3 lambda_diag;
  double v;  // Lyapunov value at this sample
};

struct SimTrace {
  std::vector<TraceSample> samples;
  double dt = 0.0;
  std::uint64_t config_hash = 0;
  double wall_seconds = 0.0;
};

// Unstable tuning guard: |q| or |qdot| exceeded the divergence limit (or went
// non-finite). Carries whatever was recorded up to the failing step.
struct Diverged : std::runtime_error {
  Diverged(double t_fail, SimTrace partial_trace);
  double t;
  SimTrace partial;
};

// Surface gain for the current errors under the configured policy.
Vec3 current_lambda(const control::ControllerConfig& controller,
                    const std::array<fuzzy::FuzzyConfig, 3>& fuzzy_configs,
                    const Vec3& e, const Vec3& edot);

// One closed-loop RK4 step from t to t+dt. The control torque is computed
// once at t and held across the internal stages; the disturbance is evaluated
// at the stage times.
dynamics::JointState step(const SimConfig& config,
                          const dynamics::JointState& state, double t);

// Full-horizon closed-loop run, floor(duration/dt)+1 samples. Throws
// Diverged or SingularInertia (message carries the offending time).
SimTrace run(const SimConfig& config);

}  // namespace afsmc::sim

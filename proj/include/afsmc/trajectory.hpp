#pragma once

#include <cstdint>

#include "afsmc/control.hpp"
#include "afsmc/types.hpp"

namespace afsmc::sim {

// Reference with exact analytic derivatives.
// constant:   qd = setpoint, derivatives zero.
// sinusoidal: qd_i = offset_i + amplitude_i*sin(omega_i*t + phase_i).
struct TrajectorySpec {
  enum class Kind { constant, sinusoidal };
  Kind kind = Kind::constant;
  Vec3 setpoint = Vec3::Zero();
  Vec3 amplitude = Vec3::Zero();
  Vec3 omega = Vec3::Zero();
  Vec3 phase = Vec3::Zero();
  Vec3 offset = Vec3::Zero();
};

control::ReferencePoint reference_at(const TrajectorySpec& spec, double t);

// External joint forces. Deterministic in (spec, seed, t); `random` draws a
// white, uniformly bounded sample per joint from a counter-based hash of
// (seed, t bits, joint), so the same instant always yields the same value.
struct DisturbanceSpec {
  enum class Kind { none, constant, sinusoidal, random };
  Kind kind = Kind::none;
  Vec3 amplitude = Vec3::Zero();
  double frequency = 0.0;  // rad/s, sinusoidal only
  Vec3 phase = Vec3::Zero();
  std::uint64_t seed = 0;
};

Vec3 disturbance_at(const DisturbanceSpec& spec, double t);

}  // namespace afsmc::sim

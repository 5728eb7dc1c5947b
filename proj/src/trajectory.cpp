#include "afsmc/trajectory.hpp"

#include <cmath>
#include <cstring>

namespace afsmc::sim {

control::ReferencePoint reference_at(const TrajectorySpec& spec, double t) {
  control::ReferencePoint ref;
  switch (spec.kind) {
    case TrajectorySpec::Kind::constant:
      ref.qd = spec.setpoint;
      break;
    case TrajectorySpec::Kind::sinusoidal:
      for (int i = 0; i < 3; ++i) {
        const double arg = spec.omega[i] * t + spec.phase[i];
        ref.qd[i] = spec.offset[i] + spec.amplitude[i] * std::sin(arg);
        ref.qd_dot[i] = spec.amplitude[i] * spec.omega[i] * std::cos(arg);
        ref.qd_ddot[i] =
            -spec.amplitude[i] * spec.omega[i] * spec.omega[i] * std::sin(arg);
      }
      break;
  }
  return ref;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Uniform draw in [-1, 1] keyed on (seed, t, joint).
double hashed_uniform(std::uint64_t seed, double t, int joint) {
  std::uint64_t bits;
  static_assert(sizeof(bits) == sizeof(t));
  std::memcpy(&bits, &t, sizeof(bits));
  std::uint64_t h = splitmix64(seed ^ splitmix64(bits) ^
                               splitmix64(static_cast<std::uint64_t>(joint)));
  const double u = static_cast<double>(h >> 11) * 0x1.0p-53;  // [0, 1)
  return 2.0 * u - 1.0;
}

}  // namespace

Vec3 disturbance_at(const DisturbanceSpec& spec, double t) {
  Vec3 f = Vec3::Zero();
  switch (spec.kind) {
    case DisturbanceSpec::Kind::none:
      break;
    case DisturbanceSpec::Kind::constant:
      f = spec.amplitude;
      break;
    case DisturbanceSpec::Kind::sinusoidal:
      for (int i = 0; i < 3; ++i) {
        f[i] = spec.amplitude[i] * std::sin(spec.frequency * t + spec.phase[i]);
      }
      break;
    case DisturbanceSpec::Kind::random:
      for (int i = 0; i < 3; ++i) {
        f[i] = spec.amplitude[i] * hashed_uniform(spec.seed, t, i);
      }
      break;
  }
  return f;
}

}  // namespace afsmc::sim

#pragma once

#include <span>
#include <stdexcept>
#include <utility>

#include "afsmc/dynamics.hpp"
#include "afsmc/types.hpp"

namespace afsmc::control {

enum class LambdaPolicy { fixed, fuzzy };

struct ControllerConfig {
  Vec3 k = Vec3::Constant(150.0);  // switching gains, one per joint
  Vec3 lambda_fixed = Vec3::Constant(5.0);  // diagonal of the fixed surface gain
  LambdaPolicy lambda_policy = LambdaPolicy::fuzzy;
  double boundary_layer = 0.0;  // phi; 0 = pure sign switching
  bool strict_paper = false;    // reproduce the printed -lambda*edot sign
  // PD baseline: the discontinuous term K.*sign(s) is replaced by the linear
  // feedback K.*s, so K acts as a PD gain through s = edot + lambda*e.
  bool pd_only = false;

  void validate() const;
};

struct ReferencePoint {
  Vec3 qd = Vec3::Zero();
  Vec3 qd_dot = Vec3::Zero();
  Vec3 qd_ddot = Vec3::Zero();
};

// Error/surface bundle for one sample; s = edot + lambda_diag.*e holds by
// construction.
struct SlidingState {
  Vec3 e;
  Vec3 edot;
  Vec3 s;
  Vec3 lambda_diag;
};

struct StabilityBounds {
  double beta1 = 0.0;  // bound on ||Mdot||
  double beta2 = 0.0;  // bound on ||lambda||
};

struct InsufficientSamples : std::runtime_error {
  InsufficientSamples();
};

// e = qd - q, edot = qd_dot - qdot.
std::pair<Vec3, Vec3> tracking_errors(const dynamics::JointState& state,
                                      const ReferencePoint& ref);

Vec3 sliding_surface(const Vec3& e, const Vec3& edot, const Vec3& lambda_diag);

SlidingState make_sliding_state(const dynamics::JointState& state,
                                const ReferencePoint& ref,
                                const Vec3& lambda_diag);

// k_i*sign(s_i) with sign(0) = 0 when phi = 0, else the saturated
// k_i*clamp(s_i/phi, -1, 1).
Vec3 switch_term(const Vec3& s, const Vec3& k, double phi);

// Model-based torque: a(q)*(qd_ddot + lambda.*edot) + velocity terms +
// gravity + switching. strict_paper flips the lambda.*edot sign to match the
// printed law; pd_only swaps the switching term for K.*s.
Vec3 control_torque(const dynamics::ManipulatorParams& params,
                    const dynamics::JointState& state,
                    const ReferencePoint& ref, const ControllerConfig& cfg,
                    const Vec3& lambda_diag);

// V = 1/2 s^T sym(m) s  (equal to 1/2 s^T m s; the symmetrization fixes the
// convention for indefinite configurations of the printed model).
double lyapunov_value(const Mat3& m, const Vec3& s);

// Strict inequality sum(k_i*|s_i|) > beta2*||s||*m_norm*e_norm +
// 1/2*beta1*||s||^2.
bool gain_condition(const Vec3& k, const Vec3& s, double m_norm, double e_norm,
                    const StabilityBounds& bounds);

// 1.5 * max over consecutive pairs of ||(a(t+dt) - a(t))/dt|| (spectral).
// Throws InsufficientSamples for fewer than two states.
double estimate_beta1(const dynamics::ManipulatorParams& params,
                      std::span<const dynamics::JointState> window, double dt);

}  // namespace afsmc::control

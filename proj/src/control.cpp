#include "afsmc/control.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

namespace afsmc {

double spectral_norm(const Mat3& m) {
  return Eigen::JacobiSVD<Mat3>(m).singularValues()[0];
}

}  // namespace afsmc

namespace afsmc::control {

void ControllerConfig::validate() const {
  if (!k.allFinite() || (k.array() <= 0.0).any()) {
    throw std::invalid_argument("switching gains k must be positive");
  }
  if (!lambda_fixed.allFinite() || (lambda_fixed.array() <= 0.0).any()) {
    throw std::invalid_argument("lambda_fixed diagonal must be positive");
  }
  if (!(std::isfinite(boundary_layer) && boundary_layer >= 0.0)) {
    throw std::invalid_argument("boundary_layer must be non-negative");
  }
}

InsufficientSamples::InsufficientSamples()
    : std::runtime_error("beta1 estimate needs at least two states") {}

std::pair<Vec3, Vec3> tracking_errors(const dynamics::JointState& state,
                                      const ReferencePoint& ref) {
  return {ref.qd - state.q, ref.qd_dot - state.qdot};
}

Vec3 sliding_surface(const Vec3& e, const Vec3& edot, const Vec3& lambda_diag) {
  return edot + lambda_diag.cwiseProduct(e);
}

SlidingState make_sliding_state(const dynamics::JointState& state,
                                const ReferencePoint& ref,
                                const Vec3& lambda_diag) {
  auto [e, edot] = tracking_errors(state, ref);
  return {e, edot, sliding_surface(e, edot, lambda_diag), lambda_diag};
}

Vec3 switch_term(const Vec3& s, const Vec3& k, double phi) {
  Vec3 out;
  for (int i = 0; i < 3; ++i) {
    if (phi > 0.0) {
      out[i] = k[i] * std::clamp(s[i] / phi, -1.0, 1.0);
    } else {
      const double sign = (s[i] > 0.0) - (s[i] < 0.0);
      out[i] = k[i] * sign;
    }
  }
  return out;
}

Vec3 control_torque(const dynamics::ManipulatorParams& params,
                    const dynamics::JointState& state,
                    const ReferencePoint& ref, const ControllerConfig& cfg,
                    const Vec3& lambda_diag) {
  auto [e, edot] = tracking_errors(state, ref);
  const Vec3 s = sliding_surface(e, edot, lambda_diag);

  const dynamics::DynamicsTerms terms = dynamics::compute_terms(params, state);
  const dynamics::VelocityVectors v = dynamics::velocity_vectors(state);
  const Vec3 velocity_forces = terms.b * v.sq + terms.c * v.prod;

  const double sign = cfg.strict_paper ? -1.0 : 1.0;
  const Vec3 accel_ref = ref.qd_ddot + sign * lambda_diag.cwiseProduct(edot);
  const Vec3 feedback = cfg.pd_only ? Vec3(cfg.k.cwiseProduct(s))
                                    : switch_term(s, cfg.k, cfg.boundary_layer);
  return terms.a * accel_ref + velocity_forces + terms.d + feedback;
}

double lyapunov_value(const Mat3& m, const Vec3& s) {
  const Mat3 sym = 0.5 * (m + m.transpose());
  return 0.5 * s.dot(sym * s);
}

bool gain_condition(const Vec3& k, const Vec3& s, double m_norm, double e_norm,
                    const StabilityBounds& bounds) {
  const double lhs = k.dot(s.cwiseAbs());
  const double rhs = bounds.beta2 * s.norm() * m_norm * e_norm +
                     0.5 * bounds.beta1 * s.squaredNorm();
  return lhs > rhs;
}

double estimate_beta1(const dynamics::ManipulatorParams& params,
                      std::span<const dynamics::JointState> window,
                      double dt) {
  if (window.size() < 2) {
    throw InsufficientSamples();
  }
  double max_rate = 0.0;
  Mat3 prev = dynamics::compute_terms(params, window[0]).a;
  for (std::size_t i = 1; i < window.size(); ++i) {
    const Mat3 next = dynamics::compute_terms(params, window[i]).a;
    max_rate = std::max(max_rate, spectral_norm((next - prev) / dt));
    prev = next;
  }
  return 1.5 * max_rate;
}

}  // namespace afsmc::control

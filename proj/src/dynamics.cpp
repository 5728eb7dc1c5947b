#include "afsmc/dynamics.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/LU>

namespace afsmc::dynamics {

namespace {

bool all_finite(const Vec3& v) { return v.allFinite(); }

}  // namespace

void ManipulatorParams::validate() const {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(m1) || !positive(m2) || !positive(m3)) {
    throw std::invalid_argument("manipulator masses must be positive finite");
  }
  if (!positive(i3)) {
    throw std::invalid_argument("moment of inertia i3 must be positive finite");
  }
  if (!(std::isfinite(g) && g >= 0.0)) {
    throw std::invalid_argument("gravity g must be finite and non-negative");
  }
  if (!all_finite(viscous) || (viscous.array() < 0.0).any()) {
    throw std::invalid_argument("viscous coefficients must be non-negative");
  }
  if (!positive(singular_tolerance)) {
    throw std::invalid_argument("singular_tolerance must be positive");
  }
}

JointState::JointState(const Vec3& q_in, const Vec3& qdot_in)
    : q(q_in), qdot(qdot_in) {
  if (!all_finite(q) || !all_finite(qdot)) {
    throw std::invalid_argument("joint state components must be finite");
  }
}

SingularInertia::SingularInertia(double det_value, const std::string& context)
    : std::runtime_error("singular inertia matrix, |det A| = " +
                         std::to_string(det_value) +
                         (context.empty() ? "" : " (" + context + ")")),
      det(det_value) {}

DynamicsTerms compute_terms(const ManipulatorParams& p,
                            const JointState& state) {
  const double s1 = std::sin(state.q[0]);
  const double c1 = std::cos(state.q[0]);
  const double q3 = state.q[2];

  DynamicsTerms t;
  t.a(0, 0) = (4.0 * p.m1 * s1 - 4.0 * p.m2 * c1) * q3 + p.i3;
  t.a(0, 2) = (p.m1 + p.m2) * s1 * c1 * q3;
  t.a(1, 1) = p.m3;
  t.a(2, 0) = p.m1 * s1 * c1;
  t.a(2, 2) = 2.0 * (p.m1 * s1 + p.m2 * c1);

  t.b(0, 0) = (p.m1 * s1 - 4.0 * p.m2 * c1) * q3;
  t.b(0, 2) = -p.m1 * c1 + p.m2 * s1;
  t.b(2, 0) = 2.0 * q3 * (p.m1 * s1 - p.m2 * c1);

  t.c(0, 1) = -(p.m1 + p.m2) * s1 * c1 * q3;
  t.c(2, 1) = -(p.m1 + p.m2) * s1 * c1;

  t.d[1] = p.g * (p.m2 + p.m3);
  return t;
}

VelocityVectors velocity_vectors(const JointState& state) {
  const Vec3& v = state.qdot;
  return {.sq = v.cwiseProduct(v),
          .prod = Vec3(v[0] * v[1], v[0] * v[2], v[1] * v[2])};
}

Vec3 forward_dynamics(const ManipulatorParams& params, const JointState& state,
                      const GeneralizedForces& forces) {
  const DynamicsTerms t = compute_terms(params, state);
  const double det = t.a.determinant();
  if (std::abs(det) < params.singular_tolerance) {
    throw SingularInertia(std::abs(det), "forward_dynamics");
  }
  const VelocityVectors v = velocity_vectors(state);
  const Vec3 rhs = forces.tau - forces.f_ext - t.b * v.sq - t.c * v.prod -
                   t.d - params.viscous.cwiseProduct(state.qdot);
  return t.a.partialPivLu().solve(rhs);
}

GeneralizedForces inverse_dynamics(const ManipulatorParams& params,
                                   const JointState& state,
                                   const Vec3& qddot) {
  const DynamicsTerms t = compute_terms(params, state);
  const VelocityVectors v = velocity_vectors(state);
  GeneralizedForces out;
  out.tau = t.a * qddot + t.b * v.sq + t.c * v.prod + t.d +
            params.viscous.cwiseProduct(state.qdot);
  return out;
}

}  // namespace afsmc::dynamics

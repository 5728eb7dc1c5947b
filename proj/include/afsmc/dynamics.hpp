#pragma once

#include <stdexcept>
#include <string>

#include "afsmc/types.hpp"

namespace afsmc::dynamics {

// Plant constants. Masses in kg, i3 in kg*m^2, g in m/s^2.
// viscous is an optional per-joint friction coefficient (N*s/m resp.
// N*m*s/rad); the printed model has no friction, so it defaults to zero
// and the controller never compensates it.
struct ManipulatorParams {
  double m1 = 36.367405;
  double m2 = 12.632222;
  double m3 = 23.735183;
  double i3 = 1.0;
  double g = 9.8;
  Vec3 viscous = Vec3::Zero();
  // |det A| below this aborts the forward solve.
  double singular_tolerance = 1e-9;

  // Throws std::invalid_argument on violated invariants. g = 0 is accepted
  // as an explicit experiment override (conservation checks); negative g is
  // not.
  void validate() const;
};

// Joint positions (rad, m, m) and velocities. Construction rejects
// non-finite components.
struct JointState {
  Vec3 q = Vec3::Zero();
  Vec3 qdot = Vec3::Zero();

  JointState() = default;
  JointState(const Vec3& q_in, const Vec3& qdot_in);
};

// Coefficient matrices of the equations of motion in the form
//   a*qddot + b*[qdot^2] + c*[qdot_i*qdot_j] + d = tau - f_ext.
// Entries not produced by compute_terms are exactly zero.
struct DynamicsTerms {
  Mat3 a = Mat3::Zero();
  Mat3 b = Mat3::Zero();
  Mat3 c = Mat3::Zero();
  Vec3 d = Vec3::Zero();
};

struct GeneralizedForces {
  Vec3 tau = Vec3::Zero();
  Vec3 f_ext = Vec3::Zero();
};

struct VelocityVectors {
  Vec3 sq;    // (qd1^2, qd2^2, qd3^2)
  Vec3 prod;  // (qd1*qd2, qd1*qd3, qd2*qd3)
};

struct SingularInertia : std::runtime_error {
  SingularInertia(double det_value, const std::string& context);
  double det;
};

DynamicsTerms compute_terms(const ManipulatorParams& params,
                            const JointState& state);

VelocityVectors velocity_vectors(const JointState& state);

// Accelerations solving a*qddot = tau - f_ext - b*sq - c*prod - d - friction.
// Throws SingularInertia when |det a| < params.singular_tolerance.
Vec3 forward_dynamics(const ManipulatorParams& params, const JointState& state,
                      const GeneralizedForces& forces);

// Torques for a prescribed acceleration; f_ext of the result is zero.
GeneralizedForces inverse_dynamics(const ManipulatorParams& params,
                                   const JointState& state, const Vec3& qddot);

}  // namespace afsmc::dynamics

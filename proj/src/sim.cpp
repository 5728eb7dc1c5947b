#include "afsmc/sim.hpp"

#include <chrono>
#include <cmath>

#include "afsmc/integrate.hpp"

namespace afsmc::sim {

void SimConfig::validate() const {
  if (!(std::isfinite(dt) && dt > 0.0)) {
    throw std::invalid_argument("dt must be positive");
  }
  if (!(std::isfinite(duration) && duration >= dt)) {
    throw std::invalid_argument("duration must be at least dt");
  }
  if (!(std::isfinite(divergence_limit) && divergence_limit > 0.0)) {
    throw std::invalid_argument("divergence_limit must be positive");
  }
  params.validate();
  controller.validate();
  for (const auto& fc : fuzzy_configs) {
    fc.validate();
  }
}

Diverged::Diverged(double t_fail, SimTrace partial_trace)
    : std::runtime_error("simulation diverged at t = " +
                         std::to_string(t_fail)),
      t(t_fail),
      partial(std::move(partial_trace)) {}

Vec3 current_lambda(const control::ControllerConfig& controller,
                    const std::array<fuzzy::FuzzyConfig, 3>& fuzzy_configs,
                    const Vec3& e, const Vec3& edot) {
  if (controller.lambda_policy == control::LambdaPolicy::fixed) {
    return controller.lambda_fixed;
  }
  Vec3 lam;
  for (int i = 0; i < 3; ++i) {
    lam[i] = fuzzy::infer_lambda(fuzzy_configs[i], e[i], edot[i]);
  }
  return lam;
}

namespace {

// Everything the controller produces for one sample instant.
struct ControlEval {
  control::ReferencePoint ref;
  control::SlidingState sliding;
  Vec3 tau;
};

ControlEval evaluate_controller(const SimConfig& cfg,
                                const dynamics::JointState& state, double t) {
  ControlEval ev;
  ev.ref = reference_at(cfg.trajectory, t);
  auto [e, edot] = control::tracking_errors(state, ev.ref);
  const Vec3 lam = current_lambda(cfg.controller, cfg.fuzzy_configs, e, edot);
  ev.sliding = control::SlidingState{
      e, edot, control::sliding_surface(e, edot, lam), lam};
  ev.tau = control::control_torque(cfg.params, state, ev.ref, cfg.controller,
                                   lam);
  return ev;
}

dynamics::JointState integrate_step(const SimConfig& cfg,
                                    const dynamics::JointState& state,
                                    double t, const Vec3& tau) {
  const auto field = [&cfg, &tau](double ts, const Vec6& y) -> Vec6 {
    const dynamics::JointState st(y.head<3>(), y.tail<3>());
    const Vec3 f_ext = disturbance_at(cfg.disturbance, ts);
    const Vec3 qddot =
        dynamics::forward_dynamics(cfg.params, st, {tau, f_ext});
    Vec6 dy;
    dy << st.qdot, qddot;
    return dy;
  };
  Vec6 y;
  y << state.q, state.qdot;
  const Vec6 next = rk4_step(field, y, t, cfg.dt);
  return dynamics::JointState(next.head<3>(), next.tail<3>());
}

TraceSample make_sample(const SimConfig& cfg,
                        const dynamics::JointState& state, double t,
                        const ControlEval& ev) {
  const Mat3 inertia = dynamics::compute_terms(cfg.params, state).a;
  return TraceSample{.t = t,
                     .q = state.q,
                     .qdot = state.qdot,
                     .qd = ev.ref.qd,
                     .e = ev.sliding.e,
                     .s = ev.sliding.s,
                     .tau = ev.tau,
                     .lambda_diag = ev.sliding.lambda_diag,
                     .v = control::lyapunov_value(inertia, ev.sliding.s)};
}

bool exceeded(const dynamics::JointState& state, double limit) {
  return !state.q.allFinite() || !state.qdot.allFinite() ||
         state.q.cwiseAbs().maxCoeff() > limit ||
         state.qdot.cwiseAbs().maxCoeff() > limit;
}

// FNV-1a over the numeric content in declaration order; identifies a resolved
// configuration independently of how it was loaded.
struct ConfigHasher {
  std::uint64_t h = 0xcbf29ce484222325ull;

  void bytes(const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
      h ^= p[i];
      h *= 0x100000001b3ull;
    }
  }
  void add(double v) { bytes(&v, sizeof(v)); }
  void add(std::uint64_t v) { bytes(&v, sizeof(v)); }
  void add(int v) { add(static_cast<std::uint64_t>(v)); }
  void add(bool v) { add(static_cast<std::uint64_t>(v)); }
  void add(const Vec3& v) {
    for (int i = 0; i < 3; ++i) add(v[i]);
  }
};

std::uint64_t hash_config(const SimConfig& c) {
  ConfigHasher hh;
  hh.add(c.dt);
  hh.add(c.duration);
  hh.add(c.initial.q);
  hh.add(c.initial.qdot);
  hh.add(static_cast<int>(c.trajectory.kind));
  hh.add(c.trajectory.setpoint);
  hh.add(c.trajectory.amplitude);
  hh.add(c.trajectory.omega);
  hh.add(c.trajectory.phase);
  hh.add(c.trajectory.offset);
  hh.add(static_cast<int>(c.disturbance.kind));
  hh.add(c.disturbance.amplitude);
  hh.add(c.disturbance.frequency);
  hh.add(c.disturbance.phase);
  hh.add(c.disturbance.seed);
  hh.add(c.controller.k);
  hh.add(c.controller.lambda_fixed);
  hh.add(static_cast<int>(c.controller.lambda_policy));
  hh.add(c.controller.boundary_layer);
  hh.add(c.controller.strict_paper);
  hh.add(c.controller.pd_only);
  for (const auto& fc : c.fuzzy_configs) {
    hh.add(fc.e_partition.half_width);
    hh.add(fc.edot_partition.half_width);
    hh.add(fc.singletons.s);
    hh.add(fc.singletons.ms);
    hh.add(fc.singletons.m);
    hh.add(fc.singletons.ml);
    hh.add(fc.singletons.l);
  }
  hh.add(c.params.m1);
  hh.add(c.params.m2);
  hh.add(c.params.m3);
  hh.add(c.params.i3);
  hh.add(c.params.g);
  hh.add(c.params.viscous);
  hh.add(c.params.singular_tolerance);
  hh.add(c.divergence_limit);
  return hh.h;
}

}  // namespace

dynamics::JointState step(const SimConfig& config,
                          const dynamics::JointState& state, double t) {
  const ControlEval ev = evaluate_controller(config, state, t);
  return integrate_step(config, state, t, ev.tau);
}

SimTrace run(const SimConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();

  const auto steps = static_cast<std::size_t>(config.duration / config.dt);
  SimTrace trace;
  trace.dt = config.dt;
  trace.config_hash = hash_config(config);
  trace.samples.reserve(steps + 1);

  dynamics::JointState state = config.initial;
  for (std::size_t i = 0; i <= steps; ++i) {
    const double t = static_cast<double>(i) * config.dt;
    ControlEval ev;
    try {
      ev = evaluate_controller(config, state, t);
      trace.samples.push_back(make_sample(config, state, t, ev));
      if (i == steps) break;
      state = integrate_step(config, state, t, ev.tau);
    } catch (const dynamics::SingularInertia& err) {
      throw dynamics::SingularInertia(err.det, "t = " + std::to_string(t));
    } catch (const std::invalid_argument&) {
      // Non-finite state surfaced inside an integration stage.
      throw Diverged(t, std::move(trace));
    }
    if (exceeded(state, config.divergence_limit)) {
      throw Diverged(t + config.dt, std::move(trace));
    }
  }

  trace.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return trace;
}

}  // namespace afsmc::sim

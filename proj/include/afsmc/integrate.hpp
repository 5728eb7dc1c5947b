#pragma once

namespace afsmc::sim {

// One classical fourth-order Runge-Kutta step for y' = f(t, y). Y needs
// scalar multiplication and addition; F returns the derivative.
template <typename Y, typename F>
Y rk4_step(F&& f, const Y& y, double t, double dt) {
  const Y k1 = f(t, y);
  const Y k2 = f(t + dt / 2.0, Y(y + (dt / 2.0) * k1));
  const Y k3 = f(t + dt / 2.0, Y(y + (dt / 2.0) * k2));
  const Y k4 = f(t + dt, Y(y + dt * k3));
  return Y(y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4));
}

}  // namespace afsmc::sim

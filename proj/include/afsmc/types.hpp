#pragma once

#include <Eigen/Dense>

namespace afsmc {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Vec6 = Eigen::Matrix<double, 6, 1>;

// Largest singular value. Works for asymmetric matrices.
double spectral_norm(const Mat3& m);

}  // namespace afsmc

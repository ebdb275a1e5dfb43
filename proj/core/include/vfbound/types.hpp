#pragma once

#include <Eigen/Dense>

namespace vfbound {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
/// Point lists are stored one point per row.
using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using VectorRef = Eigen::Ref<const Vector>;

}  // namespace vfbound

#pragma once

#include <Eigen/Dense>

namespace flowfn {

using Index = Eigen::Index;
using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using VectorRef = Eigen::Ref<const Eigen::VectorXd>;

}  // namespace flowfn

#ifndef PSL_TYPES_HPP
#define PSL_TYPES_HPP

#include <Eigen/Dense>
#include <cstdint>

namespace psl {

using Index = Eigen::Index;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixXi64 = MatrixX<std::int64_t>;
using VectorXi64 = VectorX<std::int64_t>;

}  // namespace psl

#endif  // PSL_TYPES_HPP

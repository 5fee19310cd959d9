#ifndef PSL_LATTICE_HPP
#define PSL_LATTICE_HPP

#include <Eigen/Dense>
#include <optional>
#include <utility>

#include "psl/errors.hpp"
#include "psl/types.hpp"

namespace psl {

/// Exact integer pre-scaling of a lattice basis: basis = scale * matrix.
struct IntegerForm {
  MatrixXi64 matrix;
  double scale = 1.0;
};

/// Full-rank lattice of covolume 1, columns of `basis` are the generators.
class UnimodularLattice {
 public:
  static UnimodularLattice from_basis(Eigen::MatrixXd basis);
  static UnimodularLattice from_integer_form(MatrixXi64 matrix, double scale);

  int dim() const { return static_cast<int>(basis_.cols()); }
  const Eigen::MatrixXd& basis() const { return basis_; }
  const std::optional<IntegerForm>& integer_form() const { return integer_form_; }

 private:
  UnimodularLattice(Eigen::MatrixXd basis, std::optional<IntegerForm> form)
      : basis_(std::move(basis)), integer_form_(std::move(form)) {}

  Eigen::MatrixXd basis_;
  std::optional<IntegerForm> integer_form_;
};

/// Gram matrix of a column basis: G(i,j) = <b_i, b_j>.
template <typename Derived>
MatrixX<typename Derived::Scalar> gram(const Eigen::MatrixBase<Derived>& basis) {
  using Scalar = typename Derived::Scalar;
  MatrixX<Scalar> b = basis;
  Eigen::FullPivLU<MatrixX<Scalar>> lu(b);
  if (!lu.isInvertible()) {
    throw RankDeficiencyError("gram: basis is rank deficient");
  }
  return b.transpose() * b;
}

/// Determinant via partially pivoted LU; ~0 (never a throw) for singular input.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  MatrixX<Scalar> a = m;
  return a.partialPivLu().determinant();
}

/// Exact determinant of an integer matrix (Bareiss fraction-free elimination).
std::int64_t integer_determinant(MatrixXi64 m);

template <typename Scalar>
struct LllReduction {
  MatrixX<Scalar> basis;    ///< reduced basis, same lattice
  MatrixXi64 transform;     ///< unimodular U with basis = input * U
  int swaps = 0;
};

/// delta-LLL reduction of a full-rank column basis. Works in double and
/// retries once in long double when the Gram-Schmidt data degenerates.
LllReduction<double> lll_reduce(const Eigen::MatrixXd& basis, double delta = 0.99);

template <typename Scalar>
LllReduction<Scalar> lll_reduce_impl(MatrixX<Scalar> basis, Scalar delta);

}  // namespace psl

#endif  // PSL_LATTICE_HPP

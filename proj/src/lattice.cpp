#include "psl/lattice.hpp"

#include <cmath>
#include <cstdlib>

namespace psl {

UnimodularLattice UnimodularLattice::from_basis(Eigen::MatrixXd basis) {
  if (basis.rows() != basis.cols() || basis.rows() < 2) {
    throw ValidationError("lattice basis must be square with dim >= 2");
  }
  const double det = determinant(basis);
  if (std::abs(std::abs(det) - 1.0) > 1e-9) {
    throw ValidationError("lattice basis is not unimodular: |det| = " +
                          std::to_string(std::abs(det)));
  }
  return UnimodularLattice(std::move(basis), std::nullopt);
}

UnimodularLattice UnimodularLattice::from_integer_form(MatrixXi64 matrix, double scale) {
  if (matrix.rows() != matrix.cols() || matrix.rows() < 2) {
    throw ValidationError("integer form must be square with dim >= 2");
  }
  if (!(scale > 0.0)) {
    throw ValidationError("integer form scale must be positive");
  }
  const auto d = matrix.rows();
  const std::int64_t idet = integer_determinant(matrix);
  const double scaled_det =
      std::abs(std::pow(scale, static_cast<double>(d)) * static_cast<double>(idet));
  if (std::abs(scaled_det - 1.0) > 1e-9) {
    throw ValidationError("scale^d * det(integer form) must equal 1");
  }
  Eigen::MatrixXd basis = matrix.cast<double>() * scale;
  return UnimodularLattice(std::move(basis), IntegerForm{std::move(matrix), scale});
}

std::int64_t integer_determinant(MatrixXi64 m) {
  if (m.rows() != m.cols()) {
    throw ValidationError("integer_determinant: matrix must be square");
  }
  using I128 = __int128;
  const Index n = m.rows();
  MatrixX<I128> a = m.cast<I128>();
  I128 sign = 1;
  I128 prev = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Index pivot = -1;
      for (Index i = k + 1; i < n; ++i) {
        if (a(i, k) != 0) {
          pivot = i;
          break;
        }
      }
      if (pivot < 0) return 0;
      a.row(k).swap(a.row(pivot));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  const I128 det = sign * a(n - 1, n - 1);
  if (det > I128(INT64_MAX) || det < I128(INT64_MIN)) {
    throw CapacityError("integer_determinant: value exceeds 64 bits");
  }
  return static_cast<std::int64_t>(det);
}

namespace {

template <typename Scalar>
void gso_from_scratch(const MatrixX<Scalar>& b, MatrixX<Scalar>& mu,
                      VectorX<Scalar>& bstar_sq) {
  const Index d = b.cols();
  MatrixX<Scalar> bstar = b;
  mu.setZero(d, d);
  bstar_sq.resize(d);
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < i; ++j) {
      mu(i, j) = b.col(i).dot(bstar.col(j)) / bstar_sq(j);
      bstar.col(i) -= mu(i, j) * bstar.col(j);
    }
    mu(i, i) = Scalar(1);
    bstar_sq(i) = bstar.col(i).squaredNorm();
  }
}

}  // namespace

template <typename Scalar>
LllReduction<Scalar> lll_reduce_impl(MatrixX<Scalar> b, Scalar delta) {
  if (!(delta > Scalar(0.25) && delta < Scalar(1))) {
    throw ValidationError("lll_reduce: delta must lie in (1/4, 1)");
  }
  const Index d = b.cols();
  if (b.rows() != d) {
    throw ValidationError("lll_reduce: basis must be square");
  }
  LllReduction<Scalar> out;
  out.transform = MatrixXi64::Identity(d, d);
  if (d <= 1) {
    out.basis = std::move(b);
    return out;
  }

  MatrixX<Scalar> mu;
  VectorX<Scalar> bsq;
  gso_from_scratch(b, mu, bsq);
  for (Index i = 0; i < d; ++i) {
    if (!(bsq(i) > Scalar(0)) || !std::isfinite(static_cast<double>(bsq(i)))) {
      throw PrecisionError(
          "lll_reduce: Gram-Schmidt degenerated; raise working precision or "
          "recondition the basis");
    }
  }

  const long max_iters = 1000L * d * d * 64;
  long iters = 0;
  Index k = 1;
  while (k < d) {
    if (++iters > max_iters) {
      throw PrecisionError(
          "lll_reduce: failed to converge; raise working precision");
    }
    // size-reduce column k against k-1 .. 0
    for (Index j = k - 1; j >= 0; --j) {
      const Scalar m = mu(k, j);
      if (std::abs(static_cast<double>(m)) > 0.5) {
        const auto q = static_cast<std::int64_t>(std::llround(static_cast<double>(m)));
        b.col(k) -= Scalar(q) * b.col(j);
        out.transform.col(k) -= q * out.transform.col(j);
        for (Index l = 0; l < j; ++l) mu(k, l) -= Scalar(q) * mu(j, l);
        mu(k, j) -= Scalar(q);
      }
    }
    const Scalar m = mu(k, k - 1);
    if (bsq(k) >= (delta - m * m) * bsq(k - 1)) {
      ++k;
      continue;
    }
    // swap columns k-1 and k; O(d) Gram-Schmidt update
    b.col(k).swap(b.col(k - 1));
    out.transform.col(k).swap(out.transform.col(k - 1));
    const Scalar b_new = bsq(k) + m * m * bsq(k - 1);
    if (!(b_new > Scalar(0)) || !std::isfinite(static_cast<double>(b_new))) {
      throw PrecisionError(
          "lll_reduce: Gram-Schmidt degenerated; raise working precision");
    }
    const Scalar mu_new = m * bsq(k - 1) / b_new;
    bsq(k) = bsq(k - 1) * bsq(k) / b_new;
    bsq(k - 1) = b_new;
    for (Index i = k + 1; i < d; ++i) {
      const Scalar t = mu(i, k);
      mu(i, k) = mu(i, k - 1) - m * t;
      mu(i, k - 1) = t + mu_new * mu(i, k);
    }
    for (Index j = 0; j < k - 1; ++j) std::swap(mu(k, j), mu(k - 1, j));
    mu(k, k - 1) = mu_new;
    ++out.swaps;
    k = std::max<Index>(k - 1, 1);
  }
  out.basis = std::move(b);
  return out;
}

template LllReduction<double> lll_reduce_impl<double>(MatrixX<double>, double);
template LllReduction<long double> lll_reduce_impl<long double>(MatrixX<long double>,
                                                                long double);

LllReduction<double> lll_reduce(const Eigen::MatrixXd& basis, double delta) {
  try {
    return lll_reduce_impl<double>(basis, delta);
  } catch (const PrecisionError&) {
    auto wide = lll_reduce_impl<long double>(basis.cast<long double>(),
                                             static_cast<long double>(delta));
    LllReduction<double> out;
    out.basis = wide.basis.cast<double>();
    out.transform = std::move(wide.transform);
    out.swaps = wide.swaps;
    return out;
  }
}

}  // namespace psl

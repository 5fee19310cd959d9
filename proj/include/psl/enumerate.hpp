#ifndef PSL_ENUMERATE_HPP
#define PSL_ENUMERATE_HPP

#include <span>
#include <vector>

#include "psl/lattice.hpp"
#include "psl/star_body.hpp"
#include "psl/types.hpp"

namespace psl {

struct EnumerationDiagnostics {
  long long guard_band_hits = 0;  ///< membership decided within 1e-9 of the boundary
  long long nodes_visited = 0;
  long long candidates = 0;
};

/// All nonzero integer coordinate vectors x with basis*x inside S.
/// Preconditioned by LLL, searched depth-first inside the bounding ball of
/// radius rho_max, then filtered by exact membership (integer arithmetic
/// for balls of lattices carrying an integer form).
std::vector<VectorXi64> enumerate_points(const UnimodularLattice& lattice,
                                         const StarBody& body,
                                         EnumerationDiagnostics* diag = nullptr);

/// Same search on a raw column basis (no covolume requirement).
std::vector<VectorXi64> enumerate_points_in_basis(const Eigen::MatrixXd& basis,
                                                  const StarBody& body,
                                                  EnumerationDiagnostics* diag = nullptr);

/// gcd of the coordinates is 1; equivalently Rx cap Z^d = Zx.
bool is_primitive(const VectorXi64& x);

struct CountSample {
  std::int64_t raw_count = 0;          ///< primitive points, always even
  double w = 0.0;                      ///< raw_count / 2
  std::vector<std::int64_t> profile;   ///< per-time counts, nondecreasing
};

CountSample count_primitive(const UnimodularLattice& lattice, const StarBody& body,
                            EnumerationDiagnostics* diag = nullptr);

/// Primitive counts in the t^(1/d)-dilates of `body` at the given strictly
/// increasing times, from a single enumeration pass at the largest dilate.
CountSample count_profile(const UnimodularLattice& lattice, const StarBody& body,
                          std::span<const double> times,
                          EnumerationDiagnostics* diag = nullptr);

/// (raw_count - t*phi/zeta(d)) / sqrt(2*phi/zeta(d)).
double z_statistic(std::int64_t raw_count, double phi, int dim, double t = 1.0);

}  // namespace psl

#endif  // PSL_ENUMERATE_HPP

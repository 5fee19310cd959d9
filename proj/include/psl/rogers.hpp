#ifndef PSL_ROGERS_HPP
#define PSL_ROGERS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "psl/errors.hpp"
#include "psl/types.hpp"

namespace psl {

/// Riemann zeta at integer argument d >= 2, accurate to ~1e-16 relative.
double zeta(int d);

/// Row-echelon integer matrix class: r x k entries with divisor q, pivot
/// columns j_indices (0-based, j_indices[0] == 0) carrying q*I_r, zeros to
/// the left of each pivot, and overall gcd 1.
struct DMatrix {
  int rows = 0;
  int cols = 0;
  std::int64_t q = 1;
  MatrixXi64 entries;
  std::vector<int> j_indices;
};

struct SetPartition {
  int k = 0;
  std::vector<std::vector<int>> blocks;  ///< 0-based members, blocks ordered by min
};

/// Mixed-moment request: exponents k_vec against nondecreasing times t_vec;
/// dim selects the finite-d zeta weights, absent means the d->infinity limit.
struct MomentSpec {
  std::vector<int> k_vec;
  std::vector<double> t_vec;
  std::optional<int> dim;
};

struct DValidation {
  bool ok = false;
  int failed_condition = 0;  ///< 1..4, or 0 when ok
  std::vector<int> j_indices;
};

DValidation validate_D(const MatrixXi64& candidate, std::int64_t q);

/// Builds a DMatrix after checking the four class conditions.
DMatrix make_dmatrix(MatrixXi64 entries, std::int64_t q);

/// Exact count of x in {0..q-1}^r with x D = 0 (mod q).
std::int64_t congruence_count(const DMatrix& d_matrix);

/// c_D = congruence_count^d / q^(d r). Guarded by q^r <= 1e7.
double c_coefficient(const DMatrix& d_matrix, int dim);

std::vector<SetPartition> enumerate_partitions(int k, std::optional<int> r = {});

/// All matrices with q=1, one nonzero +-1 per column, leading +1 in each
/// row, and no zero row; the 2^(k-r)-to-one preimages of the r-block
/// partitions of {1..k}.
std::vector<DMatrix> enumerate_M(int k, int r);

/// The full class at (k, r, q) with entries bounded by |entry| <= bound.
std::vector<DMatrix> enumerate_D_class(int k, int r, std::int64_t q,
                                       std::int64_t entry_bound = 3);

/// Row supports of a matrix from enumerate_M's class.
SetPartition partition_of(const DMatrix& d_matrix);

/// Mixed moment of the intensity-1/2 Poisson point process:
/// sum over set partitions P of 2^-|P| prod_B min(t over B).
double poisson_process_moment(const MomentSpec& spec);

/// Same sum with each block weighted by t_B / zeta(d); the d->infinity
/// limit of this equals poisson_process_moment.
double partition_form_moment(const MomentSpec& spec);

/// Finite-d main term 2^-k sum_J M_J prod_{j in J} t_j / zeta(d),
/// evaluated by enumerating the matrix classes and reading off pivots.
double main_term_moment(const MomentSpec& spec);

/// k-th moment of Poisson(lambda): sum_r S(k,r) lambda^r.
double touchard_moment(int k, double lambda);

/// prod_j c_j^(k_j/2) (k_j - 1)!! over even k_j, zero if any k_j is odd.
double gaussian_mixed_moment(std::span<const int> k_vec, std::span<const double> c_vec);

/// 21 * 5^floor(k^2/4) * 2^-d * (V+1)^k; valid regime d >= floor(k^2/4)+3.
double remainder_bound_R1(int k, int d, double volume, bool* precondition_met = nullptr);

/// 2 * 3^floor(k^2/4) * sqrt(3/4)^d * (V+1)^k; valid regime k <= d-1.
double remainder_bound_R2(int k, int d, double volume, bool* precondition_met = nullptr);

struct LowMoments {
  double mean = 0.0;
  double second_moment = 0.0;
  double variance = 0.0;
};

/// mean V/zeta(d) and second moment (V/zeta)^2 + 2V/zeta of the primitive
/// count in a symmetric set of volume V; needs d >= 3.
LowMoments exact_low_moments(double volume, int dim);

/// Keeps the matrices whose every row has at least two nonzero entries.
std::vector<DMatrix> surviving_class_filter(const std::vector<DMatrix>& matrices);

std::uint64_t stirling_second(int k, int r);
std::uint64_t bell_number(int k);
double double_factorial(int n);

}  // namespace psl

#endif  // PSL_ROGERS_HPP

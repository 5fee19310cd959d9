#ifndef PSL_SAMPLER_HPP
#define PSL_SAMPLER_HPP

#include <cstdint>
#include <vector>

#include "psl/lattice.hpp"
#include "psl/types.hpp"

namespace psl {

struct SamplerConfig {
  int dim = 2;
  std::int64_t prime = 1'000'003;
  std::uint64_t seed = 0;
  std::uint64_t stream_index = 0;
};

bool is_prime(std::int64_t n);

/// Index-p sublattice basis of Z^d: columns (p,0,...,0), (a_1,1,0,...,0),
/// ..., (a_{d-1},0,...,0,1). Determinant is p by construction.
MatrixXi64 gm_basis(int dim, std::int64_t prime, const std::vector<std::int64_t>& a);

/// Scaled random index-p sublattice; deterministic in (seed, stream_index).
UnimodularLattice sample_lattice(const SamplerConfig& cfg);

/// The a-vector the given substream draws (exposed for reproducibility tests).
std::vector<std::int64_t> sample_coefficients(const SamplerConfig& cfg);

}  // namespace psl

#endif  // PSL_SAMPLER_HPP

#include "psl/sampler.hpp"

#include <cmath>

#include "psl/errors.hpp"
#include "psl/rng.hpp"

namespace psl {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t f = 3; f * f <= n; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

MatrixXi64 gm_basis(int dim, std::int64_t prime, const std::vector<std::int64_t>& a) {
  if (dim < 2) throw ValidationError("gm_basis: dim must be >= 2");
  if (!is_prime(prime)) throw ValidationError("gm_basis: p must be prime");
  if (a.size() != static_cast<std::size_t>(dim - 1)) {
    throw ValidationError("gm_basis: a must have dim-1 entries");
  }
  for (std::int64_t ai : a) {
    if (ai < 0 || ai >= prime) {
      throw ValidationError("gm_basis: entries of a must lie in [0, p)");
    }
  }
  MatrixXi64 b = MatrixXi64::Identity(dim, dim);
  b(0, 0) = prime;
  for (int j = 1; j < dim; ++j) b(0, j) = a[static_cast<std::size_t>(j - 1)];
  return b;
}

std::vector<std::int64_t> sample_coefficients(const SamplerConfig& cfg) {
  if (cfg.dim < 2) throw ValidationError("sample_lattice: dim must be >= 2");
  if (cfg.prime < 101 || !is_prime(cfg.prime)) {
    throw ValidationError("sample_lattice: prime must be a prime >= 101");
  }
  CounterRng rng(cfg.seed, cfg.stream_index);
  std::vector<std::int64_t> a(static_cast<std::size_t>(cfg.dim - 1));
  for (auto& ai : a) {
    ai = static_cast<std::int64_t>(
        rng.uniform_below(static_cast<std::uint64_t>(cfg.prime)));
  }
  return a;
}

UnimodularLattice sample_lattice(const SamplerConfig& cfg) {
  const auto a = sample_coefficients(cfg);
  MatrixXi64 b = gm_basis(cfg.dim, cfg.prime, a);
  const double scale =
      std::pow(static_cast<double>(cfg.prime), -1.0 / static_cast<double>(cfg.dim));
  return UnimodularLattice::from_integer_form(std::move(b), scale);
}

}  // namespace psl

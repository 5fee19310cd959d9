#include "psl/rogers.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "psl/summation.hpp"

namespace psl {

double zeta(int d) {
  if (d < 2) throw ValidationError("zeta: argument must be an integer >= 2");
  // Partial sums against the integral tail bound N^(1-d)/(d-1). For d >= 7
  // the bound drops below 1e-16 within 1000 terms and the plain sum is
  // enough; for d in [2,6] the bare sum would need ~1e16 terms, so stop at
  // N = 1000 and close the tail with Euler-Maclaurin corrections (error
  // ~ d^5 N^(-d-5), far below 1e-16 there).
  const double dd = static_cast<double>(d);
  long n_stop = -1;
  for (long n = 2; n <= 1000; ++n) {
    if (std::pow(static_cast<double>(n), 1.0 - dd) / (dd - 1.0) < 1e-16) {
      n_stop = n;
      break;
    }
  }
  if (n_stop > 0) {
    long double sum = 0.0L;
    for (long n = n_stop; n >= 1; --n) {  // smallest terms first
      sum += std::pow(static_cast<long double>(n), -static_cast<long double>(d));
    }
    return static_cast<double>(sum);
  }
  constexpr long double kBigN = 1000.0L;
  long double sum = 0.0L;
  for (long n = 999; n >= 1; --n) {
    sum += std::pow(static_cast<long double>(n), -static_cast<long double>(d));
  }
  const long double nd = std::pow(kBigN, -static_cast<long double>(d));
  long double tail = kBigN * nd / (dd - 1.0L);  // integral term N^(1-d)/(d-1)
  tail += 0.5L * nd;
  tail += dd * nd / kBigN / 12.0L;
  tail -= dd * (dd + 1.0L) * (dd + 2.0L) * nd / (kBigN * kBigN * kBigN) / 720.0L;
  return static_cast<double>(sum + tail);
}

DValidation validate_D(const MatrixXi64& candidate, std::int64_t q) {
  if (q < 1) throw ValidationError("validate_D: q must be a positive integer");
  DValidation result;
  const Index r = candidate.rows();
  const Index k = candidate.cols();
  if (r < 1 || k < 1 || r > k) {
    result.failed_condition = 2;
    return result;
  }
  for (Index j = 0; j < k; ++j) {  // (1) each column nonzero
    if (candidate.col(j).isZero()) {
      result.failed_condition = 1;
      return result;
    }
  }
  // leading nonzero of each row gives the pivot candidate set; zeros to the
  // left of the pivots then hold by construction, so failures surface as (2)
  std::vector<int> pivots;
  pivots.reserve(static_cast<std::size_t>(r));
  Index prev = -1;
  for (Index i = 0; i < r; ++i) {
    Index lead = -1;
    for (Index j = 0; j < k; ++j) {
      if (candidate(i, j) != 0) {
        lead = j;
        break;
      }
    }
    if (lead < 0 || lead <= prev) {
      result.failed_condition = 2;
      return result;
    }
    pivots.push_back(static_cast<int>(lead));
    prev = lead;
  }
  if (pivots[0] != 0) {
    result.failed_condition = 2;
    return result;
  }
  for (Index i = 0; i < r; ++i) {  // (2) pivot columns form q I_r
    const Index j = pivots[static_cast<std::size_t>(i)];
    for (Index i2 = 0; i2 < r; ++i2) {
      const std::int64_t want = (i2 == i) ? q : 0;
      if (candidate(i2, j) != want) {
        result.failed_condition = 2;
        return result;
      }
    }
  }
  std::int64_t g = 0;  // (4) gcd of all entries is 1
  for (Index i = 0; i < r; ++i) {
    for (Index j = 0; j < k; ++j) {
      const std::int64_t e = candidate(i, j);
      g = std::gcd(g, e < 0 ? -e : e);
    }
  }
  if (g != 1) {
    result.failed_condition = 4;
    return result;
  }
  result.ok = true;
  result.j_indices = std::move(pivots);
  return result;
}

DMatrix make_dmatrix(MatrixXi64 entries, std::int64_t q) {
  auto v = validate_D(entries, q);
  if (!v.ok) {
    throw ValidationError("make_dmatrix: condition (" +
                          std::to_string(v.failed_condition) + ") fails");
  }
  DMatrix d;
  d.rows = static_cast<int>(entries.rows());
  d.cols = static_cast<int>(entries.cols());
  d.q = q;
  d.entries = std::move(entries);
  d.j_indices = std::move(v.j_indices);
  return d;
}

std::int64_t congruence_count(const DMatrix& dm) {
  const auto r = static_cast<std::size_t>(dm.rows);
  const std::int64_t q = dm.q;
  double space = 1.0;
  for (std::size_t i = 0; i < r; ++i) space *= static_cast<double>(q);
  if (space > 1e7) throw CapacityError("congruence_count: q^r exceeds 1e7 guard");

  std::vector<std::int64_t> x(r, 0);
  std::int64_t count = 0;
  while (true) {
    bool all_zero_mod_q = true;
    for (Index j = 0; j < dm.entries.cols() && all_zero_mod_q; ++j) {
      std::int64_t dot = 0;
      for (std::size_t i = 0; i < r; ++i) {
        dot += x[i] * dm.entries(static_cast<Index>(i), j);
      }
      if (((dot % q) + q) % q != 0) all_zero_mod_q = false;
    }
    if (all_zero_mod_q) ++count;
    std::size_t pos = 0;
    while (pos < r && ++x[pos] == q) x[pos++] = 0;
    if (pos == r) break;
  }
  return count;
}

double c_coefficient(const DMatrix& dm, int dim) {
  if (dim < 1) throw ValidationError("c_coefficient: dim must be >= 1");
  const std::int64_t count = congruence_count(dm);
  double qr = 1.0;
  for (int i = 0; i < dm.rows; ++i) qr *= static_cast<double>(dm.q);
  return std::pow(static_cast<double>(count) / qr, static_cast<double>(dim));
}

std::vector<SetPartition> enumerate_partitions(int k, std::optional<int> want_r) {
  if (k < 1) throw ValidationError("enumerate_partitions: k must be >= 1");
  if (k > 10) throw CapacityError("enumerate_partitions: k capped at 10");
  if (want_r && (*want_r < 1 || *want_r > k)) {
    throw ValidationError("enumerate_partitions: r must lie in [1, k]");
  }
  std::vector<SetPartition> out;
  std::vector<int> rgs(static_cast<std::size_t>(k), 0);
  // lexicographic restricted-growth strings
  auto emit = [&]() {
    const int r = 1 + *std::max_element(rgs.begin(), rgs.end());
    if (want_r && r != *want_r) return;
    SetPartition p;
    p.k = k;
    p.blocks.assign(static_cast<std::size_t>(r), {});
    for (int i = 0; i < k; ++i) {
      p.blocks[static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)])].push_back(i);
    }
    out.push_back(std::move(p));
  };
  auto rec = [&](auto&& self, int i, int max_used) -> void {
    if (i == k) {
      emit();
      return;
    }
    for (int v = 0; v <= max_used + 1; ++v) {
      rgs[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, std::max(max_used, v));
    }
  };
  rec(rec, 0, -1);
  return out;
}

std::vector<DMatrix> enumerate_M(int k, int r) {
  if (k < 1 || r < 1 || r > k) {
    throw ValidationError("enumerate_M: need 1 <= r <= k");
  }
  if (k > 8) throw CapacityError("enumerate_M: k capped at 8");
  std::vector<DMatrix> out;
  for (const auto& p : enumerate_partitions(k, r)) {
    std::vector<int> free_slots;  // non-minimum members, sign choices
    for (const auto& block : p.blocks) {
      for (std::size_t m = 1; m < block.size(); ++m) free_slots.push_back(block[m]);
    }
    const auto n_free = free_slots.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n_free); ++mask) {
      DMatrix d;
      d.rows = r;
      d.cols = k;
      d.q = 1;
      d.entries = MatrixXi64::Zero(r, k);
      d.j_indices.reserve(static_cast<std::size_t>(r));
      for (std::size_t bi = 0; bi < p.blocks.size(); ++bi) {
        d.j_indices.push_back(p.blocks[bi][0]);
        for (int member : p.blocks[bi]) d.entries(static_cast<Index>(bi), member) = 1;
      }
      for (std::size_t s = 0; s < n_free; ++s) {
        if (mask & (std::uint64_t{1} << s)) {
          const int col = free_slots[s];
          for (Index i = 0; i < d.entries.rows(); ++i) {
            if (d.entries(i, col) != 0) d.entries(i, col) = -1;
          }
        }
      }
      out.push_back(std::move(d));
    }
  }
  return out;
}

std::vector<DMatrix> enumerate_D_class(int k, int r, std::int64_t q,
                                       std::int64_t entry_bound) {
  if (k < 1 || r < 1 || r > k) throw ValidationError("enumerate_D_class: need 1 <= r <= k");
  if (q < 1) throw ValidationError("enumerate_D_class: q must be >= 1");
  if (entry_bound < 1) throw ValidationError("enumerate_D_class: entry bound must be >= 1");
  if (k > 6) throw CapacityError("enumerate_D_class: k capped at 6");

  const std::int64_t span = 2 * entry_bound + 1;
  std::vector<DMatrix> out;

  std::vector<int> pivots(static_cast<std::size_t>(r));
  // choose pivot columns 0 = j_0 < j_1 < ... < j_{r-1}
  auto choose = [&](auto&& self, int idx, int from) -> void {
    if (idx == r) {
      // free cells: column j not a pivot, rows with pivot left of j
      std::vector<std::pair<int, int>> cells;
      std::vector<std::vector<int>> col_cells(static_cast<std::size_t>(k));
      for (int j = 0; j < k; ++j) {
        if (std::find(pivots.begin(), pivots.end(), j) != pivots.end()) continue;
        for (int i = 0; i < r; ++i) {
          if (pivots[static_cast<std::size_t>(i)] < j) {
            col_cells[static_cast<std::size_t>(j)].push_back(i);
          }
        }
      }
      double work = 1.0;
      for (int j = 0; j < k; ++j) {
        const auto& cc = col_cells[static_cast<std::size_t>(j)];
        if (!cc.empty()) {
          work *= static_cast<double>(std::pow(static_cast<double>(span),
                                               static_cast<double>(cc.size())));
        }
      }
      if (work > 2e7) throw CapacityError("enumerate_D_class: search space exceeds guard");

      MatrixXi64 m = MatrixXi64::Zero(r, k);
      for (int i = 0; i < r; ++i) m(i, pivots[static_cast<std::size_t>(i)]) = q;
      std::vector<int> free_cols;
      for (int j = 0; j < k; ++j) {
        if (!col_cells[static_cast<std::size_t>(j)].empty()) free_cols.push_back(j);
      }
      auto fill = [&](auto&& self2, std::size_t fc) -> void {
        if (fc == free_cols.size()) {
          auto v = validate_D(m, q);
          if (v.ok && v.j_indices == pivots) {
            DMatrix d;
            d.rows = r;
            d.cols = k;
            d.q = q;
            d.entries = m;
            d.j_indices = pivots;
            out.push_back(std::move(d));
          }
          return;
        }
        const int j = free_cols[fc];
        const auto& rows_here = col_cells[static_cast<std::size_t>(j)];
        std::vector<std::int64_t> vals(rows_here.size(), -entry_bound);
        while (true) {
          bool nonzero = false;
          for (std::size_t t = 0; t < rows_here.size(); ++t) {
            m(rows_here[t], j) = vals[t];
            nonzero = nonzero || vals[t] != 0;
          }
          if (nonzero) self2(self2, fc + 1);
          std::size_t pos = 0;
          while (pos < vals.size() && ++vals[pos] > entry_bound) {
            vals[pos++] = -entry_bound;
          }
          if (pos == vals.size()) break;
        }
        for (int i : rows_here) m(i, j) = 0;
      };
      fill(fill, 0);
      return;
    }
    const int start = (idx == 0) ? 0 : from;
    const int stop = k - (r - idx);
    for (int j = start; j <= stop; ++j) {
      if (idx == 0 && j != 0) break;  // first pivot is always column 0
      pivots[static_cast<std::size_t>(idx)] = j;
      self(self, idx + 1, j + 1);
    }
  };
  choose(choose, 0, 0);
  return out;
}

SetPartition partition_of(const DMatrix& dm) {
  if (dm.q != 1) throw ValidationError("partition_of: matrix is not in the M class (q != 1)");
  for (Index j = 0; j < dm.entries.cols(); ++j) {
    int nonzero = 0;
    for (Index i = 0; i < dm.entries.rows(); ++i) {
      const std::int64_t e = dm.entries(i, j);
      if (e != 0) {
        ++nonzero;
        if (e != 1 && e != -1) {
          throw ValidationError("partition_of: entries must be 0 or +-1");
        }
      }
    }
    if (nonzero != 1) {
      throw ValidationError("partition_of: each column needs exactly one nonzero entry");
    }
  }
  SetPartition p;
  p.k = dm.cols;
  p.blocks.resize(static_cast<std::size_t>(dm.rows));
  for (Index i = 0; i < dm.entries.rows(); ++i) {
    auto& block = p.blocks[static_cast<std::size_t>(i)];
    for (Index j = 0; j < dm.entries.cols(); ++j) {
      if (dm.entries(i, j) != 0) block.push_back(static_cast<int>(j));
    }
    if (block.empty()) throw ValidationError("partition_of: zero row");
    if (block[0] != dm.j_indices[static_cast<std::size_t>(i)] ||
        dm.entries(i, block[0]) != 1) {
      throw ValidationError("partition_of: leading entry must be +1 at the pivot");
    }
  }
  return p;
}

namespace {

std::vector<double> time_labels(const MomentSpec& spec) {
  if (spec.k_vec.size() != spec.t_vec.size() || spec.k_vec.empty()) {
    throw ValidationError("MomentSpec: k_vec and t_vec must match and be nonempty");
  }
  std::vector<double> labels;
  for (std::size_t j = 0; j < spec.k_vec.size(); ++j) {
    if (spec.k_vec[j] < 1) throw ValidationError("MomentSpec: exponents must be >= 1");
    if (!(spec.t_vec[j] >= 0.0)) throw ValidationError("MomentSpec: times must be >= 0");
    if (j > 0 && spec.t_vec[j] < spec.t_vec[j - 1]) {
      throw ValidationError("MomentSpec: times must be nondecreasing");
    }
    labels.insert(labels.end(), static_cast<std::size_t>(spec.k_vec[j]), spec.t_vec[j]);
  }
  if (labels.size() > 8) throw CapacityError("MomentSpec: total order capped at 8");
  return labels;
}

double partition_sum(const std::vector<double>& labels, double zeta_d) {
  const int k = static_cast<int>(labels.size());
  CompensatedSum acc;
  for (const auto& p : enumerate_partitions(k)) {
    double prod = std::pow(0.5, static_cast<double>(p.blocks.size()));
    for (const auto& block : p.blocks) {
      double t_min = labels[static_cast<std::size_t>(block[0])];
      for (int member : block) {
        t_min = std::min(t_min, labels[static_cast<std::size_t>(member)]);
      }
      prod *= t_min / zeta_d;
    }
    acc.add(prod);
  }
  return acc.value();
}

}  // namespace

double poisson_process_moment(const MomentSpec& spec) {
  return partition_sum(time_labels(spec), 1.0);
}

double partition_form_moment(const MomentSpec& spec) {
  const double z = spec.dim ? zeta(*spec.dim) : 1.0;
  return partition_sum(time_labels(spec), z);
}

double main_term_moment(const MomentSpec& spec) {
  const auto labels = time_labels(spec);
  const int k = static_cast<int>(labels.size());
  const double z = spec.dim ? zeta(*spec.dim) : 1.0;
  CompensatedSum acc;
  for (int r = 1; r <= k; ++r) {
    for (const auto& d : enumerate_M(k, r)) {
      double prod = 1.0;
      for (int pivot : d.j_indices) {
        prod *= labels[static_cast<std::size_t>(pivot)] / z;
      }
      acc.add(prod);
    }
  }
  return acc.value() * std::pow(0.5, static_cast<double>(k));
}

double touchard_moment(int k, double lambda) {
  if (k < 1 || k > 12) throw ValidationError("touchard_moment: k must lie in [1, 12]");
  if (!(lambda > 0.0)) throw ValidationError("touchard_moment: lambda must be positive");
  CompensatedSum acc;
  double lam_pow = 1.0;
  for (int r = 1; r <= k; ++r) {
    lam_pow *= lambda;
    acc.add(static_cast<double>(stirling_second(k, r)) * lam_pow);
  }
  return acc.value();
}

double gaussian_mixed_moment(std::span<const int> k_vec, std::span<const double> c_vec) {
  if (k_vec.size() != c_vec.size() || k_vec.empty()) {
    throw ValidationError("gaussian_mixed_moment: k_vec and c_vec must match");
  }
  double prod = 1.0;
  for (std::size_t j = 0; j < k_vec.size(); ++j) {
    if (k_vec[j] < 0) throw ValidationError("gaussian_mixed_moment: exponents must be >= 0");
    if (!(c_vec[j] > 0.0)) throw ValidationError("gaussian_mixed_moment: c must be positive");
    if (k_vec[j] % 2 != 0) return 0.0;
    prod *= std::pow(c_vec[j], k_vec[j] / 2) * double_factorial(k_vec[j] - 1);
  }
  return prod;
}

double remainder_bound_R1(int k, int d, double volume, bool* precondition_met) {
  if (k < 1 || d < 1) throw ValidationError("remainder_bound_R1: k, d must be >= 1");
  if (!(volume >= 0.0)) throw ValidationError("remainder_bound_R1: volume must be >= 0");
  const int kk4 = (k * k) / 4;
  if (precondition_met) *precondition_met = d >= kk4 + 3;
  return 21.0 * std::pow(5.0, kk4) * std::pow(2.0, -d) *
         std::pow(volume + 1.0, static_cast<double>(k));
}

double remainder_bound_R2(int k, int d, double volume, bool* precondition_met) {
  if (k < 1 || d < 1) throw ValidationError("remainder_bound_R2: k, d must be >= 1");
  if (!(volume >= 0.0)) throw ValidationError("remainder_bound_R2: volume must be >= 0");
  const int kk4 = (k * k) / 4;
  if (precondition_met) *precondition_met = k <= d - 1;
  return 2.0 * std::pow(3.0, kk4) * std::pow(std::sqrt(0.75), d) *
         std::pow(volume + 1.0, static_cast<double>(k));
}

LowMoments exact_low_moments(double volume, int dim) {
  if (!(volume >= 0.0)) throw ValidationError("exact_low_moments: volume must be >= 0");
  if (dim < 3) {
    throw ValidationError("exact_low_moments: second moment needs dim >= 3");
  }
  const double z = zeta(dim);
  LowMoments m;
  m.mean = volume / z;
  m.variance = 2.0 * volume / z;
  m.second_moment = m.mean * m.mean + m.variance;
  return m;
}

std::vector<DMatrix> surviving_class_filter(const std::vector<DMatrix>& matrices) {
  std::vector<DMatrix> out;
  for (const auto& d : matrices) {
    bool ok = true;
    for (Index i = 0; i < d.entries.rows() && ok; ++i) {
      int nonzero = 0;
      for (Index j = 0; j < d.entries.cols(); ++j) {
        if (d.entries(i, j) != 0) ++nonzero;
      }
      ok = nonzero >= 2;
    }
    if (ok) out.push_back(d);
  }
  return out;
}

std::uint64_t stirling_second(int k, int r) {
  if (k < 0 || r < 0) throw ValidationError("stirling_second: negative argument");
  if (r > k) return 0;
  if (k == 0) return 1;  // S(0,0)
  if (r == 0) return 0;
  std::vector<std::uint64_t> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;  // S(0,0)
  for (int n = 1; n <= k; ++n) {
    for (int m = n; m >= 1; --m) {
      row[static_cast<std::size_t>(m)] =
          row[static_cast<std::size_t>(m - 1)] +
          static_cast<std::uint64_t>(m) * row[static_cast<std::size_t>(m)];
    }
    row[0] = 0;
  }
  return row[static_cast<std::size_t>(r)];
}

std::uint64_t bell_number(int k) {
  std::uint64_t total = 0;
  for (int r = 0; r <= k; ++r) total += stirling_second(k, r);
  return total;
}

double double_factorial(int n) {
  if (n <= 0) return 1.0;
  double prod = 1.0;
  for (int v = n; v >= 2; v -= 2) prod *= static_cast<double>(v);
  return prod;
}

}  // namespace psl

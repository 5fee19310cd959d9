#ifndef PSL_EXPERIMENT_HPP
#define PSL_EXPERIMENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "psl/errors.hpp"

namespace psl {

enum class ExperimentMode {
  kPoisson,
  kPoissonProcess,
  kNormal,
  kBrownian,
  kMomentVerify,
  kCombinatoricsSelftest,
};

std::string mode_name(ExperimentMode mode);
ExperimentMode mode_from_name(const std::string& name);

/// Volume law: a fixed value, or a function of the dimension. The growth
/// regimes accepted for the normalized modes are linear a*d and power d^a,
/// both subexponential; fixed volumes are rejected there since the
/// normalization needs the volume to grow with d.
struct PhiSpec {
  enum class Kind { kConst, kLinear, kPower };
  Kind kind = Kind::kConst;
  double value = 1.0;

  double operator()(int dim) const;
  std::string str() const;
  static PhiSpec parse(const std::string& text);
};

struct ExperimentConfig {
  ExperimentMode mode = ExperimentMode::kPoisson;
  std::vector<int> dims;
  PhiSpec volume;
  std::vector<double> times;
  long samples = 0;
  std::int64_t prime = 1'000'003;
  std::uint64_t seed = 0;
  std::string body = "ball";  ///< ball | ellipsoid
  std::string output;
  std::string format = "json";  ///< csv | json
};

/// Flat key = value text; '#' starts a comment; unknown keys are rejected.
ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig parse_config_file(const std::string& path);
void validate_config(const ExperimentConfig& cfg);

struct EstimateRow {
  std::string statistic;
  double estimate = 0.0;
  double std_error = 0.0;
  double target = 0.0;
  std::string tolerance;
  bool pass = true;
};

struct TestRow {
  std::string name;
  double statistic = 0.0;
  long dof_or_n = 0;
  double p_value = 1.0;
  double alpha = 0.001;
  bool pass = true;
};

struct ContextValue {
  std::string name;
  double value = 0.0;
};

struct HistogramPayload {
  std::string label;
  double lambda = 0.0;
  std::vector<std::int64_t> counts;
};

struct CdfPayload {
  std::vector<double> grid;
  std::vector<double> empirical;
};

struct CovGridPayload {
  std::vector<double> times;
  std::vector<double> values;   ///< row-major, times x times
  std::vector<double> targets;  ///< min(s, t) grid
};

struct DimRun {
  int dim = 0;
  std::vector<EstimateRow> estimates;
  std::vector<TestRow> tests;
  std::vector<ContextValue> context;
  long long guard_band_hits = 0;
  std::vector<HistogramPayload> histograms;
  std::optional<CdfPayload> cdf;
  std::optional<CovGridPayload> cov_grid;
  double wall_seconds = 0.0;
  double samples_per_second = 0.0;
};

struct ResultReport {
  ExperimentConfig config;
  std::vector<DimRun> runs;
  bool all_pass = true;
};

/// Runs the configured experiment. Sampling fans out across PSL_THREADS
/// workers; every numeric output is a fixed-order reduction of per-index
/// sample results, so reports do not depend on the worker count.
ResultReport run_experiment(const ExperimentConfig& cfg);

std::string report_to_json_text(const ResultReport& report);
ResultReport report_from_json_text(const std::string& text);

/// Field-wise equality; timing fields are zeroed first when requested.
bool report_equal(const ResultReport& a, const ResultReport& b,
                  bool ignore_timing = true);

/// Writes the report in the given format next to `base_path` (extension is
/// added when missing) and returns the file names written. svg renders the
/// mode-appropriate figures from the embedded payloads.
std::vector<std::string> render_report(const ResultReport& report,
                                       const std::string& format,
                                       const std::string& base_path);

}  // namespace psl

#endif  // PSL_EXPERIMENT_HPP

#pragma once

// Text formats: basis and matrix CSV, trajectory CSV, state and run-config
// JSON, and the per-cavity initial-state grammar "cav1|cav2|cav3".

#include <array>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "trimodal/basis.hpp"
#include "trimodal/dynamics.hpp"
#include "trimodal/entanglement.hpp"
#include "trimodal/evolve.hpp"

namespace trimodal {

/// Raised for malformed input; the message carries line or field context.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 17 significant digits, round-trips exactly through std::stod.
std::string format_double(double value);
/// "re+imj" / "re-imj"
std::string format_complex(Complex value);
/// Accepts "re", "imj", "re+imj", "re-imj" (exponents allowed).
Complex parse_complex(std::string_view text);

/// "1.5", "pi", "2pi", "2*pi", "pi/3", "-3pi/4".
double parse_time_expression(std::string_view text);

struct TimeRange {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t samples = 0;  ///< 0 when the text had no third field
};

/// "lo:hi" or "lo:hi:n"; hi must exceed lo and n must be at least 2.
TimeRange parse_time_range(std::string_view text);

void write_basis_csv(std::ostream& out, const Manifold& manifold);

void write_matrix_csv(std::ostream& out, const Eigen::MatrixXcd& matrix);
Eigen::MatrixXcd read_matrix_csv(std::istream& in);
nlohmann::json generator_sidecar(const Generator& generator);

/// Header comment lines (prefixed "# "), a column line, then one row per
/// sample: t, xi_t, re(c_0), im(c_0), ...
void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory, const std::vector<std::string>& metadata);

struct TrajectoryTable {
  std::vector<double> t;
  std::vector<double> xi_t;
  std::vector<Eigen::VectorXcd> amplitudes;
};

TrajectoryTable read_trajectory_csv(std::istream& in);

/// "g0|g0|0.6:g2+0.8:e0"; a missing coefficient means 1; coefficients are
/// "re" or "re+imj". Factors must already be normalized.
std::array<CavityFactor, 3> parse_init_spec(std::string_view text);
std::string format_init_spec(const std::array<CavityFactor, 3>& factors);

/// {"N": n, "amplitudes": [[re, im], ...]}. Renormalizes when the norm is
/// within 1e-6 of one, otherwise rejects with the measured norm.
StateVector parse_state_json(const nlohmann::json& doc);
StateVector read_state_file(const std::filesystem::path& path);
nlohmann::json state_to_json(const StateVector& state);

nlohmann::json overlap_to_json(const OverlapResult& result);

struct RunConfig {
  int n_total = 2;
  GeneratorMode mode = GeneratorMode::large_hopping;
  double r = 1.0;
  double delta = 0.0;
  double xi = 1.0;
  std::array<CavityFactor, 3> initial;
  double start = 0.0;
  double stop = 0.0;
  std::size_t samples = 2;
  TimeUnit unit = TimeUnit::xi_t;
  std::optional<std::string> trajectory_path;
};

/// Missing optional fields take their defaults; errors name the field.
RunConfig parse_run_config(const nlohmann::json& doc);
RunConfig read_run_config(const std::filesystem::path& path);
/// Canonical form: every field present, levels as "g:n", complex as [re, im].
nlohmann::json emit_run_config(const RunConfig& config);

}  // namespace trimodal

#include "trimodal/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <regex>
#include <sstream>

namespace trimodal {

namespace {

constexpr double kStateNormTolerance = 1e-6;

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

double parse_real(std::string_view text) {
  const std::string s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty number");
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (*first == '+') ++first;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) throw std::invalid_argument("bad number '" + s + "'");
  return v;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

Complex json_complex(const nlohmann::json& j, const std::string& field) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ParseError("field '" + field + "': expected a number or [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

nlohmann::json complex_json(Complex c) { return nlohmann::json::array({c.real(), c.imag()}); }

template <typename T>
T require(const nlohmann::json& doc, const char* key, const std::string& path) {
  if (!doc.contains(key)) throw ParseError("field '" + path + key + "': missing");
  try {
    return doc.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("field '" + path + key + "': " + e.what());
  }
}

template <typename T>
T optional_field(const nlohmann::json& doc, const char* key, const std::string& path, T fallback) {
  if (!doc.contains(key)) return fallback;
  return require<T>(doc, key, path);
}

}  // namespace

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string format_complex(Complex value) {
  std::string im = format_double(value.imag());
  if (im.front() != '-') im.insert(im.begin(), '+');
  return format_double(value.real()) + im + "j";
}

Complex parse_complex(std::string_view text) {
  const std::string s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty complex number");
  if (s.back() != 'j' && s.back() != 'i') return {parse_real(s), 0.0};
  const std::string body = s.substr(0, s.size() - 1);
  // Split at the last sign that is not the leading one and not part of an exponent.
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      const std::string im = body.substr(k);
      return {parse_real(body.substr(0, k)), im == "+" || im == "-" ? (im == "-" ? -1.0 : 1.0) : parse_real(im)};
    }
  }
  if (body.empty() || body == "+") return {0.0, 1.0};
  if (body == "-") return {0.0, -1.0};
  return {0.0, parse_real(body)};
}

double parse_time_expression(std::string_view text) {
  static const std::regex form(R"(^\s*([+-]?)\s*([0-9.eE+-]*?)\s*\*?\s*(pi)?\s*(?:/\s*([0-9.eE+-]+))?\s*$)");
  const std::string s(text);
  std::smatch m;
  if (s.empty() || !std::regex_match(s, m, form) || (m[2].length() == 0 && !m[3].matched)) {
    throw ParseError("bad time expression '" + s + "'");
  }
  try {
    double v = m[2].length() ? parse_real(m[2].str()) : 1.0;
    if (m[3].matched) v *= std::numbers::pi;
    if (m[4].matched) v /= parse_real(m[4].str());
    return m[1] == "-" ? -v : v;
  } catch (const std::invalid_argument&) {
    throw ParseError("bad time expression '" + s + "'");
  }
}

TimeRange parse_time_range(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() != 2 && parts.size() != 3) throw ParseError("time range must be lo:hi or lo:hi:n");
  TimeRange r;
  r.lo = parse_time_expression(parts[0]);
  r.hi = parse_time_expression(parts[1]);
  if (!(r.hi > r.lo)) throw ParseError("time range '" + std::string(text) + "' is empty");
  if (parts.size() == 3) {
    const std::string n = trim(parts[2]);
    std::size_t samples = 0;
    const auto [ptr, ec] = std::from_chars(n.data(), n.data() + n.size(), samples);
    if (ec != std::errc{} || ptr != n.data() + n.size() || samples < 2) {
      throw ParseError("sample count '" + n + "' must be an integer >= 2");
    }
    r.samples = samples;
  }
  return r;
}

void write_basis_csv(std::ostream& out, const Manifold& manifold) {
  out << "# index,sector,cav1,cav2,cav3\n";
  for (std::size_t i = 0; i < manifold.dimension(); ++i) {
    const auto& s = manifold.state(i);
    out << i << ',' << s.excited_count() << ',' << s.levels[0].to_string() << ',' << s.levels[1].to_string() << ','
        << s.levels[2].to_string() << '\n';
  }
}

void write_matrix_csv(std::ostream& out, const Eigen::MatrixXcd& matrix) {
  for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
    for (Eigen::Index j = 0; j < matrix.cols(); ++j) {
      if (j > 0) out << ',';
      out << format_complex(matrix(i, j));
    }
    out << '\n';
  }
}

Eigen::MatrixXcd read_matrix_csv(std::istream& in) {
  std::vector<std::vector<Complex>> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::vector<Complex> row;
    for (const auto& cell : split(line, ',')) {
      try {
        row.push_back(parse_complex(cell));
      } catch (const std::exception& e) {
        throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
      }
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError("line " + std::to_string(lineno) + ": ragged matrix row");
    }
    rows.push_back(std::move(row));
  }
  const auto n = static_cast<Eigen::Index>(rows.size());
  const auto m = n == 0 ? Eigen::Index{0} : static_cast<Eigen::Index>(rows.front().size());
  Eigen::MatrixXcd mat(n, m);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) mat(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return mat;
}

nlohmann::json generator_sidecar(const Generator& generator) {
  const auto& offsets = generator.manifold().sector_offsets();
  return {{"mode", std::string(to_string(generator.mode()))},
          {"N", generator.manifold().n_total()},
          {"r", generator.params().r},
          {"delta", generator.params().delta},
          {"xi", generator.xi()},
          {"sector_offsets", std::vector<std::size_t>(offsets.begin(), offsets.end())}};
}

void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory,
                          const std::vector<std::string>& metadata) {
  for (const auto& m : metadata) out << "# " << m << '\n';
  const auto& manifold = trajectory.generator.manifold();
  out << "# t,xi_t";
  for (std::size_t i = 0; i < manifold.dimension(); ++i) out << ",re_" << i << ",im_" << i;
  out << '\n';
  for (std::size_t k = 0; k < trajectory.states.size(); ++k) {
    out << format_double(trajectory.t_at(k)) << ',' << format_double(trajectory.xi_t_at(k));
    const auto& amps = trajectory.states[k].amplitudes();
    for (Eigen::Index i = 0; i < amps.size(); ++i) {
      out << ',' << format_double(amps(i).real()) << ',' << format_double(amps(i).imag());
    }
    out << '\n';
  }
}

TrajectoryTable read_trajectory_csv(std::istream& in) {
  TrajectoryTable table;
  std::string line;
  std::size_t lineno = 0;
  std::size_t width = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    const auto cells = split(line, ',');
    if (cells.size() < 2 || cells.size() % 2 != 0) {
      throw ParseError("line " + std::to_string(lineno) + ": expected t, xi_t and (re, im) pairs");
    }
    if (width == 0) width = cells.size();
    if (cells.size() != width) throw ParseError("line " + std::to_string(lineno) + ": column count changed");
    try {
      table.t.push_back(parse_real(cells[0]));
      table.xi_t.push_back(parse_real(cells[1]));
      Eigen::VectorXcd v((cells.size() - 2) / 2);
      for (Eigen::Index i = 0; i < v.size(); ++i) {
        const auto c = static_cast<std::size_t>(2 + 2 * i);
        v(i) = Complex(parse_real(cells[c]), parse_real(cells[c + 1]));
      }
      table.amplitudes.push_back(std::move(v));
    } catch (const std::invalid_argument& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return table;
}

std::array<CavityFactor, 3> parse_init_spec(std::string_view text) {
  const auto cavities = split(text, '|');
  if (cavities.size() != 3) {
    throw ParseError("initial state '" + std::string(text) + "': expected three cavities separated by '|'");
  }
  std::array<CavityFactor, 3> factors;
  for (std::size_t c = 0; c < 3; ++c) {
    const std::string body = trim(cavities[c]);
    if (body.empty()) throw ParseError("cavity " + std::to_string(c + 1) + ": empty factor");
    // A '+' separates terms only once the text so far ends in a level; a '+'
    // inside a complex coefficient ("0.6+0.1j:g2") does not.
    static const std::regex complete_term(R"(^\s*(.*:)?\s*[ge]:?\d+\s*$)");
    std::vector<std::string> terms;
    std::string current;
    for (const char ch : body) {
      if (ch == '+' && std::regex_match(current, complete_term)) {
        terms.push_back(current);
        current.clear();
        continue;
      }
      current.push_back(ch);
    }
    if (!current.empty()) terms.push_back(current);
    for (const auto& raw : terms) {
      const std::string term = trim(raw);
      const auto colon = term.rfind(':');
      Complex coef{1.0, 0.0};
      std::string level = term;
      if (colon != std::string::npos) {
        const std::string head = term.substr(0, colon);
        // "g:2" is a level written with a colon, not a coefficient.
        if (head == "g" || head == "e") {
          level = term;
        } else {
          try {
            coef = parse_complex(head);
          } catch (const std::exception& e) {
            throw ParseError("cavity " + std::to_string(c + 1) + ": bad coefficient '" + head + "': " + e.what());
          }
          level = term.substr(colon + 1);
        }
      }
      try {
        factors[c].emplace_back(CavityLevel::parse(level), coef);
      } catch (const std::exception& e) {
        throw ParseError("cavity " + std::to_string(c + 1) + ": " + e.what());
      }
    }
  }
  return factors;
}

std::string format_init_spec(const std::array<CavityFactor, 3>& factors) {
  std::string out;
  for (std::size_t c = 0; c < 3; ++c) {
    if (c > 0) out += '|';
    for (std::size_t k = 0; k < factors[c].size(); ++k) {
      if (k > 0) out += '+';
      const auto& [level, coef] = factors[c][k];
      out += (coef.imag() == 0.0 ? format_double(coef.real()) : format_complex(coef)) + ":";
      const auto name = level.to_string();
      out += name.substr(0, 1) + name.substr(2);
    }
  }
  return out;
}

StateVector parse_state_json(const nlohmann::json& doc) {
  const int n = require<int>(doc, "N", "");
  if (!doc.contains("amplitudes") || !doc["amplitudes"].is_array()) {
    throw ParseError("field 'amplitudes': expected an array of [re, im]");
  }
  ManifoldPtr manifold;
  try {
    manifold = enumerate_manifold(n);
  } catch (const std::exception& e) {
    throw ParseError(std::string("field 'N': ") + e.what());
  }
  const auto& amps = doc["amplitudes"];
  if (amps.size() != manifold->dimension()) {
    throw ParseError("field 'amplitudes': " + std::to_string(amps.size()) + " entries, manifold N=" +
                     std::to_string(n) + " has dimension " + std::to_string(manifold->dimension()));
  }
  Eigen::VectorXcd v(static_cast<Eigen::Index>(amps.size()));
  for (std::size_t i = 0; i < amps.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = json_complex(amps[i], "amplitudes[" + std::to_string(i) + "]");
  }
  const double norm = v.norm();
  if (std::abs(norm - 1.0) > kStateNormTolerance) {
    throw ParseError("field 'amplitudes': norm " + format_double(norm) + " is not within 1e-6 of 1");
  }
  return StateVector::normalized(manifold, v);
}

StateVector read_state_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open state file '" + path.string() + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return parse_state_json(doc);
}

nlohmann::json state_to_json(const StateVector& state) {
  nlohmann::json amps = nlohmann::json::array();
  for (Eigen::Index i = 0; i < state.amplitudes().size(); ++i) amps.push_back(complex_json(state.amplitudes()(i)));
  return {{"N", state.manifold().n_total()}, {"amplitudes", amps}};
}

nlohmann::json overlap_to_json(const OverlapResult& result) {
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& f : result.maximizer.factors) {
    nlohmann::json v = nlohmann::json::array();
    for (Eigen::Index i = 0; i < f.size(); ++i) v.push_back(complex_json(f(i)));
    factors.push_back(v);
  }
  return {{"overlap", result.overlap},
          {"entanglement", result.entanglement},
          {"restarts_used", result.restarts_used},
          {"converged", result.converged},
          {"maximizer", factors}};
}

RunConfig parse_run_config(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("run config must be a JSON object");
  RunConfig cfg;
  cfg.n_total = require<int>(doc, "N", "");
  try {
    cfg.mode = parse_mode(optional_field<std::string>(doc, "mode", "", "large_hopping"));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("field 'mode': ") + e.what());
  }
  const nlohmann::json params = doc.value("params", nlohmann::json::object());
  cfg.r = optional_field<double>(params, "r", "params.", 1.0);
  cfg.delta = optional_field<double>(params, "delta", "params.", 0.0);
  cfg.xi = optional_field<double>(params, "xi", "params.", 1.0);

  if (!doc.contains("initial")) throw ParseError("field 'initial': missing");
  const auto& init = doc["initial"];
  if (init.is_string()) {
    cfg.initial = parse_init_spec(init.get<std::string>());
  } else {
    if (!init.is_array() || init.size() != 3) throw ParseError("field 'initial': expected three cavity lists");
    for (std::size_t c = 0; c < 3; ++c) {
      const std::string path = "initial[" + std::to_string(c) + "]";
      if (!init[c].is_array()) throw ParseError("field '" + path + "': expected a list of [level, coef]");
      for (std::size_t k = 0; k < init[c].size(); ++k) {
        const auto& term = init[c][k];
        const std::string tp = path + "[" + std::to_string(k) + "]";
        if (!term.is_array() || term.size() != 2 || !term[0].is_string()) {
          throw ParseError("field '" + tp + "': expected [level, [re, im]]");
        }
        try {
          cfg.initial[c].emplace_back(CavityLevel::parse(term[0].get<std::string>()), json_complex(term[1], tp));
        } catch (const std::invalid_argument& e) {
          throw ParseError("field '" + tp + "': " + e.what());
        }
      }
    }
  }

  const nlohmann::json times = doc.value("times", nlohmann::json::object());
  cfg.start = optional_field<double>(times, "start", "times.", 0.0);
  cfg.stop = require<double>(times, "stop", "times.");
  cfg.samples = optional_field<std::size_t>(times, "samples", "times.", 4097);
  const auto unit = optional_field<std::string>(times, "unit", "times.", "xi_t");
  if (unit == "xi_t") {
    cfg.unit = TimeUnit::xi_t;
  } else if (unit == "t") {
    cfg.unit = TimeUnit::t;
  } else {
    throw ParseError("field 'times.unit': expected 'xi_t' or 't'");
  }
  if (cfg.samples < 2) throw ParseError("field 'times.samples': need at least 2");

  const nlohmann::json outputs = doc.value("outputs", nlohmann::json::object());
  if (outputs.contains("trajectory") && !outputs["trajectory"].is_null()) {
    cfg.trajectory_path = require<std::string>(outputs, "trajectory", "outputs.");
  }
  return cfg;
}

RunConfig read_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config '" + path.string() + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return parse_run_config(doc);
}

nlohmann::json emit_run_config(const RunConfig& config) {
  nlohmann::json initial = nlohmann::json::array();
  for (const auto& factor : config.initial) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [level, coef] : factor) terms.push_back({level.to_string(), complex_json(coef)});
    initial.push_back(terms);
  }
  return {{"N", config.n_total},
          {"mode", std::string(to_string(config.mode))},
          {"params", {{"r", config.r}, {"delta", config.delta}, {"xi", config.xi}}},
          {"initial", initial},
          {"times",
           {{"start", config.start},
            {"stop", config.stop},
            {"samples", config.samples},
            {"unit", config.unit == TimeUnit::xi_t ? "xi_t" : "t"}}},
          {"outputs", {{"trajectory", config.trajectory_path ? nlohmann::json(*config.trajectory_path) : nullptr}}}};
}

}  // namespace trimodal

#include "trimodal/scan.hpp"

#include <algorithm>
#include <charconv>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <memory>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace trimodal {

namespace {

constexpr double kFlatStep = 1e-13;
constexpr double kRefineTolerance = 1e-10;
constexpr double kGoldenHandoff = 1e-6;
constexpr double kRationalTolerance = 1e-9;
constexpr std::int64_t kMaxDenominator = 1000;
const double kInvPhi = (std::sqrt(5.0) - 1.0) / 2.0;

double evaluate(const Objective& objective, const Source& source, double x) { return objective(source.evaluate(x)); }

// 4th-order central difference of the objective through its amplitudes.
double slope(const Objective& objective, const Source& source, double x) {
  const double h = 1e-4;
  const auto f = [&](double t) { return evaluate(objective, source, t); };
  return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h);
}

// Locates the extremum inside [a, b]: golden-section down to kGoldenHandoff,
// then bisection on the slope sign (the objective is flat to rounding well
// before 1e-10 in the argument).
std::pair<double, double> refine(const Objective& objective, const Source& source, double a, double b,
                                 ExtremumKind kind) {
  const double sign = kind == ExtremumKind::min ? 1.0 : -1.0;
  auto g = [&](double x) { return sign * evaluate(objective, source, x); };
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double gc = g(c);
  double gd = g(d);
  while (b - a > kGoldenHandoff) {
    if (gc < gd) {
      b = d;
      d = c;
      gd = gc;
      c = b - kInvPhi * (b - a);
      gc = g(c);
    } else {
      a = c;
      c = d;
      gc = gd;
      d = a + kInvPhi * (b - a);
      gd = g(d);
    }
  }
  // Widen slightly so the bracket is guaranteed to straddle the slope root.
  a -= kGoldenHandoff;
  b += kGoldenHandoff;
  double sa = sign * slope(objective, source, a);
  const double sb = sign * slope(objective, source, b);
  if (sa < 0.0 && sb > 0.0) {
    while (b - a > kRefineTolerance / 2) {
      const double m = 0.5 * (a + b);
      const double sm = sign * slope(objective, source, m);
      if (sm < 0.0) {
        a = m;
        sa = sm;
      } else {
        b = m;
      }
    }
  }
  return {0.5 * (a + b), b - a};
}

int step_sign(double df) {
  if (std::abs(df) <= kFlatStep) return 0;
  return df > 0.0 ? 1 : -1;
}

struct Rational {
  std::int64_t p;
  std::int64_t q;
};

std::optional<Rational> as_rational(double ratio) {
  for (std::int64_t q = 1; q <= kMaxDenominator; ++q) {
    const double p = std::round(ratio * static_cast<double>(q));
    if (std::abs(ratio - p / static_cast<double>(q)) <= kRationalTolerance * std::max(1.0, std::abs(ratio))) {
      return Rational{static_cast<std::int64_t>(p), q};
    }
  }
  return std::nullopt;
}

// Largest g with every difference an integer multiple of g; none if incommensurate.
std::optional<double> common_base(const std::vector<double>& differences) {
  std::vector<double> nonzero;
  for (double d : differences) {
    if (std::abs(d) > 1e-9) nonzero.push_back(std::abs(d));
  }
  if (nonzero.empty()) return std::nullopt;
  const double ref = *std::min_element(nonzero.begin(), nonzero.end());
  std::vector<Rational> ratios;
  std::int64_t lcm = 1;
  for (double d : nonzero) {
    const auto r = as_rational(d / ref);
    if (!r) return std::nullopt;
    ratios.push_back(*r);
    lcm = std::lcm(lcm, r->q);
    if (lcm > 1'000'000'000) return std::nullopt;
  }
  std::int64_t g = 0;
  for (const auto& r : ratios) g = std::gcd(g, r.p * (lcm / r.q));
  return static_cast<double>(g) * ref / static_cast<double>(lcm);
}

std::vector<std::vector<std::size_t>> components(const Eigen::MatrixXcd& m) {
  const auto n = static_cast<std::size_t>(m.rows());
  std::vector<int> owner(n, -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (owner[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<std::size_t> stack{s};
    owner[s] = id;
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      out.back().push_back(i);
      for (std::size_t j = 0; j < n; ++j) {
        if (owner[j] < 0 && std::abs(m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i))) > 0.0) {
          owner[j] = id;
          stack.push_back(j);
        }
      }
    }
  }
  return out;
}

std::vector<double> differences_from_first(const std::vector<double>& values) {
  std::vector<double> out;
  for (std::size_t k = 1; k < values.size(); ++k) out.push_back(values[k] - values[0]);
  return out;
}

}  // namespace

Objective Objective::parse(std::string_view text) {
  Objective obj;
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("objective '" + std::string(text) + "': " + what + " at position " +
                                std::to_string(pos));
  };
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_number = [&]() -> double {
    const std::size_t start = pos;
    while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.')) ++pos;
    if (start == pos) fail("expected a number");
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, v);
    if (ec != std::errc{} || ptr != text.data() + pos) {
      pos = start;
      fail("malformed number");
    }
    return v;
  };
  skip_ws();
  if (pos == text.size()) fail("empty objective");
  bool first = true;
  while (true) {
    skip_ws();
    double sign = 1.0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      sign = text[pos] == '-' ? -1.0 : 1.0;
      ++pos;
      skip_ws();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    double weight = 1.0;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      weight = read_number();
      skip_ws();
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        skip_ws();
        const double den = read_number();
        if (den == 0.0) fail("zero denominator");
        weight /= den;
        skip_ws();
      }
      if (pos >= text.size() || text[pos] != '*') fail("expected '*'");
      ++pos;
      skip_ws();
    }
    if (pos >= text.size() || text[pos] != '|') fail("expected '|'");
    ++pos;
    const std::size_t start = pos;
    while (pos < text.size() && std::isalnum(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected an amplitude label");
    std::string label(text.substr(start, pos - start));
    if (text.substr(pos, 3) != "|^2") fail("expected '|^2'");
    pos += 3;
    obj.terms.push_back({sign * weight, std::move(label)});
    first = false;
    skip_ws();
    if (pos == text.size()) break;
  }
  return obj;
}

std::string Objective::to_string() const {
  std::ostringstream out;
  out.precision(17);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const double w = terms[i].weight;
    if (i > 0) out << (w < 0 ? "-" : "+");
    else if (w < 0) out << "-";
    if (std::abs(w) != 1.0) out << std::abs(w) << "*";
    out << "|" << terms[i].label << "|^2";
  }
  return out.str();
}

double Objective::operator()(const AmplitudeSet& amplitudes) const {
  double sum = 0.0;
  for (const auto& t : terms) sum += t.weight * std::norm(amplitudes[t.label]);
  return sum;
}

Source analytic_source(Family family, std::span<const Complex> args) {
  std::vector<Complex> copy(args.begin(), args.end());
  auto labels = evaluate_family(family, copy, 0.0).labels;
  return {std::move(labels), [family, copy](double x) { return evaluate_family(family, copy, x); }};
}

Source numeric_source(const Generator& generator, const StateVector& initial, Family layout) {
  if (!(generator.xi() > 0.0)) throw std::invalid_argument("numeric source needs xi > 0");
  if (generator.manifold().n_total() != family_manifold(layout)) {
    throw std::invalid_argument("layout family lives on a different manifold");
  }
  auto propagator = std::make_shared<Propagator>(generator, initial);
  const double xi = generator.xi();
  std::vector<std::string> labels;
  for (const auto& entry : family_layout(layout)) labels.push_back(entry.label);
  return {std::move(labels),
          [propagator, xi, layout](double x) { return read_amplitudes(layout, propagator->at(x / xi)); }};
}

std::vector<ExtremumReport> scan_extrema(const Objective& objective, const Source& source, double lo, double hi,
                                         std::size_t grid) {
  if (grid < 16) throw std::invalid_argument("scan grid must have at least 16 points");
  if (!(hi > lo)) throw std::invalid_argument("scan window is empty");
  for (const auto& t : objective.terms) {
    if (std::find(source.labels.begin(), source.labels.end(), t.label) == source.labels.end()) {
      throw std::invalid_argument("objective label '" + t.label + "' is not provided by the source");
    }
  }
  const auto xs = uniform_grid(lo, hi, grid);
  std::vector<double> fs(grid);
  for (std::size_t i = 0; i < grid; ++i) fs[i] = evaluate(objective, source, xs[i]);

  std::vector<ExtremumReport> out;
  // Non-flat steps as (index of step start, sign).
  std::vector<std::pair<std::size_t, int>> steps;
  for (std::size_t i = 0; i + 1 < grid; ++i) {
    const int s = step_sign(fs[i + 1] - fs[i]);
    if (s != 0) steps.emplace_back(i, s);
  }
  if (steps.empty()) return out;

  if (steps.front().first == 0) {
    out.push_back({lo, fs[0], steps.front().second > 0 ? ExtremumKind::min : ExtremumKind::max, 0.0, true});
  }
  for (std::size_t k = 0; k + 1 < steps.size(); ++k) {
    if (steps[k].second == steps[k + 1].second) continue;
    const auto kind = steps[k].second > 0 ? ExtremumKind::max : ExtremumKind::min;
    const double a = xs[steps[k].first];
    const double b = xs[steps[k + 1].first + 1];
    const auto [x, width] = refine(objective, source, a, b, kind);
    out.push_back({x, evaluate(objective, source, x), kind, width, false});
  }
  if (steps.back().first == grid - 2) {
    out.push_back({hi, fs.back(), steps.back().second > 0 ? ExtremumKind::max : ExtremumKind::min, 0.0, true});
  }
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.xi_t < r.xi_t; });
  return out;
}

ExtremumCheck verify_extremum(const Objective& objective, const Source& source, const ExtremumReport& report) {
  const double x = report.xi_t;
  const double h1 = 1e-6;
  const double h2 = 1e-4;
  const double deriv =
      (evaluate(objective, source, x + h1) - evaluate(objective, source, x - h1)) / (2 * h1);
  const double second = evaluate(objective, source, x + h2) - 2 * evaluate(objective, source, x) +
                        evaluate(objective, source, x - h2);
  const bool curvature_ok = report.kind == ExtremumKind::min ? second > 0.0 : second < 0.0;
  return {deriv, second, std::abs(deriv) <= 1e-6 && curvature_ok};
}

ExponentialSum amplitude_series(const Generator& generator, const StateVector& initial, Family layout,
                                std::string_view label) {
  if (!(generator.xi() > 0.0)) throw std::invalid_argument("amplitude series in xi*t needs xi > 0");
  for (const auto& entry : family_layout(layout)) {
    if (entry.label != label) continue;
    const Propagator propagator(generator, initial);
    const auto& first = entry.terms.front();
    auto sum = propagator.component(generator.manifold().index_of(first.state));
    for (auto& w : sum.omega) w /= generator.xi();
    for (auto& c : sum.coeff) c /= first.weight;
    return sum;
  }
  throw std::invalid_argument("layout has no amplitude '" + std::string(label) + "'");
}

double dwell_time(const ExponentialSum& amplitude, double period) { return amplitude.mean_square(period); }

double dwell_time_quadrature(const std::function<Complex(double)>& amplitude, double period, std::size_t intervals) {
  if (!(period > 0.0)) throw std::invalid_argument("period must be positive");
  if (intervals < 2) intervals = 2;
  if (intervals % 2 != 0) ++intervals;
  const double h = period / static_cast<double>(intervals);
  double sum = std::norm(amplitude(0.0)) + std::norm(amplitude(period));
  for (std::size_t i = 1; i < intervals; ++i) {
    sum += (i % 2 == 1 ? 4.0 : 2.0) * std::norm(amplitude(h * static_cast<double>(i)));
  }
  return sum * h / 3.0 / period;
}

double dwell_time(std::string_view label, const Source& source, double period, std::size_t intervals) {
  if (std::find(source.labels.begin(), source.labels.end(), label) == source.labels.end()) {
    throw std::invalid_argument("source has no amplitude '" + std::string(label) + "'");
  }
  const std::string key(label);
  return dwell_time_quadrature([&](double x) { return source.evaluate(x)[key]; }, period, intervals);
}

PeriodReport detect_period(const Eigen::MatrixXcd& matrix) {
  PeriodReport report;
  const auto all = eigenfrequencies(matrix);
  if (const auto base = common_base(differences_from_first(all))) {
    report.state_period = 2.0 * std::numbers::pi / *base;
  }
  std::vector<double> within;
  for (const auto& block : components(matrix)) {
    Eigen::MatrixXcd sub(static_cast<Eigen::Index>(block.size()), static_cast<Eigen::Index>(block.size()));
    for (std::size_t i = 0; i < block.size(); ++i) {
      for (std::size_t j = 0; j < block.size(); ++j) {
        sub(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
            matrix(static_cast<Eigen::Index>(block[i]), static_cast<Eigen::Index>(block[j]));
      }
    }
    const auto d = differences_from_first(eigenfrequencies(sub));
    within.insert(within.end(), d.begin(), d.end());
  }
  if (const auto base = common_base(within)) report.modulus_period = 2.0 * std::numbers::pi / *base;
  return report;
}

PeriodReport detect_period(const Generator& generator) {
  if (!(generator.xi() > 0.0)) throw std::invalid_argument("periods in xi*t need xi > 0");
  return detect_period(Eigen::MatrixXcd(generator.matrix() / generator.xi()));
}

}  // namespace trimodal

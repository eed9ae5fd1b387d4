#include "graph_energy/report.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>

#include <fmt/format.h>
#include <json.hpp>

#include "graph_energy/quartic_bound.hpp"
#include "graph_energy/spectral.hpp"

namespace genergy {

Tolerances Tolerances::scaled(double factor) const {
  Tolerances t = *this;
  t.soundness *= factor;
  t.tightness *= factor;
  t.membership *= factor;
  t.lp_bracket *= factor;
  t.path_agreement *= factor;
  return t;
}

Tolerances Tolerances::from_environment() {
  Tolerances t;
  if (const char* raw = std::getenv("ME_TOLERANCE_SCALE")) {
    char* end = nullptr;
    const double factor = std::strtod(raw, &end);
    if (end != raw && *end == '\0' && factor > 0 && std::isfinite(factor)) return t.scaled(factor);
  }
  return t;
}

bool BoundReport::sound(const Tolerances& tol) const {
  const double slack = tol.soundness * std::max(1.0, energy);
  if (theorem1_bound < energy - slack) return false;
  if (lp_upper && *lp_upper < energy - tol.lp_bracket) return false;
  if (lp_lower && *lp_lower > energy + tol.lp_bracket) return false;
  return true;
}

namespace {

bool close(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

BoundReport analyze_graph(const Graph& g, const AnalyzeOptions& options) {
  const Tolerances& tol = options.tolerances;
  BoundReport r;
  r.label = g.label();
  const Spectrum spectrum = eigenvalues(g);
  r.energy = energy(spectrum);
  r.summary = moment_summary(g);
  r.connected = is_connected(g);

  if (r.summary.max_degree == 0) {
    r.theorem1_bound = 0.0;
    r.tightness = 1.0;
    r.classification.tag = EqualityTag::TightUnclassified;
    r.classification.spectrum_ok = true;
  } else {
    const AbcTriple t = abc_triple(r.summary);
    r.triple = t;
    const auto opt = optimal_r(t);
    r.optimal_r = opt.r;
    r.r_clamped = opt.clamped;
    r.theorem1_bound = theorem1_bound(t);

    if (opt.r > 0.0 && opt.r < 1.0) {
      const double by_formula = bound_at_r(t, opt.r);
      const EvenPolynomial quartic = dilate(pr_coefficients(opt.r), t.max_degree);
      const std::int64_t moments[3] = {r.summary.n, r.summary.m2, r.summary.m4};
      const double by_polynomial = contract<double, std::int64_t>(quartic, moments);
      if (!close(by_formula, by_polynomial, tol.path_agreement) ||
          !close(by_formula, r.theorem1_bound, tol.path_agreement))
        throw Error(ErrorCode::InternalMismatch,
                    fmt::format("quartic bound paths disagree: closed form {}, formula {}, "
                                "polynomial {}",
                                r.theorem1_bound, by_formula, by_polynomial));
    }

    if (auto d = is_regular(g); d && *d >= 1 && g.order() >= 2)
      r.van_dam_bound = van_dam_bound(r.summary.n, static_cast<std::int64_t>(*d));

    r.tightness = r.energy > 0 ? r.theorem1_bound / r.energy
                               : std::numeric_limits<double>::infinity();
    ClassifyOptions copts;
    copts.tight_tol = tol.tightness;
    copts.membership_tol = tol.membership;
    r.classification = classify_equality(g, spectrum, t, r.energy, r.theorem1_bound, copts);
  }

  if (options.lp_degree) {
    r.lp_upper = solve_bound_lp(make_lp_problem(g, *options.lp_degree, Direction::Above)).objective;
    r.lp_lower = solve_bound_lp(make_lp_problem(g, *options.lp_degree, Direction::Below)).objective;
  }
  return r;
}

// ---------------------------------------------------------------------------

std::string format_real(double x) { return fmt::format("{:.12g}", x); }

std::vector<std::string> analyze_columns(bool with_lp) {
  std::vector<std::string> columns{
      "n",      "m",      "max_degree", "zagreb",         "quad_count",    "m2",
      "m4",     "A",      "B",          "C",              "r_star",        "clamped",
      "energy", "theorem1_bound", "van_dam_bound", "tightness", "classification", "connected"};
  if (with_lp) {
    columns.push_back("lp_upper");
    columns.push_back("lp_lower");
  }
  return columns;
}

Row analyze_row(const BoundReport& r, bool with_lp) {
  const auto& s = r.summary;
  auto opt = [](const std::optional<double>& x) -> Cell {
    if (x) return *x;
    return std::monostate{};
  };
  Row row{s.n,
          s.m,
          s.max_degree,
          s.zagreb,
          s.quad_count,
          s.m2,
          s.m4,
          r.triple ? Cell{r.triple->a} : Cell{},
          r.triple ? Cell{r.triple->b} : Cell{},
          r.triple ? Cell{r.triple->c} : Cell{},
          opt(r.optimal_r),
          r.r_clamped,
          r.energy,
          r.theorem1_bound,
          opt(r.van_dam_bound),
          r.tightness,
          to_string(r.classification),
          r.connected};
  if (with_lp) {
    row.push_back(opt(r.lp_upper));
    row.push_back(opt(r.lp_lower));
  }
  return row;
}

const std::vector<std::string>& sweep_columns() {
  static const std::vector<std::string> columns{
      "graph",    "label",          "degree", "lp_upper", "lp_lower",
      "certified", "theorem1_bound", "energy", "connected"};
  return columns;
}

SweepReport sweep_graph(const Graph& g, std::size_t graph_index, std::size_t max_degree) {
  SweepReport r;
  r.graph_index = graph_index;
  r.label = g.label();
  r.connected = is_connected(g);
  r.energy = energy(g);
  const auto summary = moment_summary(g);
  r.theorem1_bound = summary.max_degree > 0 ? theorem1_bound(abc_triple(summary)) : 0.0;
  r.rows = bound_sweep(g, max_degree);
  return r;
}

std::vector<Row> sweep_rows(const SweepReport& r) {
  std::vector<Row> out;
  for (const auto& row : r.rows)
    out.push_back({static_cast<std::int64_t>(r.graph_index), r.label,
                   static_cast<std::int64_t>(row.degree), row.upper, row.lower, row.certified,
                   r.theorem1_bound, r.energy, r.connected});
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::string csv_cell(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_real(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(const std::string& v) const {
      if (v.find_first_of(",\"\n\r") == std::string::npos) return v;
      std::string quoted = "\"";
      for (char c : v) {
        if (c == '"') quoted += '"';
        quoted += c;
      }
      return quoted + '"';
    }
  };
  return std::visit(Visitor{}, cell);
}

std::string json_cell(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return "null"; }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return std::isfinite(v) ? format_real(v) : "null"; }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(const std::string& v) const { return nlohmann::json(v).dump(); }
  };
  return std::visit(Visitor{}, cell);
}

}  // namespace

TableWriter::TableWriter(std::ostream& out, OutputFormat format, std::vector<std::string> columns)
    : out_(out), format_(format), columns_(std::move(columns)) {
  if (format_ == OutputFormat::Csv) {
    for (std::size_t i = 0; i < columns_.size(); ++i) out_ << (i ? "," : "") << columns_[i];
    out_ << '\n';
  } else {
    out_ << '[';
  }
}

void TableWriter::write(const Row& cells) {
  if (cells.size() != columns_.size())
    throw Error(ErrorCode::InternalMismatch, "row width does not match header");
  if (format_ == OutputFormat::Csv) {
    for (std::size_t i = 0; i < cells.size(); ++i) out_ << (i ? "," : "") << csv_cell(cells[i]);
    out_ << '\n';
  } else {
    out_ << (first_ ? "\n  {" : ",\n  {");
    for (std::size_t i = 0; i < cells.size(); ++i)
      out_ << (i ? ", " : "") << nlohmann::json(columns_[i]).dump() << ": " << json_cell(cells[i]);
    out_ << '}';
  }
  first_ = false;
}

void TableWriter::finish() {
  if (finished_) return;
  finished_ = true;
  if (format_ == OutputFormat::Json) out_ << (first_ ? "]\n" : "\n]\n");
}

}  // namespace genergy

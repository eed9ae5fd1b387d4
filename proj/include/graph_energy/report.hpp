#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "graph_energy/extremal.hpp"
#include "graph_energy/graph.hpp"
#include "graph_energy/moments.hpp"
#include "graph_energy/poly_opt.hpp"

namespace genergy {

/// Default tolerances; `ME_TOLERANCE_SCALE` multiplies all of them.
struct Tolerances {
  double soundness = 1e-7;   // bound >= energy - soundness * max(1, energy)
  double tightness = 1e-6;   // equality classification threshold
  double membership = 1e-7;  // spectrum vs {+-r* D, +-D}, relative to D
  double lp_bracket = 1e-6;  // lp_lower - tol <= energy <= lp_upper + tol
  double path_agreement = 1e-9;

  Tolerances scaled(double factor) const;
  /// Defaults scaled by ME_TOLERANCE_SCALE when it is set to a positive number.
  static Tolerances from_environment();
};

struct BoundReport {
  std::string label;
  MomentSummary summary;
  std::optional<AbcTriple> triple;  // empty for edgeless graphs
  double energy = 0.0;
  double theorem1_bound = 0.0;
  std::optional<double> van_dam_bound;  // regular graphs, n >= 2, d >= 1
  std::optional<double> optimal_r;
  bool r_clamped = false;
  std::optional<double> lp_upper;
  std::optional<double> lp_lower;
  double tightness = 1.0;  // bound / energy (1 when both vanish)
  EqualityClass classification;
  bool connected = true;

  /// theorem1_bound >= energy and, when present, lp bounds bracket energy.
  bool sound(const Tolerances& tol) const;
};

struct AnalyzeOptions {
  Tolerances tolerances;
  /// Adds lp_upper / lp_lower at this even degree when set.
  std::optional<std::size_t> lp_degree;
};

/// Full pipeline for one graph. The quartic bound is evaluated twice, by the
/// closed form and by contracting the dilated optimal quartic against the
/// moments; InternalMismatch if the two disagree.
BoundReport analyze_graph(const Graph& g, const AnalyzeOptions& options = {});

// ---------------------------------------------------------------------------
// Tabular output. Floats use 12 significant digits, '.' decimal, no locale.

std::string format_real(double x);

/// One table cell; monostate renders as an empty CSV field / JSON null.
using Cell = std::variant<std::monostate, std::int64_t, double, bool, std::string>;
using Row = std::vector<Cell>;

/// n,m,max_degree,zagreb,quad_count,m2,m4,A,B,C,r_star,clamped,energy,
/// theorem1_bound,van_dam_bound,tightness,classification,connected, then
/// lp_upper,lp_lower when `with_lp`.
std::vector<std::string> analyze_columns(bool with_lp = false);
Row analyze_row(const BoundReport& r, bool with_lp = false);

const std::vector<std::string>& sweep_columns();
struct SweepReport {
  std::size_t graph_index = 0;
  std::string label;
  bool connected = true;
  double energy = 0.0;
  double theorem1_bound = 0.0;
  std::vector<SweepRow> rows;
};
SweepReport sweep_graph(const Graph& g, std::size_t graph_index, std::size_t max_degree);
std::vector<Row> sweep_rows(const SweepReport& r);

enum class OutputFormat { Csv, Json };

/// Streams rows as CSV (header first) or as a JSON array of flat objects
/// whose keys are the column names.
class TableWriter {
 public:
  TableWriter(std::ostream& out, OutputFormat format, std::vector<std::string> columns);
  void write(const Row& cells);
  void finish();

 private:
  std::ostream& out_;
  OutputFormat format_;
  std::vector<std::string> columns_;
  bool first_ = true;
  bool finished_ = false;
};

}  // namespace genergy

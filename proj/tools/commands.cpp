#include "commands.hpp"

#include <atomic>
#include <exception>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <thread>

#include "graph_energy/error.hpp"
#include "graph_energy/graph.hpp"

namespace genergy::cli {

namespace {

constexpr std::size_t kBatchSize = 256;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Yields graphs in input order, a batch at a time, so memory stays bounded
/// by the batch regardless of corpus size.
class GraphSource {
 public:
  explicit GraphSource(const RunConfig& config) {
    if (config.input_path.has_value() == config.generator.has_value())
      throw InputError("exactly one of --in and --gen is required");
    if (config.generator) {
      pending_ = generate(parse_family_spec(*config.generator));
      return;
    }
    file_.open(*config.input_path);
    if (!file_) throw InputError("cannot open " + *config.input_path);
    // An edge list announces itself with "n <count>" on its first content line.
    std::string line;
    std::streampos start = file_.tellg();
    while (std::getline(file_, line)) {
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      if (line.compare(first, 2, "n ") == 0) {
        file_.clear();
        file_.seekg(start);
        std::stringstream all;
        all << file_.rdbuf();
        try {
          pending_ = parse_edge_list(all.str());
        } catch (const Error& e) {
          throw InputError(std::string(e.what()));
        }
        return;
      }
      break;
    }
    file_.clear();
    file_.seekg(start);
    graph6_ = true;
  }

  bool next_batch(std::vector<Graph>& out) {
    out.clear();
    if (!graph6_) {
      if (pending_) out.push_back(std::move(*pending_));
      pending_.reset();
      return !out.empty();
    }
    std::string line;
    while (out.size() < kBatchSize && std::getline(file_, line)) {
      ++line_no_;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      try {
        out.push_back(parse_graph6(line).with_label("line:" + std::to_string(line_no_)));
      } catch (const Error& e) {
        throw InputError("line " + std::to_string(line_no_) + ": " + e.what());
      }
    }
    return !out.empty();
  }

 private:
  std::ifstream file_;
  bool graph6_ = false;
  std::size_t line_no_ = 0;
  std::optional<Graph> pending_;
};

/// Applies `fn` to every graph on a small worker pool; results come back in
/// input order. The first exception (by index) is rethrown.
template <typename Result, typename Fn>
std::vector<Result> parallel_map(const std::vector<Graph>& graphs, std::size_t threads, Fn fn) {
  std::vector<std::optional<Result>> slots(graphs.size());
  std::vector<std::exception_ptr> errors(graphs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < graphs.size(); i = next++) {
      try {
        slots[i] = fn(graphs[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, graphs.size());
  std::vector<std::jthread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  pool.clear();
  std::vector<Result> out;
  out.reserve(graphs.size());
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

/// Opens --out or falls back to the caller's stream.
struct Sink {
  std::unique_ptr<std::ofstream> file;
  std::ostream* stream;

  Sink(const std::optional<std::string>& path, std::ostream& fallback) : stream(&fallback) {
    if (!path) return;
    file = std::make_unique<std::ofstream>(*path, std::ios::binary);
    if (!*file) throw InputError("cannot open " + *path + " for writing");
    stream = file.get();
  }
};

}  // namespace

int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.lp_max_degree && (*config.lp_max_degree % 2 != 0 || *config.lp_max_degree > kLpMaxDegree))
      throw InputError("--lp-degree must be even and at most 16");
    GraphSource source(config);
    Sink sink(config.output_path, out);
    const bool with_lp = config.lp_max_degree.has_value();
    TableWriter writer(*sink.stream, config.format, analyze_columns(with_lp));
    AnalyzeOptions options;
    options.tolerances = config.tolerances;
    options.lp_degree = config.lp_max_degree;
    bool violation = false;
    std::vector<Graph> batch;
    while (source.next_batch(batch)) {
      const auto reports = parallel_map<BoundReport>(
          batch, config.threads, [&](const Graph& g) { return analyze_graph(g, options); });
      for (const auto& report : reports) {
        writer.write(analyze_row(report, with_lp));
        if (!report.sound(config.tolerances)) {
          violation = true;
          err << "soundness violation: " << report.label << " energy "
              << format_real(report.energy) << " bound " << format_real(report.theorem1_bound)
              << '\n';
        }
      }
    }
    writer.finish();
    sink.stream->flush();
    return violation && config.fail_on_violation ? 2 : 0;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  }
  return 1;
}

int cmd_generate(const std::string& spec, std::ostream& out, std::ostream& err) {
  try {
    out << write_graph6(generate(parse_family_spec(spec))) << '\n';
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  }
  return 1;
}

int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (!config.lp_max_degree) throw InputError("--max-degree is required");
    const std::size_t max_degree = *config.lp_max_degree;
    if (max_degree < 2 || max_degree % 2 != 0 || max_degree > kLpMaxDegree)
      throw InputError("--max-degree must be even, between 2 and 16");
    GraphSource source(config);
    Sink sink(config.output_path, out);
    TableWriter writer(*sink.stream, config.format, sweep_columns());
    std::vector<Graph> batch;
    std::size_t index = 0;
    while (source.next_batch(batch)) {
      const std::size_t base = index;
      const auto reports = parallel_map<SweepReport>(batch, config.threads, [&](const Graph& g) {
        return sweep_graph(g, base + static_cast<std::size_t>(&g - batch.data()), max_degree);
      });
      index += batch.size();
      for (const auto& report : reports)
        for (const auto& row : sweep_rows(report)) writer.write(row);
    }
    writer.finish();
    sink.stream->flush();
    return 0;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  }
  return 1;
}

}  // namespace genergy::cli

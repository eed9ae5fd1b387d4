#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace genergy;
  CLI::App app{"Graph energy: exact spectra and spectral-moment energy bounds"};
  app.require_subcommand(1);

  cli::RunConfig config;
  std::string format = "csv";
  const std::map<std::string, OutputFormat> formats{{"csv", OutputFormat::Csv},
                                                    {"json", OutputFormat::Json}};

  auto* analyze = app.add_subcommand("analyze", "One report row per input graph");
  auto* in_opt = analyze->add_option("--in", config.input_path,
                                     "graph6 file (one graph per line) or edge-list file");
  analyze->add_option("--gen", config.generator, "generator spec, e.g. rook:4")->excludes(in_opt);
  analyze->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  analyze->add_option("--out", config.output_path, "output file (default stdout)");
  analyze->add_option("--lp-degree", config.lp_max_degree, "also report LP bounds at this even degree");
  analyze->add_flag("--fail-on-violation", config.fail_on_violation,
                    "exit 2 if any bound fails to dominate the energy");
  analyze->add_option("--threads", config.threads, "worker threads (0 = all cores)");

  std::string spec;
  std::optional<std::string> generate_out;
  auto* generate = app.add_subcommand("generate", "Write a generated graph as graph6");
  generate->add_option("spec", spec, "generator spec")->required();
  generate->add_option("--out", generate_out, "output file (default stdout)");

  auto* sweep = app.add_subcommand("sweep", "LP bounds for polynomial degrees 2..2K");
  auto* sweep_in = sweep->add_option("--in", config.input_path, "graph6 or edge-list file");
  sweep->add_option("--gen", config.generator, "generator spec")->excludes(sweep_in);
  sweep->add_option("--max-degree", config.lp_max_degree, "largest even degree (<= 16)")->required();
  sweep->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--out", config.output_path, "output file (default stdout)");
  sweep->add_option("--threads", config.threads, "worker threads (0 = all cores)");

  CLI11_PARSE(app, argc, argv);
  config.format = formats.at(format);

  if (analyze->parsed()) return cli::cmd_analyze(config, std::cout, std::cerr);
  if (sweep->parsed()) return cli::cmd_sweep(config, std::cout, std::cerr);
  if (generate_out) {
    std::ofstream file(*generate_out, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot open " << *generate_out << " for writing\n";
      return 1;
    }
    return cli::cmd_generate(spec, file, std::cerr);
  }
  return cli::cmd_generate(spec, std::cout, std::cerr);
}

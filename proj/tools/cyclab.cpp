// cyclab: homology calculator and verification driver.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "cyclab/commands.hpp"
#include "cyclab/errors.hpp"
#include "cyclab/parallel.hpp"

using namespace cyclab;

namespace {

std::vector<int> parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t pos = 0;
      const int v = std::stoi(item, &pos);
      if (pos != item.size() || v < 1) throw std::invalid_argument(item);
      parts.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("bad partition \"" + text + "\"");
    }
  }
  if (!std::is_sorted(parts.rbegin(), parts.rend())) throw ParseError("partition \"" + text + "\" is not decreasing");
  return parts;
}

void add_common(CLI::App* sub, RunConfig& c) {
  sub->add_option("--threads", c.threads, "Worker threads (default: available parallelism)");
  sub->add_option("--seed", c.seed, "Seed for sampled checks and generated models");
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "table"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact homology of algebras, matrix Lie algebras and finite cosheaf models"};
  app.require_subcommand(1);
  RunConfig c;
  std::string algebra, lie, cover, json_path;
  std::string alpha = "1", beta = "1";

  auto* homology = app.add_subcommand("homology", "Betti numbers of a complex built from an input file");
  homology->add_option("kind", c.kind, "Complex")->required()->check(CLI::IsMember(homology_kinds()));
  homology->add_option("--algebra", algebra, "Algebra definition (JSON)");
  homology->add_option("--lie", lie, "Lie algebra definition (JSON)");
  homology->add_option("--gl", c.gl, "Use gl_N of the algebra");
  homology->add_option("--max-degree", c.max_degree, "Highest degree reported");
  homology->add_option("--json", json_path, "Also write the report here");
  add_common(homology, c);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("kind", c.kind, "Suite")->required()->check(CLI::IsMember(verify_kinds()));
  verify->add_option("--algebra", algebra, "Algebra definition (JSON)");
  verify->add_option("--cover", cover, "Cover model with precosheaf (JSON)");
  verify->add_option("--complex", c.complexes, "Chain complex (JSON); give two for kunneth");
  verify->add_option("--n,--gl", c.n, "Matrix size n");
  verify->add_option("--k", c.k, "Tensor degree for phi");
  verify->add_option("--max-degree", c.max_degree, "Highest degree checked");
  verify->add_option("--max-r", c.max_r, "Highest homological degree for lqt");
  verify->add_option("--max-k", c.max_k, "Highest k for xi");
  verify->add_option("--alpha", alpha, "Partition alpha for psi, comma separated");
  verify->add_option("--beta", beta, "Partition beta for psi, comma separated");
  verify->add_option("--count", c.count, "Number of generated cases");
  verify->add_flag("--h-unital", c.h_unital, "Force the H-unital route for lqt");
  verify->add_option("--json", json_path, "Also write the report here");
  add_common(verify, c);

  auto* report = app.add_subcommand("report", "Aggregate JSON reports into one document");
  report->add_option("inputs", c.inputs, "Report files");
  report->add_option("--json", json_path, "Also write the document here");
  add_common(report, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (!algebra.empty()) c.algebra = algebra;
    if (!lie.empty()) c.lie = lie;
    if (!cover.empty()) c.cover = cover;
    c.alpha = parse_partition(alpha);
    c.beta = parse_partition(beta);
    c.threads = c.threads ? c.threads : std::max(1u, std::thread::hardware_concurrency());
    set_thread_count(c.threads);

    Json doc;
    if (homology->parsed()) {
      c.command = "homology";
      doc = run_homology(c);
    } else if (verify->parsed()) {
      c.command = "verify";
      doc = run_verify(c);
    } else {
      c.command = "report";
      doc = run_report(c);
    }
    const std::string text = dump_json(doc);
    if (!json_path.empty()) {
      std::ofstream out(json_path, std::ios::binary);
      if (!out) throw ParseError(json_path + ": cannot write");
      out << text;
    }
    if (c.format == "table")
      std::cout << render_table(doc);
    else
      std::cout << text;
    return exit_code(doc);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ShapeError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const ResourceGuardError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}

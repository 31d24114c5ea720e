#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclab/io.hpp"

namespace cyclab {

struct RunConfig {
  std::string command;
  std::string kind;
  std::optional<std::string> algebra;
  std::optional<std::string> lie;
  std::optional<std::string> cover;
  std::vector<std::string> complexes;
  std::vector<std::string> inputs;
  std::optional<Index> gl;
  Index n = 2;
  int max_degree = 3;
  int max_r = 1;
  int max_k = 12;
  Index k = 2;
  std::vector<int> alpha{1};
  std::vector<int> beta{1};
  int count = 10;
  bool h_unital = false;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::string format = "json";
};

/// Kinds accepted by `homology` and `verify`.
const std::vector<std::string>& homology_kinds();
const std::vector<std::string>& verify_kinds();

/// {"command", "kind", "seed", "reports": [...], "verdict"}. Throws the
/// library errors (ParseError, InvariantViolation, ResourceGuardError).
Json run_homology(const RunConfig& c);
Json run_verify(const RunConfig& c);
/// {"entries": [...]}: each input document's reports, with its source path.
Json run_report(const RunConfig& c);

/// Fixed-width table view of a document produced above.
std::string render_table(const Json& doc);

/// 0 pass, 1 failed verdict.
int exit_code(const Json& doc);

}  // namespace cyclab

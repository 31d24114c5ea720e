#include "cyclab/commands.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "cyclab/cech.hpp"
#include "cyclab/cyclic.hpp"
#include "cyclab/double_complex.hpp"
#include "cyclab/errors.hpp"
#include "cyclab/lqt.hpp"
#include "cyclab/random.hpp"

namespace cyclab {

namespace {

Algebra need_algebra(const RunConfig& c) {
  if (!c.algebra) throw ParseError(c.command + " " + c.kind + ": --algebra is required");
  return algebra_from_json(read_json_file(*c.algebra));
}

void need_degree(int d, const char* flag) {
  if (d < 1) throw ParseError(std::string(flag) + " must be at least 1");
}

std::vector<long long> first_betti(const HomologyResult& h, int max_degree) {
  std::vector<long long> out;
  for (std::size_t n = 0; n < h.betti.size() && static_cast<int>(n) <= max_degree && h.reliable[n]; ++n)
    out.push_back(static_cast<long long>(h.betti[n]));
  return out;
}

Json document(const RunConfig& c, const std::vector<CheckReport>& reports) {
  Json rs = Json::array();
  bool verdict = true;
  for (const auto& r : reports) {
    rs.push_back(to_json(r));
    verdict = verdict && r.verdict;
  }
  return {{"command", c.command}, {"kind", c.kind}, {"seed", c.seed}, {"reports", rs}, {"verdict", verdict}};
}

std::string join(const Json& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + values[i].dump();
  return s;
}

}  // namespace

const std::vector<std::string>& homology_kinds() {
  static const std::vector<std::string> kinds{"hochschild", "bar", "connes", "cyclic-total", "bB-total", "ce", "gl"};
  return kinds;
}

const std::vector<std::string>& verify_kinds() {
  static const std::vector<std::string> kinds{"lqt",      "hunital", "theta", "phi",     "psi", "quasi-iso",
                                              "kunneth", "cech",    "spectral", "xi"};
  return kinds;
}

Json run_homology(const RunConfig& c) {
  need_degree(c.max_degree, "--max-degree");
  const int d = c.max_degree;
  CheckReport r;
  r.check = "homology_" + c.kind;
  r.seed = c.seed;
  r.params["max_degree"] = d;
  ChainComplex complex;
  if (c.kind == "hochschild" || c.kind == "bar" || c.kind == "connes" || c.kind == "cyclic-total" ||
      c.kind == "bB-total") {
    auto a = need_algebra(c);
    r.params["dim"] = a.dim();
    if (c.kind == "hochschild") complex = hochschild_complex(a, d + 1);
    if (c.kind == "bar") complex = bar_complex(a, d + 1);
    if (c.kind == "connes") complex = connes_complex(a, d + 1).complex;
    if (c.kind == "cyclic-total") complex = total_complex(cyclic_bicomplex(a, d + 1, d + 1));
    if (c.kind == "bB-total") {
      if (!a.unital()) throw InvariantViolation("bB-total needs a unital algebra");
      complex = total_complex(bB_bicomplex(a, (d + 1) / 2 + 1, d + 1));
    }
  } else if (c.kind == "ce" || c.kind == "gl") {
    LieAlgebra g;
    if (c.kind == "ce" && c.lie) {
      g = lie_from_json(read_json_file(*c.lie));
    } else {
      if (!c.gl) throw ParseError("homology " + c.kind + ": --gl N is required with --algebra");
      auto a = need_algebra(c);
      r.params["gl"] = *c.gl;
      r.params["algebra_dim"] = a.dim();
      g = gl_n_of(a, *c.gl);
    }
    r.params["dim"] = g.dim();
    complex = ce_complex(g, d + 1);
  } else {
    throw ParseError("unknown homology kind \"" + c.kind + "\"");
  }
  r.absorb(verify_complex(complex));
  auto h = homology(complex, {false});
  r.lhs_dims = first_betti(h, d);
  return document(c, {r});
}

Json run_verify(const RunConfig& c) {
  std::vector<CheckReport> reports;
  auto push = [&](CheckReport r) {
    r.seed = c.seed;
    reports.push_back(std::move(r));
  };
  if (c.kind == "lqt") {
    auto a = need_algebra(c);
    const bool route = c.h_unital || !a.unital();
    push(lqt_stable_check(a, c.n, c.max_r, route));
  } else if (c.kind == "hunital") {
    need_degree(c.max_degree, "--max-degree");
    push(h_unitality_check(need_algebra(c), c.max_degree));
  } else if (c.kind == "theta") {
    need_degree(c.max_degree, "--max-degree");
    push(theta_check(need_algebra(c), c.max_degree));
  } else if (c.kind == "phi") {
    if (c.n < 1 || c.k < 1) throw ParseError("--n and --k must be at least 1");
    push(trace_map_check(c.n, c.k));
    push(equivariance_check(c.n, c.k, c.seed));
  } else if (c.kind == "psi") {
    need_degree(c.max_degree, "--max-degree");
    push(psi_restriction_check(need_algebra(c), c.n, c.alpha, c.beta, c.max_degree));
  } else if (c.kind == "quasi-iso") {
    need_degree(c.max_degree, "--max-degree");
    push(quasi_iso_check(need_algebra(c), c.max_degree));
  } else if (c.kind == "kunneth") {
    if (!c.complexes.empty()) {
      if (c.complexes.size() != 2) throw ParseError("verify kunneth takes exactly two --complex files");
      push(kunneth_check(complex_from_json(read_json_file(c.complexes[0])),
                         complex_from_json(read_json_file(c.complexes[1]))));
    } else {
      Rng rng(c.seed);
      for (int i = 0; i < c.count; ++i) {
        auto a = random_chain_complex(rng, 3, 3);
        auto b = random_chain_complex(rng, 3, 3);
        push(kunneth_check(a, b));
      }
    }
  } else if (c.kind == "cech") {
    std::vector<FinitePrecosheaf> models;
    if (c.cover) {
      models.push_back(precosheaf_from_json(read_json_file(*c.cover)));
    } else {
      Rng rng(c.seed);
      for (int i = 0; i < c.count; ++i) models.push_back(cech_models::extension_by_zero(rng));
    }
    for (const auto& p : models) {
      push(cosheaf_axiom_check(p));
      push(cech_check(p));
    }
  } else if (c.kind == "spectral") {
    Rng rng(c.seed);
    for (int i = 0; i < c.count; ++i) push(convergence_check(random_double_complex(rng, 3, 3, 3)));
  } else if (c.kind == "xi") {
    if (c.n < 1 || c.max_k < 0) throw ParseError("--n must be at least 1 and --max-k non-negative");
    push(xi_check(static_cast<int>(c.n), c.max_k));
  } else {
    throw ParseError("unknown verify kind \"" + c.kind + "\"");
  }
  return document(c, reports);
}

Json run_report(const RunConfig& c) {
  Json entries = Json::array();
  for (const auto& path : c.inputs) {
    auto doc = read_json_file(path);
    Json reports = Json::array();
    if (doc.is_object() && doc.contains("reports") && doc["reports"].is_array()) {
      for (const auto& r : doc["reports"]) reports.push_back(to_json(report_from_json(r)));
    } else {
      reports.push_back(to_json(report_from_json(doc)));
    }
    Json e = {{"source", path}, {"reports", reports}};
    if (doc.is_object() && doc.contains("seed")) e["seed"] = doc["seed"];
    if (doc.is_object() && doc.contains("verdict")) e["verdict"] = doc["verdict"];
    entries.push_back(std::move(e));
  }
  return {{"command", "report"}, {"entries", entries}};
}

std::string render_table(const Json& doc) {
  std::ostringstream out;
  auto row = [&](const Json& r) {
    out << std::left << std::setw(22) << r.value("check", "") << std::setw(8)
        << (r.value("verdict", false) ? "pass" : "FAIL") << std::setw(8) << r.value("seed", 0) << "lhs ["
        << join(r.value("lhs_dims", Json::array())) << "]";
    if (!r.value("rhs_dims", Json::array()).empty()) out << "  rhs [" << join(r["rhs_dims"]) << "]";
    out << "\n";
    for (const auto& d : r.value("details", Json::array())) out << "    " << d.get<std::string>() << "\n";
  };
  auto header = [&] {
    out << std::left << std::setw(22) << "check" << std::setw(8) << "verdict" << std::setw(8) << "seed"
        << "dimensions\n";
  };
  if (doc.contains("entries")) {
    for (const auto& e : doc["entries"]) {
      out << "# " << e.value("source", "") << "\n";
      header();
      for (const auto& r : e["reports"]) row(r);
    }
    return out.str();
  }
  if (doc.value("command", "") == "homology") {
    const auto& r = doc["reports"][0];
    out << r.value("check", "") << "\n" << std::left << std::setw(8) << "degree" << "betti\n";
    const auto& b = r["lhs_dims"];
    for (std::size_t n = 0; n < b.size(); ++n) out << std::setw(8) << n << b[n].dump() << "\n";
    return out.str();
  }
  header();
  for (const auto& r : doc["reports"]) row(r);
  out << "verdict: " << (doc.value("verdict", false) ? "pass" : "FAIL") << "\n";
  return out.str();
}

int exit_code(const Json& doc) {
  if (doc.contains("verdict") && !doc["verdict"].get<bool>()) return 1;
  return 0;
}

}  // namespace cyclab

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rigidual/duality.hpp"
#include "rigidual/findual.hpp"
#include "rigidual/json_io.hpp"
#include "rigidual/moncat.hpp"
#include "suites.hpp"

using namespace rigidual;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitLawFailure = 1;
constexpr int kExitUsage = 2;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + out_path);
  out << text;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("RIGIDITY_DUAL_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
  }
  return kDefaultEnumerationBudget;
}

std::string format_report(const SuiteReport& rep) {
  std::ostringstream out;
  out << "suite " << rep.suite << " over " << rep.ring_spec << " (seed " << rep.seed << ")\n";
  for (const CaseResult& c : rep.cases) {
    out << "  " << (c.passed ? "pass" : "FAIL") << " " << c.id << "  " << c.law;
    if (!c.passed && !c.witness.empty()) out << " :: " << c.witness;
    out << "\n";
  }
  return out.str();
}

int run_check(const std::string& suite, SuiteConfig cfg, bool as_json,
              const std::string& out_path) {
  std::vector<std::string> selected;
  if (suite == "all") {
    RingPtr r = Ring::parse(cfg.ring_spec);
    for (const std::string& name : suite_names()) {
      if (name == "findual" && r->kind() != RingKind::gf_p) {
        std::cerr << "note: findual suite skipped (requires a prime field ring)\n";
        continue;
      }
      selected.push_back(name);
    }
  } else {
    selected.push_back(suite);
  }

  std::vector<SuiteReport> reports;
  for (const std::string& name : selected) reports.push_back(run_suite(name, cfg));

  bool all_ok = true;
  std::size_t total = 0, passed = 0;
  for (const SuiteReport& rep : reports) {
    all_ok = all_ok && rep.all_passed();
    for (const CaseResult& c : rep.cases) {
      ++total;
      if (c.passed) ++passed;
    }
  }

  if (as_json) {
    json arr = json::array();
    for (const SuiteReport& rep : reports) arr.push_back(report_to_json(rep));
    emit(canonical_dump(arr), out_path);
  } else {
    std::ostringstream text;
    for (const SuiteReport& rep : reports) text << format_report(rep);
    text << "summary: " << passed << "/" << total << " cases passed across " << reports.size()
         << (reports.size() == 1 ? " suite\n" : " suites\n");
    emit(text.str(), out_path);
  }
  return all_ok ? kExitOk : kExitLawFailure;
}

int run_dualize(const std::string& in_path, const std::string& direction, bool verify,
                const std::string& out_path) {
  json j = read_json_file(in_path);
  json result;
  if (direction == "monoid-to-coalgebra") {
    result = coalgebra_to_json(dual_coalgebra(monoid_from_json(j), verify));
  } else if (direction == "coalgebra-to-monoid") {
    result = monoid_to_json(dual_monoid(coalgebra_from_json(j), verify));
  } else if (direction == "algebra-to-finite-dual") {
    result = coalgebra_to_json(finite_dual(algebra_from_json(j)));
  } else {
    throw std::invalid_argument("unknown direction: " + direction);
  }
  emit(canonical_dump(result), out_path);
  return kExitOk;
}

int run_findual(const std::string& in_path, const std::string& ring_spec, int size,
                std::uint64_t budget, bool as_json, const std::string& out_path) {
  if (!in_path.empty()) {
    json j = read_json_file(in_path);
    emit(canonical_dump(coalgebra_to_json(finite_dual(algebra_from_json(j)))), out_path);
    return kExitOk;
  }
  RingPtr r = Ring::parse(ring_spec);
  if (r->kind() != RingKind::gf_p)
    throw std::invalid_argument("coreflexivity check requires a prime field ring, got " +
                                r->spec());
  std::vector<Label> labels;
  for (int i = 0; i < size; ++i) labels.push_back(Label::of(i));
  CheckResult res = check_coreflexivity(r, IndexSet::of(labels), budget);
  if (as_json) {
    json out;
    out["ring"] = r->spec();
    out["size"] = size;
    out["status"] = res.ok ? "pass" : "fail";
    if (!res.ok) out["witness"] = res.witness;
    emit(canonical_dump(out), out_path);
  } else {
    std::ostringstream text;
    text << (res.ok ? "pass" : "FAIL") << " coreflexivity of the function algebra over "
         << r->spec() << " on " << size << (size == 1 ? " point" : " points");
    if (!res.ok) text << " :: " << res.witness;
    text << "\n";
    emit(text.str(), out_path);
  }
  return res.ok ? kExitOk : kExitLawFailure;
}

int run_demo_diagonal(int n, const std::string& ring_spec, bool as_json,
                      const std::string& out_path) {
  RingPtr base = Ring::parse(ring_spec);
  std::vector<DiagonalDemoRow> rows;
  for (int i = 1; i <= n; ++i) rows.push_back(diagonal_support_demo(base, i));
  bool all_ok = true;
  for (const DiagonalDemoRow& row : rows)
    all_ok = all_ok && row.all_coordinates_hit &&
             row.support_size == static_cast<std::size_t>(row.n);
  if (as_json) {
    json arr = json::array();
    for (const DiagonalDemoRow& row : rows) {
      json r;
      r["n"] = row.n;
      r["support"] = row.support_size;
      r["all_coordinates_hit"] = row.all_coordinates_hit;
      arr.push_back(r);
    }
    emit(canonical_dump(arr), out_path);
  } else {
    std::ostringstream text;
    text << "diagonal functional over " << base->spec()
         << "^n: extracted support per factor count\n";
    text << "  n  support  all coordinates hit\n";
    for (const DiagonalDemoRow& row : rows)
      text << "  " << row.n << "  " << row.support_size << "  "
           << (row.all_coordinates_hit ? "yes" : "no") << "\n";
    emit(text.str(), out_path);
  }
  return all_ok ? kExitOk : kExitLawFailure;
}

int run_ring_info(const std::string& ring_spec, bool as_json, const std::string& out_path) {
  RingPtr r = Ring::parse(ring_spec);
  if (as_json) {
    json out;
    out["ring"] = r->spec();
    if (r->is_finite())
      out["order"] = *r->order();
    else
      out["order"] = nullptr;
    out["field"] = r->is_field();
    out["von_neumann_regular"] = r->is_von_neumann_regular();
    if (r->is_finite()) {
      json idem = json::array();
      for (const Scalar& e : r->idempotents()) idem.push_back(e.to_string());
      out["idempotents"] = idem;
    }
    emit(canonical_dump(out), out_path);
  } else {
    std::ostringstream text;
    text << "ring: " << r->spec() << "\n";
    if (r->is_finite())
      text << "order: " << *r->order() << "\n";
    else
      text << "order: infinite\n";
    text << "field: " << (r->is_field() ? "yes" : "no") << "\n";
    text << "von Neumann regular: " << (r->is_von_neumann_regular() ? "yes" : "no") << "\n";
    if (r->is_finite()) {
      text << "idempotents:";
      for (const Scalar& e : r->idempotents()) text << " " << e.to_string();
      text << "\n";
    }
    emit(text.str(), out_path);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact duality between free and topologically free modules"};
  app.require_subcommand(1);

  // check
  auto* check = app.add_subcommand("check", "Run law suites with seeded negative controls");
  std::string check_suite = "all";
  SuiteConfig cfg;
  cfg.budget = default_budget();
  bool check_json = false;
  std::string check_out;
  check->add_option("--suite", check_suite, "Suite name or 'all'")
      ->check(CLI::IsMember([] {
        std::vector<std::string> allowed = suite_names();
        allowed.push_back("all");
        return allowed;
      }()));
  check->add_option("--ring", cfg.ring_spec, "Ring spec, e.g. Z, Q, Z/6, GF(5), GF(2)xGF(3)");
  check->add_option("--seed", cfg.seed, "Deterministic seed");
  check->add_option("--cases", cfg.cases, "Generated cases per suite")->check(CLI::PositiveNumber);
  check->add_option("--size", cfg.size, "Index-set size ceiling")->check(CLI::PositiveNumber);
  check->add_option("--budget", cfg.budget, "Enumeration budget for functional searches");
  check->add_flag("--inject-corrupt", cfg.inject_corrupt,
                  "Append a corrupted non-control case that must fail");
  check->add_flag("--json", check_json, "Emit the canonical JSON report");
  check->add_option("--out", check_out, "Write output to a file instead of stdout");

  // dualize
  auto* dualize = app.add_subcommand("dualize", "Transpose a structure file");
  std::string dz_in, dz_direction, dz_out;
  bool dz_verify = false;
  dualize->add_option("--in", dz_in, "Input JSON file")->required();
  dualize
      ->add_option("--direction", dz_direction,
                   "monoid-to-coalgebra, coalgebra-to-monoid, or algebra-to-finite-dual")
      ->required()
      ->check(CLI::IsMember(
          {"monoid-to-coalgebra", "coalgebra-to-monoid", "algebra-to-finite-dual"}));
  dualize->add_flag("--verify", dz_verify, "Check the input laws first; violations exit 1");
  dualize->add_option("--out", dz_out, "Write output to a file instead of stdout");

  // findual
  auto* findual = app.add_subcommand(
      "findual", "Finite dual of an algebra file, or coreflexivity of a function algebra");
  std::string fd_in, fd_ring = "GF(2)", fd_out;
  int fd_size = 3;
  std::uint64_t fd_budget = default_budget();
  bool fd_json = false;
  findual->add_option("--in", fd_in, "Algebra JSON file; emits its finite dual coalgebra");
  findual->add_option("--ring", fd_ring, "Prime field for the coreflexivity check");
  findual->add_option("--size", fd_size, "Number of points of the function algebra")
      ->check(CLI::PositiveNumber);
  findual->add_option("--budget", fd_budget, "Enumeration budget for functional searches");
  findual->add_flag("--json", fd_json, "Emit JSON");
  findual->add_option("--out", fd_out, "Write output to a file instead of stdout");

  // demo diagonal
  auto* demo = app.add_subcommand("demo", "Worked constructions");
  demo->require_subcommand(1);
  auto* diag = demo->add_subcommand(
      "diagonal", "Support growth of the diagonal functional over product rings");
  int diag_n = 0;
  std::string diag_ring = "GF(2)", diag_out;
  bool diag_json = false;
  diag->add_option("n", diag_n, "Largest factor count")->required()->check(CLI::PositiveNumber);
  diag->add_option("--ring", diag_ring, "Base ring of the product");
  diag->add_flag("--json", diag_json, "Emit JSON");
  diag->add_option("--out", diag_out, "Write output to a file instead of stdout");

  // ring info
  auto* ring = app.add_subcommand("ring", "Ring utilities");
  ring->require_subcommand(1);
  auto* info = ring->add_subcommand("info", "Order, flags, and idempotents of a ring");
  std::string info_ring, info_out;
  bool info_json = false;
  info->add_option("--ring", info_ring, "Ring spec")->required();
  info->add_flag("--json", info_json, "Emit JSON");
  info->add_option("--out", info_out, "Write output to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*check) return run_check(check_suite, cfg, check_json, check_out);
    if (*dualize) return run_dualize(dz_in, dz_direction, dz_verify, dz_out);
    if (*findual) return run_findual(fd_in, fd_ring, fd_size, fd_budget, fd_json, fd_out);
    if (*diag) return run_demo_diagonal(diag_n, diag_ring, diag_json, diag_out);
    if (*info) return run_ring_info(info_ring, info_json, info_out);
  } catch (const std::exception& e) {
    std::string what = e.what();
    std::cerr << "error: " << what << "\n";
    // Law violations found during --verify are check failures, not usage errors.
    if (what.rfind("law violation", 0) == 0) return kExitLawFailure;
    return kExitUsage;
  }
  return kExitUsage;
}

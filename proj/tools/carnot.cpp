// carnot: command-line front end for the structure-constant toolkit.
//
// Every command takes INPUT, which is either a path to an algebra file or a
// catalog name. Exit codes: 0 success, 1 the checked property fails, 2 usage
// or input errors.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "carnot/catalog.hpp"
#include "carnot/report.hpp"

namespace {

using namespace carnot;

constexpr int kOk = 0;
constexpr int kPropertyFailed = 1;
constexpr int kUsage = 2;

/// Thrown for outcomes that map to exit code 1.
struct PropertyFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Subject load(const std::string& input) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(input, ec)) {
    std::ifstream in(input);
    std::stringstream buf;
    buf << in.rdbuf();
    return subject_from_text(std::filesystem::path(input).stem().string(), buf.str());
  }
  return subject_from_catalog(input);
}

void require_jacobi(const Subject& s) {
  auto defects = jacobi_defect(s.algebra);
  if (!defects.empty())
    throw PropertyFailure(s.name + ": Jacobi identity fails on " + std::to_string(defects.size()) +
                          " triple(s); run 'carnot check' for details");
}

Stratification require_grading(const Subject& s) {
  require_jacobi(s);
  try {
    auto g = resolve_grading(s);
    if (!g.stratification) throw PropertyFailure(s.name + ": algebra is not stratifiable and declares no layers");
    return *g.stratification;
  } catch (const StratificationError& e) {
    throw PropertyFailure(s.name + ": declared layers are not a stratification (" +
                          to_string(e.violation()) + "): " + e.what());
  }
}

void print(const Json& j) { std::cout << render(j); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on nilpotent Lie algebras: stratifications, Tanaka prolongation, rigidity"};
  app.require_subcommand(1);

  std::string input;
  std::size_t k_max = 6;
  std::string expect;
  std::string horizontal;
  std::string expect_equal;
  std::string catalog_name;
  bool emit = false;

  auto* check = app.add_subcommand("check", "Jacobi identity check");
  auto* series = app.add_subcommand("series", "lower central series, nilpotency step and center");
  auto* g0 = app.add_subcommand("g0", "strata-preserving derivations");
  auto* prolong_cmd = app.add_subcommand("prolong", "Tanaka prolongation dimensions");
  auto* rigid = app.add_subcommand("rigid", "infinitesimal ultrarigidity verdict");
  auto* strat = app.add_subcommand("stratifiable", "decide whether the algebra admits a stratification");
  auto* gr = app.add_subcommand("gr", "nilpotentisation along a horizontal subspace");
  auto* catalog_cmd = app.add_subcommand("catalog", "list built-in algebras or show one");
  auto* report_cmd = app.add_subcommand("report", "full machine-readable report");

  for (auto* sub : {check, series, g0, prolong_cmd, rigid, strat, gr, report_cmd})
    sub->add_option("input", input, "algebra file or catalog name")->required();
  for (auto* sub : {prolong_cmd, report_cmd})
    sub->add_option("--max", k_max, "highest prolongation degree to compute")->capture_default_str();
  strat->add_option("--expect", expect, "exit 1 unless the verdict matches")
      ->check(CLI::IsMember({"stratifiable", "not-stratifiable"}));
  gr->add_option("--horizontal", horizontal, "basis index range spanning the horizontal space, e.g. 1..10")
      ->required();
  gr->add_option("--expect-equal", expect_equal, "exit 1 unless gr equals this algebra entry-wise");
  catalog_cmd->add_option("name", catalog_name, "catalog entry");
  catalog_cmd->add_flag("--emit", emit, "print the entry as an algebra file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kOk : kUsage;
  }

  try {
    if (*catalog_cmd) {
      if (catalog_name.empty()) {
        for (const auto& l : catalog::list()) std::cout << l.name << "\t" << l.description << "\n";
        return kOk;
      }
      auto e = catalog::get(catalog_name);
      if (emit) {
        if (auto text = catalog::source_text(e.name))
          std::cout << *text;
        else
          std::cout << emit_algebra(e.algebra, e.declared_layers, e.name + ": " + e.description);
        return kOk;
      }
      Json j;
      j["name"] = e.name;
      j["description"] = e.description;
      j["provenance"] = e.provenance;
      j["dim"] = e.algebra.dim();
      j["brackets"] = e.algebra.table().size();
      j["declared_layers"] = e.declared_layers ? Json(format_ranges(*e.declared_layers)) : Json(nullptr);
      Json ex;
      ex["step"] = e.expected.step;
      ex["layer_dims"] = e.expected.layer_dims;
      ex["g0_dim"] = e.expected.g0_dim ? Json(*e.expected.g0_dim) : Json(nullptr);
      ex["ultrarigid"] = e.expected.ultrarigid ? Json(*e.expected.ultrarigid) : Json(nullptr);
      ex["stratifiable"] = e.expected.stratifiable ? Json(*e.expected.stratifiable) : Json(nullptr);
      j["expected"] = std::move(ex);
      print(j);
      return kOk;
    }

    Subject s = load(input);

    if (*check) {
      Json j = jacobi_json(s.algebra);
      print(j);
      return j["ok"].get<bool>() ? kOk : kPropertyFailed;
    }
    if (*report_cmd) {
      Json j = full_report(s, k_max);
      print(j);
      return j["jacobi"]["ok"].get<bool>() ? kOk : kPropertyFailed;
    }

    require_jacobi(s);
    if (*series) {
      print(series_json(s.algebra));
      return kOk;
    }
    if (*strat) {
      auto verdict = is_stratifiable(s.algebra);
      Json j = stratifiable_json(verdict);
      if (verdict.derived_stratification)
        j["derived_stratification"] = stratification_json(*verdict.derived_stratification, "derived");
      print(j);
      if (expect.empty()) return kOk;
      return verdict.stratifiable == (expect == "stratifiable") ? kOk : kPropertyFailed;
    }
    if (*gr) {
      auto [first, last] = parse_range(horizontal);
      if (first < 1 || last < first || last > s.algebra.dim())
        throw ParseError(ParseErrorKind::Range, 0, "horizontal range outside 1.." + std::to_string(s.algebra.dim()));
      auto result = nilpotentisation(s.algebra, Subspace::coordinate(s.algebra.dim(), first - 1, last));
      LayerRanges ranges;
      std::size_t start = 1;
      for (std::size_t d : result.stratification.layer_dims()) {
        ranges.emplace_back(start, start + d - 1);
        start += d;
      }
      std::cout << emit_algebra(result.algebra, ranges,
                                "nilpotentisation of " + s.name + " along span of basis vectors " +
                                    std::to_string(first) + ".." + std::to_string(last));
      if (expect_equal.empty()) return kOk;
      Subject other = load(expect_equal);
      if (result.algebra == other.algebra) return kOk;
      std::cerr << "carnot: nilpotentisation differs from " << other.name << "\n";
      return kPropertyFailed;
    }

    Stratification grading = require_grading(s);
    if (*g0) {
      print(g0_json(degree_zero_derivations(s.algebra, grading), s.algebra.dim()));
      return kOk;
    }
    if (*prolong_cmd) {
      print(prolongation_json(prolong(s.algebra, grading, k_max), k_max));
      return kOk;
    }
    if (*rigid) {
      auto v = ultrarigidity_check(s.algebra, grading);
      print(rigidity_json(v));
      return v.infinitesimally_ultrarigid ? kOk : kPropertyFailed;
    }
  } catch (const PropertyFailure& e) {
    std::cerr << "carnot: " << e.what() << "\n";
    return kPropertyFailed;
  } catch (const ParseError& e) {
    std::cerr << "carnot: " << input << ": " << e.what() << "\n";
    return kUsage;
  } catch (const UnknownCatalogEntry& e) {
    std::cerr << "carnot: " << e.what() << " (and no such file)\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "carnot: " << e.what() << "\n";
    return kPropertyFailed;
  }
  return kUsage;
}

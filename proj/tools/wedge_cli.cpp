#include "wedge/betti.hpp"
#include "wedge/closure.hpp"
#include "wedge/formulas.hpp"
#include "wedge/graph.hpp"
#include "wedge/ideal.hpp"
#include "wedge/polarize.hpp"
#include "wedge/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <regex>

namespace {

using nlohmann::ordered_json;
using namespace wedge;

std::vector<Exponent> parse_weights(const std::string& text) {
  std::vector<Exponent> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t next = text.find(',', pos);
    const std::string piece = next == std::string::npos ? text.substr(pos) : text.substr(pos, next - pos);
    if (!piece.empty()) out.push_back(std::stoll(piece));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  if (out.empty()) throw CLI::ValidationError("--weights", "expected a comma-separated list");
  return out;
}

WeightedGraph graph_from_family(const std::string& family, const std::vector<Exponent>& weights) {
  if (family == "path") return build_path(weights);
  if (family == "star") return build_star(weights);
  if (family == "cycle") return build_cycle(weights);
  throw CLI::ValidationError("--family", "expected path, star or cycle");
}

/// Text form `(x1^2*x2^2, x2*x3)` (variable count inferred from the largest
/// index unless --vars is given) or a JSON list of exponent vectors.
MonomialIdeal parse_ideal_spec(const std::string& spec, int vars) {
  const std::size_t first = spec.find_first_not_of(" \t");
  if (first != std::string::npos && spec[first] == '[') {
    const ordered_json j = ordered_json::parse(spec);
    std::vector<std::vector<Exponent>> rows = j.get<std::vector<std::vector<Exponent>>>();
    if (rows.empty()) throw CLI::ValidationError("--ideal", "empty exponent list");
    const int n = vars > 0 ? vars : static_cast<int>(rows.front().size());
    const ContextPtr ctx = VariableContext::standard(n);
    std::vector<Monomial> gens;
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != n)
        throw CLI::ValidationError("--ideal", "exponent vectors of unequal length");
      ExponentVec e(n);
      for (int i = 0; i < n; ++i) e(i) = row[static_cast<std::size_t>(i)];
      gens.push_back(Monomial(ctx, std::move(e)));
    }
    return MonomialIdeal::make(ctx, std::move(gens));
  }

  int n = vars;
  if (n <= 0) {
    static const std::regex var_pattern("x(\\d+)");
    for (auto it = std::sregex_iterator(spec.begin(), spec.end(), var_pattern);
         it != std::sregex_iterator(); ++it)
      n = std::max(n, std::stoi((*it)[1].str()));
    if (n <= 0) throw CLI::ValidationError("--ideal", "could not infer the variable count");
  }
  return parse_ideal(VariableContext::standard(n), spec);
}

struct IdealInput {
  std::string ideal_spec;
  std::string family;
  std::string weights_text;
  std::string graph_spec;
  int vars = 0;
  int power = 1;

  void attach(CLI::App* cmd, bool with_power = true) {
    cmd->add_option("--ideal", ideal_spec, "ideal as `(x1^2*x2^2, x2*x3)` or JSON exponent vectors");
    cmd->add_option("--family", family, "graph family: path|star|cycle");
    cmd->add_option("--weights", weights_text, "edge weights, e.g. 2,1,1,1");
    cmd->add_option("--graph", graph_spec, "graph JSON (inline or @file)");
    cmd->add_option("--vars", vars, "variable count for --ideal text form");
    if (with_power) cmd->add_option("--power,-t", power, "power of the ideal (default 1)");
  }

  MonomialIdeal resolve() const {
    MonomialIdeal I = base();
    if (power < 1) throw CLI::ValidationError("--power", "must be >= 1");
    return power == 1 ? I : wedge::power(I, power);
  }

  MonomialIdeal base() const {
    if (!ideal_spec.empty()) return parse_ideal_spec(ideal_spec, vars);
    if (!family.empty()) {
      if (weights_text.empty()) throw CLI::ValidationError("--weights", "required with --family");
      return edge_ideal(graph_from_family(family, parse_weights(weights_text)));
    }
    if (!graph_spec.empty()) {
      std::string text = graph_spec;
      if (!text.empty() && text[0] == '@') {
        std::ifstream in(text.substr(1));
        if (!in) throw CLI::ValidationError("--graph", "cannot read file");
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
      }
      return edge_ideal(graph_from_json(text));
    }
    throw CLI::ValidationError("input", "need one of --ideal, --family/--weights, --graph");
  }
};

void write_json_output(const std::string& path, const std::string& payload) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << payload << '\n';
}

ordered_json table_json(const BettiTable& table, const HomologicalInvariants& inv, bool multigraded) {
  ordered_json j;
  j["field"] = table.field().to_string();
  j["ambient_vars"] = table.ambient_vars();
  j["convention"] = "quotient";
  j["coarse"] = ordered_json::array();
  for (const auto& [ij, c] : table.coarse()) j["coarse"].push_back({ij.first, ij.second, c});
  if (multigraded) {
    j["multigraded"] = ordered_json::array();
    for (const auto& [ia, c] : table.multigraded())
      j["multigraded"].push_back({ia.first, ia.second, c});
  }
  j["invariants"] = {{"reg", inv.reg}, {"pd", inv.pd}, {"depth", inv.depth}};
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"homological invariants of weighted edge ideals"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --field appear after the subcommand too

  std::string field_text = "gf:32003";
  app.add_option("--field", field_text, "coefficient field: gf:<prime> or rational")
      ->capture_default_str();

  // betti / invariants -------------------------------------------------------
  IdealInput betti_in;
  bool multigraded = false;
  std::string betti_json;
  auto* betti_cmd = app.add_subcommand("betti", "print the Betti table of S/I");
  betti_in.attach(betti_cmd);
  betti_cmd->add_flag("--multigraded", multigraded, "include multigraded entries in JSON output");
  betti_cmd->add_option("--json", betti_json, "write the table as JSON to this file");

  IdealInput inv_in;
  std::string inv_json;
  auto* inv_cmd = app.add_subcommand("invariants", "print reg, pd and depth of S/I");
  inv_in.attach(inv_cmd);
  inv_cmd->add_option("--json", inv_json, "write the invariants as JSON to this file");

  // predict ------------------------------------------------------------------
  std::string predict_family = "path";
  std::string predict_weights;
  int predict_power = 1;
  std::string predict_quantity = "all";
  auto* predict_cmd = app.add_subcommand("predict", "closed-form predictions for a family");
  predict_cmd->add_option("--family", predict_family, "path or star")->capture_default_str();
  predict_cmd->add_option("--weights", predict_weights, "edge weights")->required();
  predict_cmd->add_option("--power,-t", predict_power, "power of the ideal")->capture_default_str();
  predict_cmd->add_option("--quantity", predict_quantity, "all, reg or depth")->capture_default_str();

  // closure ------------------------------------------------------------------
  IdealInput closure_in;
  bool want_witness = false;
  auto* closure_cmd = app.add_subcommand("closure", "integral-closure test via the Newton polyhedron");
  closure_in.attach(closure_cmd);
  closure_cmd->add_flag("--witness", want_witness, "print a witness monomial when not closed");

  // polarize -----------------------------------------------------------------
  IdealInput polarize_in;
  auto* polarize_cmd = app.add_subcommand("polarize", "print the polarization and its variable map");
  polarize_in.attach(polarize_cmd);

  // verify -------------------------------------------------------------------
  std::string suite;
  VerifyConfig vcfg;
  std::string verify_json;
  bool list_cases = false;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("suite", suite, "star|path|colon|splitting|examples|closure|oracle|polar|exact|all")
      ->required();
  verify_cmd->add_option("--max-n", vcfg.max_n, "cap on the vertex count");
  verify_cmd->add_option("--max-weight", vcfg.max_weight, "cap on edge weights");
  verify_cmd->add_option("--max-power", vcfg.max_power, "cap on ideal powers");
  verify_cmd->add_option("--lattice-cap", vcfg.lattice_cap, "lcm lattice size cap");
  verify_cmd->add_option("--threads", vcfg.threads, "worker threads (0 = hardware)");
  verify_cmd->add_option("--cache-dir", vcfg.cache_dir, "directory for the on-disk result cache");
  verify_cmd->add_option("--json", verify_json, "write the report JSON to this file");
  verify_cmd->add_flag("--cases", list_cases, "print every case, not only mismatches");

  CLI11_PARSE(app, argc, argv);

  try {
    const FieldSpec field = FieldSpec::parse(field_text);
    EngineOptions eopts;
    eopts.field = field;

    if (*betti_cmd) {
      const MonomialIdeal I = betti_in.resolve();
      const BettiTable table = betti_upper_koszul(I, eopts);
      const HomologicalInvariants inv = invariants(table);
      for (const auto& [ij, c] : table.coarse())
        std::cout << "(" << ij.first << ", " << ij.second << "): " << c << "\n";
      std::cout << "reg=" << inv.reg << ", pd=" << inv.pd << ", depth=" << inv.depth << "\n";
      if (!betti_json.empty())
        write_json_output(betti_json, table_json(table, inv, multigraded).dump(2));
      return 0;
    }

    if (*inv_cmd) {
      const MonomialIdeal I = inv_in.resolve();
      const HomologicalInvariants inv = invariants(betti_upper_koszul(I, eopts));
      std::cout << "reg=" << inv.reg << ", pd=" << inv.pd << ", depth=" << inv.depth << "\n";
      if (!inv_json.empty()) {
        const ordered_json j = {{"reg", inv.reg}, {"pd", inv.pd}, {"depth", inv.depth}};
        write_json_output(inv_json, j.dump(2));
      }
      return 0;
    }

    if (*predict_cmd) {
      const std::vector<Exponent> weights = parse_weights(predict_weights);
      PredictionPair pair;
      if (predict_family == "path")
        pair = predict_path(weights, predict_power);
      else if (predict_family == "star")
        pair = star_invariants(weights, predict_power);
      else
        throw CLI::ValidationError("--family", "predictors exist for path and star");

      const auto prediction_json = [](const Prediction& p) {
        ordered_json j;
        j["quantity"] = p.quantity == Quantity::reg_quotient ? "reg" : "depth";
        j["applicable"] = p.applicable;
        if (p.applicable) {
          j["kind"] = p.kind == PredictionKind::equality      ? "equality"
                      : p.kind == PredictionKind::lower_bound ? "lower_bound"
                                                              : "upper_bound";
          j["value"] = p.value;
        } else {
          j["reason"] = p.reason;
        }
        j["source"] = p.source;
        return j;
      };
      ordered_json out = ordered_json::array();
      if (predict_quantity == "all" || predict_quantity == "reg")
        out.push_back(prediction_json(pair.reg));
      if (predict_quantity == "all" || predict_quantity == "depth")
        out.push_back(prediction_json(pair.depth));
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (*closure_cmd) {
      const MonomialIdeal I = closure_in.resolve();
      const auto witness = closure_witness(I);
      if (!witness) {
        std::cout << "integrally closed\n";
      } else {
        std::cout << "not integrally closed\n";
        if (want_witness) std::cout << "witness: " << to_string(*witness) << "\n";
      }
      return 0;
    }

    if (*polarize_cmd) {
      const MonomialIdeal I = polarize_in.resolve();
      const auto [polarized, map] = polarize(I);
      std::cout << "polarization: " << to_string(polarized) << "\n";
      for (int j = 0; j < map.source_context()->count(); ++j) {
        std::cout << map.source_context()->name(j) << " -> ";
        for (int k = 0; k < map.width(j); ++k) {
          if (k) std::cout << ", ";
          std::cout << map.target_context()->name(map.target_index(j, k));
        }
        if (map.padded(j)) std::cout << " (padding)";
        std::cout << "\n";
      }
      return 0;
    }

    if (*verify_cmd) {
      vcfg.field = field;
      EngineCache cache(engine_options(vcfg), vcfg.cache_dir);
      std::vector<std::string> names =
          suite == "all" ? suite_names() : std::vector<std::string>{suite};
      bool all_ok = true;
      ordered_json all_reports = ordered_json::array();
      for (const auto& name : names) {
        const Report report = run_suite(name, vcfg, cache);
        all_ok = all_ok && report.ok();
        for (const auto& c : report.cases) {
          if (!list_cases && c.verdict != Verdict::mismatch) continue;
          std::cout << "[" << to_string(c.verdict) << "] " << c.params << " | " << c.quantity
                    << " | predicted " << c.predicted << " | computed " << c.computed << "\n";
        }
        std::cout << report.summary_line() << "\n";
        if (!verify_json.empty()) all_reports.push_back(ordered_json::parse(report.to_json(false)));
      }
      if (!verify_json.empty())
        write_json_output(verify_json,
                          names.size() == 1 ? all_reports[0].dump(2) : all_reports.dump(2));
      return all_ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

// drtcrit: build doubly-regular tournaments from difference families, compute
// their critical groups exactly, and check them against the closed forms.
//
// Exit codes: 0 success (or verification pass), 1 verification mismatch,
// 2 invalid input.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "drt/critical_group.hpp"
#include "drt/finite_field.hpp"
#include "drt/group_structure.hpp"
#include "drt/hadamard.hpp"
#include "drt/sdf.hpp"
#include "drt/snf.hpp"
#include "drt/theory.hpp"
#include "drt/tournament.hpp"

using nlohmann::ordered_json;

namespace {

struct JobContext {
  std::string format = "table";
  std::string modulus_config;
  std::string family;
  std::int64_t q = 0;
  std::int64_t lambda = 0;
  std::string group_spec;
  std::string sdf_spec = "auto";
  std::int64_t budget = 0; // 0: use DRTCRIT_SEARCH_BUDGET or the library default

  drt::ModulusTable moduli() const {
    if (modulus_config.empty()) return drt::ModulusTable::builtin();
    return drt::ModulusTable::with_overrides_from_file(modulus_config);
  }
};

void add_format(CLI::App* cmd, JobContext& ctx) {
  cmd->add_option("--format", ctx.format, "Output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  cmd->add_option("--modulus-config", ctx.modulus_config,
                  "File with extra field modulus polynomials (p t c0..ct per line)");
}

void add_family_options(CLI::App* cmd, JobContext& ctx, bool with_family = true) {
  if (with_family)
    cmd->add_option("--family", ctx.family, "Construction family")
        ->check(CLI::IsMember({"paley", "sz", "w", "cayley", "dy"}))
        ->required();
  cmd->add_option("--q", ctx.q, "Field size (paley, dy)");
  cmd->add_option("--lambda", ctx.lambda, "Tournament parameter (predictions)");
  cmd->add_option("--group", ctx.group_spec, "Group spec: zN (cyclic) or gfQ (field additive)");
  cmd->add_option("--sdf", ctx.sdf_spec,
                  "Difference family: 'auto' (search, first result) or file:PATH")
      ->capture_default_str();
  cmd->add_option("--budget", ctx.budget,
                  "Search candidate budget (also via DRTCRIT_SEARCH_BUDGET)");
}

std::int64_t effective_budget(const JobContext& ctx) {
  if (ctx.budget > 0) return ctx.budget;
  if (const char* env = std::getenv("DRTCRIT_SEARCH_BUDGET")) {
    const std::int64_t v = std::strtoll(env, nullptr, 10);
    if (v > 0) return v;
  }
  return drt::SdfSearchOptions{}.candidate_budget;
}

drt::AbelianGroup parse_group(const std::string& spec, const drt::ModulusTable& mods) {
  if (spec.size() >= 2 && spec[0] == 'z') {
    const std::int64_t n = std::strtoll(spec.c_str() + 1, nullptr, 10);
    if (n >= 2) return drt::make_cyclic(n);
  } else if (spec.size() >= 3 && spec.rfind("gf", 0) == 0) {
    const std::int64_t q = std::strtoll(spec.c_str() + 2, nullptr, 10);
    if (q >= 2) {
      const auto f = drt::factorize(q);
      if (f.size() == 1) {
        const auto [p, t] = *f.begin();
        return mods.make_field(p.convert_to<std::int64_t>(), t)->additive_group();
      }
    }
  }
  throw std::invalid_argument("unrecognized group spec '" + spec + "' (use zN or gfQ)");
}

std::pair<std::int64_t, int> prime_power(std::int64_t q, const std::string& what) {
  if (q >= 2) {
    const auto f = drt::factorize(q);
    if (f.size() == 1) return {f.begin()->first.convert_to<std::int64_t>(), f.begin()->second};
  }
  throw std::invalid_argument(what + ": --q must be a prime power, got " + std::to_string(q));
}

drt::SkewDifferenceFamily resolve_sdf(const JobContext& ctx, const drt::AbelianGroup& G,
                                      int num_blocks) {
  if (ctx.sdf_spec == "auto") {
    drt::SdfSearchOptions opts;
    opts.candidate_budget = effective_budget(ctx);
    opts.max_results = 1;
    auto found = drt::search_sdf(G, num_blocks, opts);
    if (found.empty())
      throw std::invalid_argument("no skew difference family with " +
                                  std::to_string(num_blocks) + " blocks over " + G.describe());
    return found.front();
  }
  if (ctx.sdf_spec.rfind("file:", 0) == 0) {
    const std::string path = ctx.sdf_spec.substr(5);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read difference family file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    auto fam = drt::sdf_from_json_string(buf.str());
    if (!(fam.group == G))
      throw std::invalid_argument("difference family group " + fam.group.describe() +
                                  " does not match --group " + G.describe());
    if (fam.blocks.size() != static_cast<std::size_t>(num_blocks))
      throw std::invalid_argument("family " + ctx.family + " needs " +
                                  std::to_string(num_blocks) + " blocks, file has " +
                                  std::to_string(fam.blocks.size()));
    return fam;
  }
  throw std::invalid_argument("--sdf must be 'auto' or file:PATH");
}

drt::Tournament build_tournament(const JobContext& ctx) {
  const auto mods = ctx.moduli();
  if (ctx.family == "paley") {
    const auto [p, t] = prime_power(ctx.q, "paley");
    if (ctx.q % 4 != 3) throw std::invalid_argument("paley: need q = 3 (mod 4)");
    const auto F = mods.make_field(p, t);
    return drt::build_cayley_drt(F->additive_group(), drt::squares(*F));
  }
  if (ctx.family == "dy") {
    const auto [p, t] = prime_power(ctx.q, "dy");
    if (p != 3 || t % 2 == 0)
      throw std::invalid_argument("dy: --q must be 3^n with n odd");
    auto fam = drt::ding_yuan_set(t);
    return drt::build_cayley_drt(fam.group, fam.blocks[0]);
  }
  if (ctx.group_spec.empty())
    throw std::invalid_argument(ctx.family + ": --group is required");
  const auto G = parse_group(ctx.group_spec, mods);
  if (ctx.family == "cayley") {
    const auto fam = resolve_sdf(ctx, G, 1);
    return drt::build_cayley_drt(G, fam.blocks[0]);
  }
  if (ctx.family == "sz") {
    const auto fam = resolve_sdf(ctx, G, 2);
    return drt::build_sz(G, fam.blocks[0], fam.blocks[1]);
  }
  if (ctx.family == "w") {
    const auto fam = resolve_sdf(ctx, G, 4);
    return drt::build_w(G, fam.blocks[0], fam.blocks[1], fam.blocks[2], fam.blocks[3]);
  }
  throw std::invalid_argument("unknown family: " + ctx.family);
}

drt::Prediction predict_for(const JobContext& ctx) {
  if (ctx.family == "paley") {
    const auto [p, t] = prime_power(ctx.q, "paley");
    return drt::predict_paley(p, t);
  }
  std::int64_t lambda = ctx.lambda;
  if (lambda == 0 && !ctx.group_spec.empty()) {
    // Both families use a group of order 2*lambda + 1.
    const auto G = parse_group(ctx.group_spec, ctx.moduli());
    lambda = (G.order() - 1) / 2;
  }
  if (lambda < 1)
    throw std::invalid_argument(ctx.family + ": give --lambda or --group");
  if (ctx.family == "sz") return drt::predict_sz(lambda);
  if (ctx.family == "w") return drt::predict_w(lambda);
  throw std::invalid_argument("no closed-form prediction for family " + ctx.family);
}

ordered_json prediction_json(const drt::Prediction& pred) {
  ordered_json j;
  j["family"] = pred.family;
  j["lambda"] = pred.lambda;
  if (pred.family == "paley") {
    j["p"] = pred.p;
    j["t"] = pred.t;
  }
  j["structure"] = ordered_json::parse(pred.structure.to_json());
  ordered_json ranks = ordered_json::object();
  for (const auto& [p, r] : pred.p_ranks) ranks[p.str()] = r;
  j["p_ranks"] = ranks;
  return j;
}

std::string p_ranks_line(const std::map<drt::BigInt, std::size_t>& ranks) {
  std::string out;
  for (const auto& [p, r] : ranks) {
    if (!out.empty()) out += ", ";
    out += p.str() + " -> " + std::to_string(r);
  }
  return out;
}

void print_structure(const JobContext& ctx, const drt::GroupStructure& g) {
  if (ctx.format == "json") {
    std::cout << g.to_json() << "\n";
    return;
  }
  std::cout << "group: " << g.describe() << "\n";
  std::cout << "order: " << g.order().str() << "\n";
  std::string inv;
  for (const auto& d : g.invariant_factors()) {
    if (!inv.empty()) inv += " ";
    inv += d.str();
  }
  std::cout << "invariant factors: " << inv << "\n";
}

int cmd_gen(const JobContext& ctx) {
  const auto t = build_tournament(ctx);
  if (ctx.format == "json") {
    std::cout << drt::to_json_string(t) << "\n";
    return 0;
  }
  const auto params = t.drt_params();
  std::cout << "vertices: " << t.size() << "\n";
  if (params)
    std::cout << "parameters: (" << params->n << ", " << params->k << ", " << params->lambda
              << ")\n";
  std::cout << "layout: " << t.layout().kind;
  if (t.layout().group) std::cout << " over " << t.layout().group->describe();
  std::cout << "\n";
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::string row;
    for (std::size_t j = 0; j < t.size(); ++j) row += t.arc(i, j) ? '1' : '0';
    std::cout << row << "\n";
  }
  return 0;
}

int cmd_critgrp(const JobContext& ctx) {
  const auto t = build_tournament(ctx);
  print_structure(ctx, drt::drt_critical_group(t));
  return 0;
}

int cmd_predict(const JobContext& ctx) {
  const auto pred = predict_for(ctx);
  if (ctx.format == "json") {
    std::cout << prediction_json(pred).dump(2) << "\n";
    return 0;
  }
  std::cout << "family: " << pred.family << "\n";
  std::cout << "lambda: " << pred.lambda << "\n";
  std::cout << "structure: " << pred.structure.describe() << "\n";
  std::cout << "p-ranks: " << p_ranks_line(pred.p_ranks) << "\n";
  return 0;
}

int cmd_verify(const JobContext& ctx) {
  JobContext pred_ctx = ctx;
  const auto t = build_tournament(ctx);
  if (pred_ctx.family != "paley" && pred_ctx.lambda == 0 && t.drt_params())
    pred_ctx.lambda = ctx.family == "sz" ? t.drt_params()->lambda
                                         : (t.drt_params()->n - 7) / 8;
  const auto pred = predict_for(pred_ctx);
  const auto computed = drt::drt_critical_group(t);

  bool ranks_ok = true;
  std::string rank_report;
  const auto Q = t.laplacian();
  for (const auto& [p, r] : pred.p_ranks) {
    const std::size_t got = drt::p_rank(Q, p.convert_to<std::int64_t>());
    if (got != r) {
      ranks_ok = false;
      rank_report += "p-rank at " + p.str() + ": computed " + std::to_string(got) +
                     ", predicted " + std::to_string(r) + "\n";
    }
  }
  const bool match = computed == pred.structure && ranks_ok;

  if (ctx.format == "json") {
    ordered_json j;
    j["match"] = match;
    j["computed"] = ordered_json::parse(computed.to_json());
    j["predicted"] = ordered_json::parse(pred.structure.to_json());
    if (!match) j["diff"] = drt::structure_diff(computed, pred.structure) + rank_report;
    std::cout << j.dump(2) << "\n";
    return match ? 0 : 1;
  }
  if (match) {
    std::cout << "computed == predicted " << computed.describe() << "\n";
    return 0;
  }
  std::cout << "computed != predicted\n";
  std::cout << "computed:  " << computed.to_json() << "\n";
  std::cout << "predicted: " << pred.structure.to_json() << "\n";
  const std::string diff = drt::structure_diff(computed, pred.structure);
  if (!diff.empty()) std::cout << diff << "\n";
  if (!rank_report.empty()) std::cout << rank_report;
  return 1;
}

drt::GroupStructure critical_group_of_spec(const std::string& spec, const JobContext& base) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("spec '" + spec + "' must look like family:parameter");
  JobContext ctx = base;
  ctx.family = spec.substr(0, colon);
  const std::string param = spec.substr(colon + 1);
  if (ctx.family == "paley" || ctx.family == "dy")
    ctx.q = std::strtoll(param.c_str(), nullptr, 10);
  else
    ctx.group_spec = param;
  return drt::drt_critical_group(build_tournament(ctx));
}

int cmd_compare(const JobContext& ctx, const std::string& a, const std::string& b) {
  const auto ga = critical_group_of_spec(a, ctx);
  const auto gb = critical_group_of_spec(b, ctx);
  const bool same = ga == gb;
  const std::string verdict = same ? "critical groups identical" : "critical groups differ";
  if (ctx.format == "json") {
    ordered_json j;
    j["a"] = ordered_json::parse(ga.to_json());
    j["b"] = ordered_json::parse(gb.to_json());
    j["verdict"] = verdict;
    if (!same) j["diff"] = drt::structure_diff(ga, gb);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "a: " << ga.describe() << "\n";
  std::cout << "b: " << gb.describe() << "\n";
  std::cout << verdict << "\n";
  if (!same) std::cout << drt::structure_diff(ga, gb) << "\n";
  return 0;
}

int cmd_search_sdf(const JobContext& ctx, int num_blocks, std::int64_t max_results) {
  if (ctx.group_spec.empty()) throw std::invalid_argument("search-sdf: --group is required");
  const auto G = parse_group(ctx.group_spec, ctx.moduli());
  drt::SdfSearchOptions opts;
  opts.candidate_budget = effective_budget(ctx);
  opts.max_results = max_results;
  const auto found = drt::search_sdf(G, num_blocks, opts);
  if (ctx.format == "json") {
    ordered_json j = ordered_json::array();
    for (const auto& fam : found) j.push_back(ordered_json::parse(drt::to_json_string(fam)));
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "families found: " << found.size() << "\n";
  for (const auto& fam : found) {
    std::string line;
    for (const auto& block : fam.blocks) {
      line += " {";
      for (std::size_t i = 0; i < block.size(); ++i)
        line += (i ? "," : "") + drt::element_label(G, block[i]);
      line += "}";
    }
    std::cout << line.substr(1) << "\n";
  }
  return 0;
}

int cmd_hadamard(const JobContext& ctx) {
  const auto t = build_tournament(ctx);
  const auto h = drt::drt_to_hadamard(t);
  const auto check = drt::check_hadamard_snf(h);
  if (ctx.format == "json") {
    ordered_json j;
    j["order"] = h.order();
    ordered_json rows = ordered_json::array();
    std::istringstream text(h.to_text());
    for (std::string line; std::getline(text, line);) rows.push_back(line);
    j["rows"] = rows;
    j["snf_universal"] = check.ok;
    if (!check.ok) j["report"] = check.report;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << h.to_text();
    std::cout << "universal smith form: " << (check.ok ? "confirmed" : "FAILED") << "\n";
    if (!check.ok) std::cout << check.report << "\n";
  }
  return check.ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"doubly-regular tournaments, difference families, and critical groups"};
  app.require_subcommand(1);

  JobContext ctx;
  std::string spec_a, spec_b;
  int num_blocks = 2;
  std::int64_t max_results = 0;

  auto* gen = app.add_subcommand("gen", "Construct a tournament and print it");
  add_format(gen, ctx);
  add_family_options(gen, ctx);

  auto* critgrp = app.add_subcommand("critgrp", "Critical group of a constructed tournament");
  add_format(critgrp, ctx);
  add_family_options(critgrp, ctx);

  auto* predict = app.add_subcommand("predict", "Closed-form critical group prediction");
  add_format(predict, ctx);
  add_family_options(predict, ctx);

  auto* verify = app.add_subcommand("verify", "Compare computed against predicted");
  add_format(verify, ctx);
  add_family_options(verify, ctx);

  auto* compare = app.add_subcommand("compare", "Compare the critical groups of two specs");
  add_format(compare, ctx);
  compare->add_option("--a", spec_a, "First spec, family:parameter (e.g. paley:243, sz:z13)")
      ->required();
  compare->add_option("--b", spec_b, "Second spec")->required();
  compare->add_option("--budget", ctx.budget, "Search candidate budget");

  auto* search = app.add_subcommand("search-sdf", "Enumerate skew difference families");
  add_format(search, ctx);
  search->add_option("--group", ctx.group_spec, "Group spec: zN or gfQ")->required();
  search->add_option("--blocks", num_blocks, "Number of blocks")->capture_default_str();
  search->add_option("--max-results", max_results, "Stop after this many (0 = all)")
      ->capture_default_str();
  search->add_option("--budget", ctx.budget, "Search candidate budget");

  auto* hadamard = app.add_subcommand("hadamard", "Skew Hadamard matrix of a tournament");
  add_format(hadamard, ctx);
  add_family_options(hadamard, ctx);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (gen->parsed()) return cmd_gen(ctx);
    if (critgrp->parsed()) return cmd_critgrp(ctx);
    if (predict->parsed()) return cmd_predict(ctx);
    if (verify->parsed()) return cmd_verify(ctx);
    if (compare->parsed()) return cmd_compare(ctx, spec_a, spec_b);
    if (search->parsed()) return cmd_search_sdf(ctx, num_blocks, max_results);
    if (hadamard->parsed()) return cmd_hadamard(ctx);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>

#include "mglab/matrix_io.hpp"
#include "mglab/presets.hpp"

namespace {

using mglab::Json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct GlobalOpts {
  std::string out;
  std::string config_path;
  bool csv = false;
  bool timings = false;
  std::uint64_t seed = 0;
  std::size_t cap_vertices = 1'000'000;
  std::size_t cap_words = 1'000'000;
};

mglab::ReportOptions report_options(const GlobalOpts& g) {
  mglab::ReportOptions o;
  o.seed = g.seed;
  o.timings = g.timings;
  o.caps.max_vertices = g.cap_vertices;
  o.caps.max_words = g.cap_words;
  return o;
}

void emit(const GlobalOpts& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw mglab::Error("cannot open output file: " + g.out);
  f << text;
}

void emit_json(const GlobalOpts& g, const Json& j) { emit(g, j.dump(2) + "\n"); }

// config file mirrors long flags: {"m": 7, "cap": 10} becomes --m 7 --cap 10
std::vector<std::string> expand_config(int argc, char** argv) {
  std::vector<std::string> args;
  std::string config_path;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--config" && i + 1 < argc) {
      config_path = argv[i + 1];
      ++i;
      continue;
    }
    args.push_back(a);
  }
  if (config_path.empty()) return args;

  std::ifstream in(config_path);
  if (!in) throw mglab::InvalidSpecError("cannot open config file: " + config_path);
  Json j = Json::parse(in);
  std::vector<std::string> flags;
  for (auto it = j.begin(); it != j.end(); ++it) {
    flags.push_back("--" + it.key());
    if (it.value().is_boolean()) {
      if (!it.value().get<bool>()) flags.pop_back();
      continue;
    }
    flags.push_back(it.value().is_string() ? it.value().get<std::string>()
                                           : it.value().dump());
  }

  // config flags go right after the subcommand token so subcommand-local
  // options resolve; explicit flags still win through the take-last policy
  static const char* kSubcommands[] = {
      "ball",           "distance",         "converge",    "transfer",
      "df-exhaustive",  "crossed-validate", "crossed-decompose",
      "slnp-orders",    "slnp-vanish",      "presentations"};
  std::size_t insert_at = args.size();
  for (std::size_t i = 0; i < args.size(); ++i)
    for (const char* name : kSubcommands)
      if (args[i] == name) {
        insert_at = i + 1;
        goto found;
      }
found:
  std::vector<std::string> merged(args.begin(), args.begin() + insert_at);
  merged.insert(merged.end(), flags.begin(), flags.end());
  merged.insert(merged.end(), args.begin() + insert_at, args.end());
  return merged;
}

Json flags_json(const std::vector<std::pair<std::string, Json>>& kv) {
  Json j = Json::object();
  for (const auto& [k, v] : kv) j[k] = v;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"marked-group laboratory: balls, distances, group rings, crossed "
               "products, congruence chains and SL_n(Z[1/p]) order experiments"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  GlobalOpts g;
  bool json_flag = false;
  app.add_option("--out", g.out, "write the report to this path (default: stdout)");
  app.add_flag("--json", json_flag, "emit JSON (the default)");
  app.add_flag("--csv", g.csv, "emit CSV where the subcommand supports it");
  app.add_flag("--timings", g.timings,
               "embed wall-clock timings (reports stop being byte-reproducible)");
  app.add_option("--seed", g.seed, "seed for sampled checks; recorded in the report");
  app.add_option("--cap-vertices", g.cap_vertices, "ball vertex cap");
  app.add_option("--cap-words", g.cap_words, "word enumeration cap");
  app.add_option("--config", g.config_path, "JSON config file mirroring the flags");

  // ---- ball
  auto* ball_cmd = app.add_subcommand("ball", "Cayley ball of a marked group");
  std::string ball_family = "z";
  std::int64_t ball_m = 0;
  int ball_rank = 2, ball_n = 3, ball_radius = 2;
  std::int64_t ball_p = 3;
  std::string ball_file, ball_adj;
  ball_cmd->add_option("--family", ball_family, "z|zmod|free|sanov|sanovmod|slnp|matrix-file");
  ball_cmd->add_option("--m", ball_m, "modulus for zmod/sanovmod");
  ball_cmd->add_option("--rank", ball_rank, "rank for free");
  ball_cmd->add_option("--n", ball_n, "dimension for slnp");
  ball_cmd->add_option("--p", ball_p, "prime for slnp");
  ball_cmd->add_option("--file", ball_file, "matrix file for matrix-file");
  ball_cmd->add_option("--radius", ball_radius, "ball radius");
  ball_cmd->add_option("--adj", ball_adj, "also write the adjacency list to this path");

  // ---- distance
  auto* dist_cmd = app.add_subcommand("distance", "valuation and ultrametric distance");
  std::string dist_family = "z-vs-zmod";
  std::string dist_a, dist_b;
  std::int64_t dist_m = 7, dist_m2 = 5;
  int dist_cap = 10;
  dist_cmd->add_option("--family", dist_family, "z-vs-zmod|zmod-vs-zmod|sanov-vs-sanovmod");
  dist_cmd->add_option("--a", dist_a, "explicit family spec for the first point");
  dist_cmd->add_option("--b", dist_b, "explicit family spec for the second point");
  dist_cmd->add_option("--m", dist_m, "modulus parameter");
  dist_cmd->add_option("--m2", dist_m2, "second modulus (zmod-vs-zmod)");
  dist_cmd->add_option("--cap", dist_cap, "valuation cap");

  // ---- converge
  auto* conv_cmd = app.add_subcommand("converge", "convergence radii along a chain");
  std::string conv_family = "z";
  std::int64_t conv_m = 2;
  int conv_len = 4, conv_rmax = 6, conv_valcap = 0;
  std::string conv_chain_file;
  conv_cmd->add_option("--family", conv_family, "z|sanov");
  conv_cmd->add_option("--m", conv_m, "chain modulus");
  conv_cmd->add_option("--length", conv_len, "number of stages beyond the trivial one");
  conv_cmd->add_option("--rmax", conv_rmax, "largest radius tested");
  conv_cmd->add_option("--valuation-cap", conv_valcap,
                       "also report per-stage valuations up to this cap (0 = skip)");
  conv_cmd->add_option("--chain", conv_chain_file, "chain spec JSON file");

  // ---- transfer
  auto* tr_cmd = app.add_subcommand("transfer", "limit transfer certificates");
  std::string tr_pair, tr_x, tr_y, tr_ring = "z", tr_family = "z", tr_chain_file;
  std::string tr_base = "zmod:5";
  std::int64_t tr_m = 3;
  int tr_len = 4, tr_random = 0;
  tr_cmd->add_option("--pair", tr_pair, "built-in pair: t|c5");
  tr_cmd->add_option("--random", tr_random, "run this many random unit pairs over finite bases");
  tr_cmd->add_option("--x", tr_x, "element literal over the chain base");
  tr_cmd->add_option("--y", tr_y, "element literal over the chain base");
  tr_cmd->add_option("--ring", tr_ring, "coefficient ring for --x/--y");
  tr_cmd->add_option("--family", tr_family, "chain family z|sanov|self");
  tr_cmd->add_option("--base", tr_base, "base family spec for --family self");
  tr_cmd->add_option("--m", tr_m, "chain modulus");
  tr_cmd->add_option("--length", tr_len, "chain length");
  tr_cmd->add_option("--chain", tr_chain_file, "chain spec JSON file");

  // ---- df-exhaustive
  auto* df_cmd = app.add_subcommand("df-exhaustive", "exhaustive direct finiteness scan");
  std::string df_ring = "z2", df_group = "c2", df_system;
  df_cmd->add_option("--ring", df_ring, "coefficient ring spec");
  df_cmd->add_option("--group", df_group, "finite group spec");
  df_cmd->add_option("--system", df_system, "scan a crossed-product preset instead");

  // ---- crossed-validate
  auto* cv_cmd = app.add_subcommand("crossed-validate", "cocycle validation");
  std::string cv_system = "trivial:z2:c2", cv_file;
  cv_cmd->add_option("--system", cv_system, "system preset spec");
  cv_cmd->add_option("--file", cv_file, "system description JSON file");

  // ---- crossed-decompose
  auto* cd_cmd = app.add_subcommand("crossed-decompose", "decompose R*G over a normal subgroup");
  std::string cd_preset = "z2s3-c3";
  cd_cmd->add_option("--preset", cd_preset, "decomposition preset");

  // ---- slnp-orders
  auto* so_cmd = app.add_subcommand("slnp-orders", "congruence order sweep");
  int so_n = 3;
  std::int64_t so_p = 3, so_qmax = 50;
  std::string so_dump;
  so_cmd->add_option("--n", so_n, "matrix dimension (>= 2)");
  so_cmd->add_option("--p", so_p, "odd prime p");
  so_cmd->add_option("--q-max", so_qmax, "largest modulus tested (inclusive)");
  so_cmd->add_option("--dump-generators", so_dump, "write a, b, x in matrix text format");

  // ---- slnp-vanish
  auto* sv_cmd = app.add_subcommand("slnp-vanish", "centralizer-twisted commutator vanishing");
  int sv_n = 3, sv_samples = 10;
  std::int64_t sv_p = 3, sv_qmax = 30;
  sv_cmd->add_option("--n", sv_n, "matrix dimension");
  sv_cmd->add_option("--p", sv_p, "odd prime p");
  sv_cmd->add_option("--q-max", sv_qmax, "largest prime modulus tested");
  sv_cmd->add_option("--samples", sv_samples, "centralizer samples per prime");

  // ---- presentations
  auto* pr_cmd = app.add_subcommand("presentations", "amalgam/HNN deficiency bookkeeping");
  std::string pr_file;
  int pr_gens = 2, pr_rels = 0, pr_rmin = 2, pr_rmax = 6;
  pr_cmd->add_option("--file", pr_file, "presentation file");
  pr_cmd->add_option("--gens", pr_gens, "toy presentation generator count");
  pr_cmd->add_option("--relators", pr_rels, "toy presentation relator count");
  pr_cmd->add_option("--r-min", pr_rmin, "smallest amalgam rank");
  pr_cmd->add_option("--r-max", pr_rmax, "largest amalgam rank");

  // let report/cap/seed flags appear after the subcommand as well
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  std::vector<std::string> args;
  try {
    args = expand_config(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  try {
    std::vector<const char*> cargs = {argv[0]};
    for (const auto& a : args) cargs.push_back(a.c_str());
    app.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      app.exit(e);
      return kExitOk;
    }
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  auto opts = report_options(g);
  auto started = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
        .count();
  };

  try {
    int exit_code = kExitOk;
    if (*ball_cmd) {
      std::string family = ball_family;
      if (family == "zmod" || family == "sanovmod")
        family += ":" + std::to_string(ball_m);
      else if (family == "free")
        family += ":" + std::to_string(ball_rank);
      else if (family == "slnp")
        family += ":" + std::to_string(ball_n) + ":" + std::to_string(ball_p);
      else if (family == "matrix-file")
        family += ":" + ball_file;
      Json config = flags_json({{"family", family}, {"radius", ball_radius}});
      Json report = mglab::report_envelope("ball", config, opts);
      report["results"] = mglab::ball_report(family, ball_radius, opts);
      if (!ball_adj.empty()) {
        std::ofstream adj(ball_adj, std::ios::binary);
        if (!adj) throw mglab::Error("cannot open adjacency output: " + ball_adj);
        adj << mglab::ball_adjacency(family, ball_radius, opts);
        report["results"]["adjacency_file"] = ball_adj;
      }
      mglab::attach_timing(report, opts, elapsed());
      emit_json(g, report);
    } else if (*dist_cmd) {
      std::string a = dist_a, b = dist_b;
      if (a.empty() || b.empty()) {
        if (dist_family == "z-vs-zmod") {
          a = "z";
          b = "zmod:" + std::to_string(dist_m);
        } else if (dist_family == "zmod-vs-zmod") {
          a = "zmod:" + std::to_string(dist_m);
          b = "zmod:" + std::to_string(dist_m2);
        } else if (dist_family == "sanov-vs-sanovmod") {
          a = "sanov";
          b = "sanovmod:" + std::to_string(dist_m);
        } else {
          throw mglab::InvalidSpecError("unknown distance family: " + dist_family);
        }
      }
      Json config = flags_json({{"a", a}, {"b", b}, {"cap", dist_cap}});
      Json report = mglab::report_envelope("distance", config, opts);
      report["results"] = mglab::distance_report(a, b, dist_cap, opts);
      mglab::attach_timing(report, opts, elapsed());
      emit_json(g, report);
    } else if (*conv_cmd) {
      mglab::QuotientChain chain;
      if (!conv_chain_file.empty()) {
        std::ifstream in(conv_chain_file);
        if (!in) throw mglab::InvalidSpecError("cannot open chain file: " + conv_chain_file);
        chain = mglab::load_chain_spec(Json::parse(in));
      } else if (conv_family == "z") {
        chain = mglab::z_chain(conv_m, conv_len);
      } else if (conv_family == "sanov") {
        chain = mglab::sanov_chain(conv_m, conv_len);
      } else {
        throw mglab::InvalidSpecError("unknown chain family: " + conv_family);
      }
      Json config = flags_json({{"family", chain.kind},
                                {"m", chain.modulus},
                                {"length", chain.length() - 1},
                                {"rmax", conv_rmax},
                                {"valuation_cap", conv_valcap}});
      Json report = mglab::report_envelope("converge", config, opts);
      report["results"] = mglab::converge_report(chain, conv_rmax, conv_valcap, opts);
      mglab::attach_timing(report, opts, elapsed());
      emit_json(g, report);
    } else if (*tr_cmd) {
      Json report;
      if (tr_random > 0) {
        Json config = flags_json({{"random", tr_random}});
        report = mglab::report_envelope("transfer", config, opts);
        report["results"] = mglab::transfer_random_report(tr_random, opts);
        if (report["results"]["sound"] != report["results"]["pairs"])
          exit_code = kExitViolation;
      } else if (!tr_pair.empty()) {
        Json config = flags_json({{"pair", tr_pair},
                                  {"family", tr_family},
                                  {"m", tr_m},
                                  {"length", tr_len}});
        report = mglab::report_envelope("transfer", config, opts);
        if (tr_pair == "t") {
          mglab::QuotientChain chain = tr_family == "sanov"
                                           ? mglab::sanov_chain(tr_m, tr_len)
                                           : mglab::z_chain(tr_m, tr_len);
          report["results"] = mglab::transfer_pair_report(tr_pair, &chain, opts);
        } else {
          report["results"] = mglab::transfer_pair_report(tr_pair, nullptr, opts);
        }
        if (report["results"]["certificate"]["verdict"] != "Confirmed")
          exit_code = kExitViolation;
      } else if (!tr_x.empty() && !tr_y.empty()) {
        mglab::QuotientChain chain;
        if (!tr_chain_file.empty()) {
          std::ifstream in(tr_chain_file);
          if (!in) throw mglab::InvalidSpecError("cannot open chain file: " + tr_chain_file);
          chain = mglab::load_chain_spec(Json::parse(in));
        } else if (tr_family == "self") {
          chain = mglab::self_chain(mglab::make_family(tr_base));
        } else {
          chain = tr_family == "sanov" ? mglab::sanov_chain(tr_m, tr_len)
                                       : mglab::z_chain(tr_m, tr_len);
        }
        Json config = flags_json({{"x", tr_x},
                                  {"y", tr_y},
                                  {"ring", tr_ring},
                                  {"family", chain.kind},
                                  {"base", tr_base},
                                  {"m", chain.modulus},
                                  {"length", chain.length() - 1}});
        report = mglab::report_envelope("transfer", config, opts);
        report["results"] = mglab::transfer_literal_report(tr_ring, chain, tr_x, tr_y, opts);
        if (report["results"]["certificate"]["verdict"] != "Confirmed")
          exit_code = kExitViolation;
      } else {
        throw CLI::ValidationError("transfer needs --pair, --random, or --x/--y");
      }
      mglab::attach_timing(report, opts, elapsed());
      emit_json(g, report);
    } else if (*df_cmd) {
      Json report;
      if (!df_system.empty()) {
        Json config = flags_json({{"system", df_system}});
        report = mglab::report_envelope("df-exhaustive", config, opts);
        report["results"] = mglab::df_crossed_report(df_system, opts);
      } else {
        Json config = flags_json({{"ring", df_ring}, {"group", df_group}});
        report = mglab::report_envelope("df-exhaustive", config, opts);
        report["results"] = mglab::df_report(df_ring, df_group, opts);
      }
      if (!report["results"]["violations"].empty()) exit_code = kExitViolation;
      mglab::attach_timing(report, opts, elapsed());
      emit_json(g, report);
    } else if (*cv_cmd) {
      mglab::System sys;
      Json config;
      if (!cv_file.empty()) {
        std::ifstream in(cv_file);
        if (!in) throw mglab::InvalidSpecError("cannot open system file: " + cv_file);
        sys = mglab::load_system_json(Json::parse(in));
        config = flags_json({{"file", cv_file}});
      } else {
        sys = mglab::make_crossed_system(cv_system);
        config = flags_json({{"system", cv_system}});
      }
      Json report = mglab::report_envelope("crossed-validate", config, opts);
      report["results"] = mglab::crossed_validate_report(sys, opts);
      mglab::attach_timing(report, opts, elapsed());
      emit_json(g, report);
    } else if (*cd_cmd) {
      Json config = flags_json({{"preset", cd_preset}});
      Json report = mglab::report_envelope("crossed-decompose", config, opts);
      report["results"] = mglab::crossed_decompose_report(cd_preset, opts);
      if (report["results"]["pairs_preserved"] != report["results"]["pairs_checked"])
        exit_code = kExitViolation;
      mglab::attach_timing(report, opts, elapsed());
      emit_json(g, report);
    } else if (*so_cmd) {
      Json config = flags_json({{"n", so_n}, {"p", so_p}, {"q_max", so_qmax}});
      Json report = mglab::report_envelope("slnp-orders", config, opts);
      report["results"] = mglab::slnp_orders_report(so_n, so_p, so_qmax, opts);
      if (!so_dump.empty()) {
        mglab::GammaGenerators gg = mglab::make_generators(so_n, so_p);
        std::ofstream f(so_dump, std::ios::binary);
        if (!f) throw mglab::Error("cannot open output file: " + so_dump);
        mglab::write_matrix_file(f, std::vector<mglab::LaurentMat>{gg.a, gg.b, gg.x});
        report["results"]["generators_file"] = so_dump;
      }
      bool ok = report["results"]["all_orders_equal"].get<bool>() &&
                report["results"]["all_subgroups_equal"].get<bool>() &&
                report["results"]["all_gcd_one"].get<bool>() &&
                report["results"]["x_pow_p_equals_a"].get<bool>();
      if (!ok) exit_code = kExitViolation;
      mglab::attach_timing(report, opts, elapsed());
      if (g.csv && !json_flag)
        emit(g, mglab::slnp_orders_csv(report["results"]));
      else
        emit_json(g, report);
    } else if (*sv_cmd) {
      Json config =
          flags_json({{"n", sv_n}, {"p", sv_p}, {"q_max", sv_qmax}, {"samples", sv_samples}});
      Json report = mglab::report_envelope("slnp-vanish", config, opts);
      report["results"] = mglab::slnp_vanish_report(sv_n, sv_p, sv_qmax, sv_samples, opts);
      if (report["results"]["counterexamples"].get<int>() > 0) exit_code = kExitViolation;
      mglab::attach_timing(report, opts, elapsed());
      emit_json(g, report);
    } else if (*pr_cmd) {
      mglab::Presentation p;
      Json config;
      if (!pr_file.empty()) {
        std::ifstream in(pr_file);
        if (!in) throw mglab::InvalidSpecError("cannot open presentation file: " + pr_file);
        p = mglab::read_presentation(in);
        config = flags_json({{"file", pr_file}, {"r_min", pr_rmin}, {"r_max", pr_rmax}});
      } else {
        p = mglab::toy_presentation(pr_gens, pr_rels);
        config = flags_json({{"gens", pr_gens},
                             {"relators", pr_rels},
                             {"r_min", pr_rmin},
                             {"r_max", pr_rmax}});
      }
      Json report = mglab::report_envelope("presentations", config, opts);
      report["results"] = mglab::presentations_report(p, pr_rmin, pr_rmax, opts);
      if (!report["results"]["identities_hold"].get<bool>()) exit_code = kExitViolation;
      mglab::attach_timing(report, opts, elapsed());
      emit_json(g, report);
    }
    return exit_code;
  } catch (const mglab::ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const mglab::ExceedsCapError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const mglab::InvalidSpecError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const mglab::OutOfScopeError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

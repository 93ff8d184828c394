#include "cli_app.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "rolecheck/bridge.hpp"
#include "rolecheck/checker.hpp"
#include "rolecheck/generators.hpp"
#include "rolecheck/measure.hpp"
#include "rolecheck/model_io.hpp"
#include "rolecheck/stats.hpp"

namespace rolecheck::cli {

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct RunConfig {
  std::string model_path;
  std::string formula_text;
  std::string formula_path;
  std::string engine = "fixpoint";
  std::string initial;
  std::string format = "plain";
  std::int64_t cap_translate = 10'000'000;
  std::int64_t cap_naive = 1'000'000;
  bool trace = false;
  bool paired = false;
  std::string gen_kind;
  int agents = 2;
  std::uint64_t seed = 0;
};

Formula load_formula(const RunConfig& cfg) {
  std::string text = cfg.formula_text;
  if (!cfg.formula_path.empty()) text = slurp(cfg.formula_path);
  return parse_formula(text);
}

void print_check_result(const RunConfig& cfg, const std::vector<std::string>& names,
                        const StateSet& sat, StateId initial, std::ostream& out) {
  if (cfg.format == "structured") {
    for (StateId q = 0; q < static_cast<StateId>(names.size()); ++q)
      out << "state=" << names[static_cast<size_t>(q)]
          << " sat=" << (sat.test(q) ? "true" : "false") << '\n';
    out << "initial=" << names[static_cast<size_t>(initial)]
        << " sat=" << (sat.test(initial) ? "true" : "false") << '\n';
    return;
  }
  out << "satisfying:";
  for (StateId q : sat.elements()) out << ' ' << names[static_cast<size_t>(q)];
  out << '\n';
  out << "initial " << names[static_cast<size_t>(initial)] << ": "
      << (sat.test(initial) ? "true" : "false") << '\n';
}

void print_trace(const WorkTrace& t, std::ostream& out) {
  out << "enforce_calls=" << t.enforce_calls
      << " extension_visits=" << t.extension_visits
      << " fixpoint_iterations=" << t.fixpoint_iterations
      << " per_call_bound_ok=" << (t.per_call_bound_ok ? "true" : "false") << '\n';
}

int do_check(const RunConfig& cfg, std::ostream& out) {
  Formula f = load_formula(cfg);
  ParsedModel parsed = parse_model_any(slurp(cfg.model_path), cfg.cap_translate);

  // A role-based input runs the role engines directly and the classical one
  // through the expansion; an agent-indexed input runs the role engines
  // through the singleton embedding.
  Rcgs role_model;
  const Cgs* classical = nullptr;
  Cgs classical_storage;
  if (parsed.is_rcgs()) {
    role_model = std::move(parsed.rcgs());
    if (cfg.engine == "cgs") {
      classical_storage = translate(role_model, TranslateOptions{cfg.cap_translate});
      classical = &classical_storage;
    }
  } else {
    classical_storage = std::move(parsed.cgs());
    classical = &classical_storage;
    if (cfg.engine != "cgs") role_model = singleton_roles(classical_storage);
  }

  const std::vector<std::string>& names =
      cfg.engine == "cgs" ? classical->state_names : role_model.state_names;
  StateId initial = 0;
  if (!cfg.initial.empty()) {
    std::optional<StateId> q = cfg.engine == "cgs"
                                   ? classical->state_index(cfg.initial)
                                   : role_model.state_index(cfg.initial);
    if (!q) throw error("unknown initial state " + cfg.initial);
    initial = *q;
  }

  StateSet sat(static_cast<int>(names.size()));
  if (cfg.engine == "fixpoint") {
    if (cfg.trace) {
      WorkTrace t = measure(role_model, f);
      sat = t.result;
      print_trace(t, out);
    } else {
      sat = mcheck(role_model, f);
    }
  } else if (cfg.engine == "naive") {
    sat = mcheck_naive(role_model, f, NaiveOptions{cfg.cap_naive});
  } else {
    CgsCheckStats stats;
    sat = cgs_mcheck(*classical, f, cfg.trace ? &stats : nullptr);
    if (cfg.trace)
      out << "enforce_calls=" << stats.enforce_calls
          << " tuple_visits=" << stats.tuple_visits
          << " fixpoint_iterations=" << stats.fixpoint_iterations << '\n';
  }

  print_check_result(cfg, names, sat, initial, out);
  return sat.test(initial) ? 0 : 1;
}

int do_translate(const RunConfig& cfg, std::ostream& out) {
  Rcgs m = parse_model(slurp(cfg.model_path), Rcgs::default_compile_cap);
  Cgs c = translate(m, TranslateOptions{cfg.cap_translate});
  out << serialize_model(c);
  return 0;
}

int do_stats(const RunConfig& cfg, std::ostream& out) {
  Rcgs m = parse_model(slurp(cfg.model_path), Rcgs::default_compile_cap);
  SizeReport report;
  if (cfg.paired) {
    Cgs c = translate(m, TranslateOptions{cfg.cap_translate});
    report = size_report(m, &c);
  } else {
    report = size_report(m);
  }
  out << (cfg.format == "structured" ? render_records(report, m)
                                     : render_table(report, m));
  return 0;
}

int do_gen(const RunConfig& cfg, std::ostream& out) {
  Rcgs m;
  if (cfg.gen_kind == "train")
    m = gen_train_controller(cfg.agents);
  else if (cfg.gen_kind == "autotrains")
    m = gen_autonomous_trains(cfg.agents);
  else
    m = random_model(cfg.seed);
  out << serialize_model(m);
  return 0;
}

int do_validate(const RunConfig& cfg, std::ostream& out) {
  ParsedModel parsed = parse_model_any_raw(slurp(cfg.model_path));
  std::vector<std::string> reports;
  if (parsed.is_rcgs())
    for (const Violation& v : validate(parsed.rcgs()))
      reports.push_back(to_string(v, parsed.rcgs()));
  else
    for (const Violation& v : validate(parsed.cgs()))
      reports.push_back(to_string(v, parsed.cgs()));

  if (reports.empty()) {
    out << "ok\n";
    return 0;
  }
  for (const std::string& r : reports) out << r << '\n';
  return 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Model checker for concurrent game structures with roles"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_format = [&cfg](CLI::App* cmd) {
    cmd->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"plain", "structured"}));
  };

  CLI::App* check = app.add_subcommand("check", "Evaluate a formula on a model");
  check->add_option("model", cfg.model_path, "Model file")->required();
  CLI::Option* ft = check->add_option("--formula", cfg.formula_text, "Formula text");
  check->add_option("--formula-file", cfg.formula_path, "File holding the formula")
      ->excludes(ft);
  check->add_option("--engine", cfg.engine, "Checking engine")
      ->check(CLI::IsMember({"fixpoint", "naive", "cgs"}));
  check->add_option("--initial", cfg.initial,
                    "State whose verdict drives the exit status");
  check->add_option("--cap-translate", cfg.cap_translate,
                    "Per-state tuple cap for the cgs engine");
  check->add_option("--cap-naive", cfg.cap_naive,
                    "Strategy cap for the naive engine");
  check->add_flag("--trace", cfg.trace, "Print work counters");
  add_format(check);

  CLI::App* tr = app.add_subcommand("translate",
                                    "Expand a role-based model to agent-indexed form");
  tr->add_option("model", cfg.model_path, "Model file")->required();
  tr->add_option("--cap-translate", cfg.cap_translate, "Per-state tuple cap");

  CLI::App* stats = app.add_subcommand("stats", "Per-state size report");
  stats->add_option("model", cfg.model_path, "Model file")->required();
  stats->add_flag("--paired", cfg.paired,
                  "Materialize the expansion and use its tuple counts");
  stats->add_option("--cap-translate", cfg.cap_translate, "Per-state tuple cap");
  add_format(stats);

  CLI::App* gen = app.add_subcommand("gen", "Write a generated model");
  gen->add_option("kind", cfg.gen_kind, "train | autotrains | random")
      ->required()
      ->check(CLI::IsMember({"train", "autotrains", "random"}));
  gen->add_option("-n", cfg.agents, "Number of trains");
  gen->add_option("--seed", cfg.seed, "Seed for kind random");

  CLI::App* val = app.add_subcommand("validate", "Structural check of a model file");
  val->add_option("model", cfg.model_path, "Model file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  try {
    if (check->parsed()) {
      if (cfg.formula_text.empty() && cfg.formula_path.empty())
        throw error("check needs --formula or --formula-file");
      return do_check(cfg, out);
    }
    if (tr->parsed()) return do_translate(cfg, out);
    if (stats->parsed()) return do_stats(cfg, out);
    if (gen->parsed()) return do_gen(cfg, out);
    return do_validate(cfg, out);
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace rolecheck::cli

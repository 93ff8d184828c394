#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli_app.hpp"
#include "rolecheck/bridge.hpp"
#include "rolecheck/generators.hpp"
#include "rolecheck/model_io.hpp"

using namespace rolecheck;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int status = cli::run(args, out, err);
  return Outcome{status, out.str(), err.str()};
}

std::string write_scratch(const std::string& name, const std::string& text) {
  std::filesystem::path dir = std::filesystem::temp_directory_path() / "rolecheck_cli";
  std::filesystem::create_directories(dir);
  std::filesystem::path file = dir / name;
  std::ofstream(file, std::ios::binary) << text;
  return file.string();
}

}  // namespace

TEST_CASE("check: verdicts and exit codes") {
  std::string model = write_scratch("t2.rcgs", serialize_model(gen_train_controller(2)));

  Outcome everyone = run_cli({"check", model, "--formula", "<1,2,3> F in_gate"});
  CHECK(everyone.status == 0);
  CHECK(everyone.out.find("satisfying: q0 q1 q2 q3") != std::string::npos);
  CHECK(everyone.out.find("initial q0: true") != std::string::npos);

  Outcome trains = run_cli({"check", model, "--formula", "<1,2> F in_gate"});
  CHECK(trains.status == 1);
  CHECK(trains.out.find("initial q0: false") != std::string::npos);

  Outcome later = run_cli(
      {"check", model, "--formula", "<1,2> F in_gate", "--initial", "q2"});
  CHECK(later.status == 0);

  Outcome unknown = run_cli(
      {"check", model, "--formula", "<1,2> F in_gate", "--initial", "zz"});
  CHECK(unknown.status == 2);
  CHECK(unknown.err.find("zz") != std::string::npos);
}

TEST_CASE("check: engines agree end to end") {
  std::string model = write_scratch("t2b.rcgs", serialize_model(gen_train_controller(2)));
  for (const char* formula : {"<1,2,3> F in_gate", "<3> G out_of_gate",
                              "<1,2> (out_of_gate U in_gate)", "<> X out_of_gate"}) {
    Outcome fixpoint = run_cli({"check", model, "--formula", formula});
    Outcome naive = run_cli({"check", model, "--formula", formula, "--engine", "naive"});
    Outcome classical = run_cli({"check", model, "--formula", formula, "--engine", "cgs"});
    CAPTURE(formula);
    CHECK(fixpoint.status == naive.status);
    CHECK(fixpoint.out == naive.out);
    CHECK(fixpoint.status == classical.status);
    CHECK(fixpoint.out == classical.out);
  }
}

TEST_CASE("check: structured output is stable and machine readable") {
  std::string model = write_scratch("t1.rcgs", serialize_model(gen_train_controller(1)));
  Outcome first = run_cli({"check", model, "--formula", "<1,2> F in_gate",
                           "--format", "structured"});
  Outcome second = run_cli({"check", model, "--formula", "<1,2> F in_gate",
                            "--format", "structured"});
  CHECK(first.out == second.out);
  CHECK(first.out.find("state=q0 sat=true") != std::string::npos);
  CHECK(first.out.find("initial=q0 sat=true") != std::string::npos);
}

TEST_CASE("check: formula from file, agent-indexed input, trace") {
  Rcgs m = gen_train_controller(2);
  std::string cgs_file = write_scratch("t2.cgs", serialize_model(translate(m)));
  std::string formula_file = write_scratch("f.atl", "<1,2,3> F in_gate\n");

  Outcome viaFile = run_cli({"check", cgs_file, "--formula-file", formula_file});
  CHECK(viaFile.status == 0);
  CHECK(viaFile.out.find("satisfying: q0 q1 q2 q3") != std::string::npos);

  Outcome naive = run_cli({"check", cgs_file, "--formula", "<1,2> F in_gate",
                           "--engine", "naive"});
  CHECK(naive.status == 1);
  CHECK(naive.out.find("satisfying: q2 q3") != std::string::npos);

  Outcome traced = run_cli({"check", cgs_file, "--formula", "<1,2> F in_gate",
                            "--engine", "cgs", "--trace"});
  CHECK(traced.status == 1);
  CHECK(traced.out.find("tuple_visits=") != std::string::npos);

  Outcome conflicting = run_cli({"check", cgs_file, "--formula", "p",
                                 "--formula-file", formula_file});
  CHECK(conflicting.status == 2);
}

TEST_CASE("translate emits a model the parser accepts") {
  std::string model = write_scratch("t3.rcgs", serialize_model(gen_train_controller(3)));
  Outcome translated = run_cli({"translate", model});
  REQUIRE(translated.status == 0);
  Cgs c = parse_cgs(translated.out);
  CHECK(c.agent_count == 4);
  CHECK(tuple_count(c, 0) == 8);

  Outcome capped = run_cli({"translate", model, "--cap-translate", "4"});
  CHECK(capped.status == 2);
  CHECK(capped.err.find("cap") != std::string::npos);
}

TEST_CASE("stats prints the size table") {
  std::string model = write_scratch("a4.rcgs", serialize_model(gen_autonomous_trains(4)));
  Outcome table = run_cli({"stats", model, "--paired"});
  CHECK(table.status == 0);
  CHECK(table.out.find("35") != std::string::npos);
  CHECK(table.out.find("256") != std::string::npos);

  Outcome records = run_cli({"stats", model, "--format", "structured"});
  CHECK(records.status == 0);
  CHECK(records.out.find("state=q0 profiles=35") != std::string::npos);
}

TEST_CASE("gen produces valid models of every kind") {
  Outcome train = run_cli({"gen", "train", "-n", "5"});
  REQUIRE(train.status == 0);
  CHECK(parse_model(train.out) == gen_train_controller(5));

  Outcome autotrains = run_cli({"gen", "autotrains", "-n", "3"});
  REQUIRE(autotrains.status == 0);
  CHECK(parse_model(autotrains.out) == gen_autonomous_trains(3));

  Outcome random_a = run_cli({"gen", "random", "--seed", "42"});
  Outcome random_b = run_cli({"gen", "random", "--seed", "42"});
  REQUIRE(random_a.status == 0);
  CHECK(random_a.out == random_b.out);
  CHECK(validate(parse_model(random_a.out)).empty());
}

TEST_CASE("validate reports structural problems and positions") {
  std::string good = write_scratch("ok.rcgs", serialize_model(gen_train_controller(1)));
  CHECK(run_cli({"validate", good}).status == 0);

  std::string missing = serialize_model(gen_train_controller(1));
  missing = missing.substr(0, missing.rfind("trans"));  // drop the last entry
  std::string partial = write_scratch("partial.rcgs", missing);
  Outcome incomplete = run_cli({"validate", partial});
  CHECK(incomplete.status == 2);
  CHECK(incomplete.out.find("q3") != std::string::npos);

  std::string garbled = write_scratch("garbled.rcgs", "model v1\nkind rcgs\nagents x\n");
  Outcome syntax = run_cli({"validate", garbled});
  CHECK(syntax.status == 2);
  CHECK(syntax.err.find("3") != std::string::npos);  // diagnostic names line 3
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli({}).status == 2);
  CHECK(run_cli({"frobnicate"}).status == 2);
  CHECK(run_cli({"check"}).status == 2);
  CHECK(run_cli({"check", "/nonexistent/file.rcgs", "--formula", "p"}).status == 2);
  CHECK(run_cli({"gen", "train", "-n", "0"}).status == 2);
  Outcome missing_formula = run_cli({"check", write_scratch("m.rcgs",
      serialize_model(gen_train_controller(1)))});
  CHECK(missing_formula.status == 2);
  CHECK(run_cli({"--help"}).status == 0);
}

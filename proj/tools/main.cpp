// Command-line front end: validate, analyze, verify, fuzz and run.

#include <iostream>

#include <CLI11.hpp>

#include "triding/instance.hpp"

using namespace triding;

namespace {

void emit(const Records& records) {
  for (const auto& r : records) std::cout << r.dump() << '\n';
  std::cout.flush();
}

int fuzz_exit_code(const Records& records) {
  for (const auto& r : records)
    if (r.at("verdict") == "fail") return 1;
  return 0;
}

std::string default_ring(const Instance& inst) {
  if (inst.rings.order.empty()) throw InstanceError(4, "the file defines no ring to fuzz over");
  return inst.rings.order.front();
}

// Tasks listed in the file, in order.
int run_tasks(const Instance& inst, std::size_t cutoff, const RunOptions& opt) {
  if (inst.tasks.empty()) throw InstanceError(4, "the file lists no tasks");
  Records verify_records;
  bool failed = false;
  for (const auto& t : inst.tasks) {
    const auto cmd = t.at("command").get<std::string>();
    Engine engine(t.value("cutoff", cutoff));
    Records out;
    if (cmd == "analyze") {
      out = run_analyze(engine, inst, opt);
    } else if (cmd == "verify") {
      out = run_verify(engine, inst, t.at("theorem").get<std::string>(), opt);
      verify_records.insert(verify_records.end(), out.begin(), out.end());
    } else if (cmd == "fuzz") {
      out = run_fuzz(engine, inst, t.value("ring", default_ring(inst)), t.value("seed", 1ull),
                     t.value("count", std::size_t{100}), t.value("max_dim", std::size_t{3}), opt);
    } else {
      throw InstanceError(3, "unknown task command '" + cmd + "'");
    }
    failed = failed || fuzz_exit_code(out) == 1;
    emit(out);
  }
  if (failed) return 1;
  return verify_exit_code(verify_records) == 5 ? 5 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ding projective and injective modules over triangular matrix algebras"};
  app.require_subcommand(1);

  std::string file;
  std::size_t cutoff = 32;
  bool timings = false;
  std::string theorem;
  std::uint64_t seed = 1;
  std::size_t count = 100;
  std::size_t max_dim = 3;
  std::string ring;

  auto* validate_cmd = app.add_subcommand("validate", "check that every object in the file is valid");
  validate_cmd->add_option("file", file, "instance file")->required();

  auto* analyze_cmd = app.add_subcommand("analyze", "report dimensions and Ding properties");
  analyze_cmd->add_option("file", file, "instance file")->required();
  analyze_cmd->add_option("--cutoff", cutoff, "resolution length cutoff")->check(CLI::PositiveNumber);
  analyze_cmd->add_flag("--timings", timings, "add wall-clock timings to records");

  auto* verify_cmd = app.add_subcommand("verify", "check a theorem on the objects in the file");
  verify_cmd->add_option("file", file, "instance file")->required();
  verify_cmd->add_option("--theorem", theorem, "theorem id")
      ->required()
      ->check(CLI::IsMember(theorem_ids()));
  verify_cmd->add_option("--cutoff", cutoff, "resolution length cutoff")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--timings", timings, "add wall-clock timings to records");

  auto* fuzz_cmd = app.add_subcommand("fuzz", "check random triples over a ring of the file");
  fuzz_cmd->add_option("file", file, "instance file")->required();
  fuzz_cmd->add_option("--seed", seed, "random seed");
  fuzz_cmd->add_option("--count", count, "number of left and of right triples");
  fuzz_cmd->add_option("--max-dim", max_dim, "bound on component dimensions");
  fuzz_cmd->add_option("--cutoff", cutoff, "resolution length cutoff")->check(CLI::PositiveNumber);
  fuzz_cmd->add_option("--ring", ring, "ring name (default: first ring in the file)");
  fuzz_cmd->add_flag("--timings", timings, "add wall-clock timings to records");

  auto* run_cmd = app.add_subcommand("run", "execute the tasks listed in the file");
  run_cmd->add_option("file", file, "instance file")->required();
  run_cmd->add_option("--cutoff", cutoff, "default resolution length cutoff")->check(CLI::PositiveNumber);
  run_cmd->add_flag("--timings", timings, "add wall-clock timings to records");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  RunOptions opt{timings};
  try {
    Instance inst = load_instance_file(file);
    if (validate_cmd->parsed()) {
      std::cerr << "ok: " << inst.algebras.order.size() << " algebras, " << inst.bimodules.order.size()
                << " bimodules, " << inst.rings.order.size() << " rings, " << inst.modules.order.size()
                << " modules, " << inst.triple_order.size() << " triples, "
                << inst.families.order.size() << " families\n";
      return 0;
    }
    Engine engine(cutoff);
    if (analyze_cmd->parsed()) {
      emit(run_analyze(engine, inst, opt));
      return 0;
    }
    if (verify_cmd->parsed()) {
      Records out = run_verify(engine, inst, theorem, opt);
      emit(out);
      return verify_exit_code(out);
    }
    if (fuzz_cmd->parsed()) {
      Records out = run_fuzz(engine, inst, ring.empty() ? default_ring(inst) : ring, seed, count,
                             max_dim, opt);
      emit(out);
      return fuzz_exit_code(out);
    }
    return run_tasks(inst, cutoff, opt);
  } catch (const InstanceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code();
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed task: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 6;
  }
}

// rmc -- command line driver: closure and reach modes, example builders.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "rmc/builders.hpp"
#include "rmc/engine.hpp"
#include "rmc/io.hpp"
#include "rmc/log.hpp"

namespace {

using namespace rmc;

SamplingStrategy parse_sampling(const std::string& text) {
  auto colon = text.find(':');
  std::string kind = text.substr(0, colon);
  uint64_t arg = 1;
  if (colon != std::string::npos) arg = std::stoull(text.substr(colon + 1));
  if (kind == "linear") return SamplingStrategy::linear(arg);
  if (kind == "exp") return SamplingStrategy::exponential(arg);
  throw CLI::ValidationError("sampling", "expected linear:A or exp:A");
}

Transducer load_transducer(const std::string& path) {
  Model m = parse_model_file(path);
  if (!std::holds_alternative<Automaton>(m))
    throw std::runtime_error(path + ": expected a plain automaton");
  return Transducer(std::get<Automaton>(m));
}

Automaton load_automaton(const std::string& path) {
  Model m = parse_model_file(path);
  if (!std::holds_alternative<Automaton>(m))
    throw std::runtime_error(path + ": expected a plain automaton");
  return std::get<Automaton>(m);
}

int finish(const EngineResult& res, const std::string& out_path) {
  for (const CheckReport& r : res.reports) std::cerr << r.to_text();
  std::cerr << res.trace_text();
  switch (res.outcome) {
    case EngineResult::Outcome::ExactClosure:
      std::cout << "exact-closure states " << res.result_states << " peak "
                << res.peak_states << '\n';
      break;
    case EngineResult::Outcome::SafeOverApproximation:
      std::cout << "safe-overapproximation states " << res.result_states
                << " peak " << res.peak_states << '\n';
      break;
    case EngineResult::Outcome::GaveUp:
      std::cout << "gave-up " << res.gave_up_reason << '\n';
      return 3;
  }
  if (res.result && !out_path.empty()) {
    std::ofstream out(out_path);
    emit(*res.result, out);
  }
  return res.outcome == EngineResult::Outcome::ExactClosure ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regular model checking by transducer extrapolation"};
  app.require_subcommand(1);

  std::string transducer_path, initial_path, sampling = "linear:1";
  std::string out_path, dot_dir;
  uint64_t max_samples = 24, max_states = 250000;
  double max_seconds = 600;
  uint32_t sync_mult = 2;
  bool no_heuristics = false, dominance = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--transducer", transducer_path, "transition relation")
        ->required();
    cmd->add_option("--sampling", sampling, "linear:A or exp:A");
    cmd->add_option("--max-samples", max_samples, "sampling prefix cap");
    cmd->add_option("--max-states", max_states, "per-automaton state cap");
    cmd->add_option("--max-seconds", max_seconds, "wall clock cap");
    cmd->add_option("--sync-mult", sync_mult,
                    "synchronization bound multiplier (M = mult * diameter)");
    cmd->add_flag("--no-heuristics", no_heuristics,
                  "disable the nonreflexive-composition optimization");
    cmd->add_flag("--dominance", dominance,
                  "drop dominated states during determinization");
    cmd->add_option("--emit-dot", dot_dir, "dump samples as DOT files");
    cmd->add_option("--out", out_path, "write the result automaton");
  };

  CLI::App* closure = app.add_subcommand("closure", "compute T*");
  add_common(closure);

  CLI::App* reach = app.add_subcommand("reach", "compute T*(A)");
  add_common(reach);
  reach->add_option("--initial", initial_path, "initial set")->required();

  std::string example_name, example_out = ".";
  CLI::App* examples =
      app.add_subcommand("examples", "write builder outputs");
  examples->add_option("name", example_name, "token-ring | affine:C")
      ->required();
  examples->add_option("--dir", example_out, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 1 : 1;
  }

  try {
    if (examples->parsed()) {
      std::filesystem::create_directories(example_out);
      if (example_name == "token-ring") {
        emit_file(token_ring().automaton(), example_out + "/token-ring.rmc");
        emit_file(initial_token_ring(), example_out + "/token-ring-init.rmc");
        std::cout << "wrote token-ring.rmc and token-ring-init.rmc\n";
      } else if (example_name.rfind("affine:", 0) == 0) {
        int64_t c = std::stoll(example_name.substr(7));
        emit_file(affine_relation(c).automaton(),
                  example_out + "/affine-" + std::to_string(c) + ".rmc");
        std::cout << "wrote affine-" << c << ".rmc\n";
      } else {
        std::cerr << "unknown example '" << example_name << "'\n";
        return 1;
      }
      return 0;
    }

    RunConfig cfg;
    cfg.sampling = parse_sampling(sampling);
    cfg.max_samples = max_samples;
    cfg.max_states = max_states;
    cfg.max_seconds = max_seconds;
    cfg.sync_bound_multiplier = sync_mult;
    cfg.nonreflexive_composition = !no_heuristics;
    cfg.dominance = dominance;
    cfg.emit_dot_dir = dot_dir;

    if (closure->parsed()) {
      cfg.mode = RunConfig::Mode::Closure;
      EngineResult res = run(load_transducer(transducer_path), std::nullopt,
                             cfg);
      return finish(res, out_path);
    }
    cfg.mode = RunConfig::Mode::Reach;
    EngineResult res = run(load_transducer(transducer_path),
                           load_automaton(initial_path), cfg);
    return finish(res, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

// Command-line front end: compile grammars to membrane systems, enumerate
// language slices, verify compiled systems against the grammar oracle.
//
// Exit codes: 0 success/equal, 1 mismatch, 2 parse error, 3 grammar not in
// Penttonen normal form, 4 incomplete bounds, 5 trace target not generated.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "insdel/compilers.hpp"
#include "insdel/io.hpp"
#include "insdel/oracle.hpp"
#include "insdel/verifier.hpp"

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitParseError = 2;
constexpr int kExitNotPenttonen = 3;
constexpr int kExitIncompleteBounds = 4;
constexpr int kExitNotGenerated = 5;

std::size_t default_string_cap() {
  if (const char* env = std::getenv("INSDEL_MAX_STRINGS")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring invalid INSDEL_MAX_STRINGS\n";
    }
  }
  return 1'000'000;
}

struct BoundsOptions {
  std::size_t max_len = 6;
  std::size_t max_intermediate = 0;  // 0 = max_len + 10
  std::size_t max_steps = 100;

  insdel::Bounds to_bounds() const {
    insdel::Bounds b;
    b.max_output_len = max_len;
    b.max_intermediate_len =
        max_intermediate ? max_intermediate : max_len + 10;
    b.max_steps = max_steps;
    b.max_strings = default_string_cap();
    return b;
  }
};

void add_bounds_options(CLI::App* cmd, BoundsOptions& opts) {
  cmd->add_option("--max-len,-L", opts.max_len, "output length bound L");
  cmd->add_option("--max-intermediate,-B", opts.max_intermediate,
                  "intermediate length bound B (default L+10)");
  cmd->add_option("--max-steps,-S", opts.max_steps, "step bound S");
}

void print_listing(const insdel::WordSet& words, bool exhausted) {
  for (const insdel::Word& w : insdel::sorted_words(words)) {
    std::cout << insdel::word_text(w) << "\n";
  }
  std::cout << "exhausted: " << (exhausted ? "true" : "false") << "\n";
}

int run_cli(int argc, char** argv) {
  CLI::App app{"insertion-deletion P system toolkit"};
  app.require_subcommand(1);

  std::string grammar_path, system_path, out_path, target_text;
  int theorem = 1;
  BoundsOptions bounds;

  CLI::App* compile = app.add_subcommand(
      "compile", "compile a grammar into a membrane system");
  compile->add_option("grammar", grammar_path, "grammar file")->required();
  compile->add_option("--theorem,-t", theorem, "construction (1 or 2)")
      ->check(CLI::Range(1, 2));
  compile->add_option("--out,-o", out_path, "output system file")->required();

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "enumerate the language slice of a system file");
  enumerate->add_option("system", system_path, "system file")->required();
  add_bounds_options(enumerate, bounds);

  CLI::App* oracle = app.add_subcommand(
      "oracle", "enumerate a grammar language slice by brute force");
  oracle->add_option("grammar", grammar_path, "grammar file")->required();
  add_bounds_options(oracle, bounds);

  CLI::App* verify = app.add_subcommand(
      "verify", "compare a compiled system against the grammar oracle");
  verify->add_option("grammar", grammar_path, "grammar file")->required();
  verify->add_option("--theorem,-t", theorem, "construction (1 or 2)")
      ->check(CLI::Range(1, 2));
  add_bounds_options(verify, bounds);

  CLI::App* trace = app.add_subcommand(
      "trace", "shortest derivation trace for an emitted word");
  trace->add_option("system", system_path, "system file")->required();
  trace->add_option("--target,-w", target_text,
                    "target word (space-separated symbols, 'eps' for the "
                    "empty word)")
      ->required();
  add_bounds_options(trace, bounds);

  CLI::App* size = app.add_subcommand(
      "size", "print the size vector and total weight of a system file");
  size->add_option("system", system_path, "system file")->required();

  CLI11_PARSE(app, argc, argv);

  if (compile->parsed()) {
    insdel::Grammar g = insdel::parse_grammar_file(grammar_path);
    const auto violations = insdel::validate_penttonen(g);
    if (!violations.empty()) {
      for (const auto& v : violations) {
        std::cerr << "production " << v.production_index << ": " << v.message
                  << "\n";
      }
      return kExitNotPenttonen;
    }
    const insdel::PSystemDef sys =
        theorem == 1 ? insdel::compile_t1(g) : insdel::compile_t2(g);
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return kExitParseError;
    }
    out << insdel::print_system(sys);
    const insdel::SizeVector sv = insdel::size_of_system(sys);
    std::cout << insdel::size_text(sv) << " psi=" << insdel::total_weight(sv)
              << "\n";
    return 0;
  }

  if (enumerate->parsed()) {
    const insdel::PSystemDef sys = insdel::parse_system_file(system_path);
    const insdel::RunResult rr = insdel::run(sys, bounds.to_bounds());
    print_listing(rr.language, rr.exhausted);
    return 0;
  }

  if (oracle->parsed()) {
    const insdel::Grammar g = insdel::parse_grammar_file(grammar_path);
    insdel::Bounds b = insdel::oracle_bounds(bounds.max_len);
    if (bounds.max_intermediate) b.max_intermediate_len = bounds.max_intermediate;
    b.max_strings = default_string_cap();
    const insdel::OracleResult res = insdel::derive_bfs(g, b);
    print_listing(res.language, res.exhausted);
    return 0;
  }

  if (verify->parsed()) {
    const insdel::Grammar g = insdel::parse_grammar_file(grammar_path);
    const insdel::Report report =
        insdel::verify(g, theorem, bounds.to_bounds());
    std::cout << insdel::report_text(report);
    switch (report.verdict) {
      case insdel::Verdict::Equal: return 0;
      case insdel::Verdict::Mismatch: return kExitMismatch;
      case insdel::Verdict::IncompleteBounds: return kExitIncompleteBounds;
    }
  }

  if (trace->parsed()) {
    const insdel::PSystemDef sys = insdel::parse_system_file(system_path);
    const insdel::Word target = insdel::word_from_text(target_text);
    const insdel::Trace t =
        insdel::trace_witness(sys, target, bounds.to_bounds());
    std::cout << insdel::trace_text(t);
    return 0;
  }

  if (size->parsed()) {
    const insdel::PSystemDef sys = insdel::parse_system_file(system_path);
    const insdel::SizeVector sv = insdel::size_of_system(sys);
    std::cout << insdel::size_text(sv) << " psi=" << insdel::total_weight(sv)
              << "\n";
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const insdel::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const insdel::NotPenttonenError& e) {
    std::cerr << e.what() << "\n";
    return kExitNotPenttonen;
  } catch (const insdel::NotGeneratedError& e) {
    std::cerr << e.what() << "\n";
    return kExitNotGenerated;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParseError;
  }
}

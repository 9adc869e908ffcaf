// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria.  Each criterion prints indented evidence on failure.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "insdel/compilers.hpp"
#include "insdel/io.hpp"
#include "insdel/oracle.hpp"
#include "insdel/verifier.hpp"

using namespace insdel;
namespace fs = std::filesystem;

namespace {

struct Criterion {
  std::string name;
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& note) {
    if (!ok) {
      pass = false;
      notes.push_back(note);
    }
  }
};

Bounds mk(std::size_t L, std::size_t B, std::size_t S) {
  Bounds b;
  b.max_output_len = L;
  b.max_intermediate_len = B;
  b.max_steps = S;
  return b;
}

std::vector<std::pair<std::string, Grammar>> bundled_grammars() {
  const fs::path dir = INSDEL_DATA_DIR;
  std::vector<std::pair<std::string, Grammar>> out;
  for (const char* name : {"g_ab", "g_ctx", "g_erase"}) {
    out.emplace_back(name,
                     parse_grammar_file(dir / (std::string(name) + ".grammar")));
  }
  return out;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Equal: return "equal";
    case Verdict::IncompleteBounds: return "incomplete_bounds";
    case Verdict::Mismatch: return "mismatch";
  }
  return "?";
}

// 1. The four quoted derivation chains replay exactly.
Criterion golden_traces() {
  Criterion c{"golden traces replay"};
  for (std::string_view id : kGoldenTraceIds) {
    const auto start = std::chrono::steady_clock::now();
    const ReplayOutcome out = replay_golden(id);
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    c.require(out.ok, std::string(id) + ": " + out.message);
    c.require(ms < 1000, std::string(id) + ": took " + std::to_string(ms) +
                             " ms (budget 1 s)");
  }
  return c;
}

// 2. Compiled systems certify the target sizes; total weight 4 when all
// rule classes are present.
Criterion size_certification() {
  Criterion c{"size certification"};
  for (const auto& [name, g] : bundled_grammars()) {
    const PSystemDef t1 = compile_t1(g);
    const PSystemDef t2 = compile_t2(g);
    c.require(assert_size(t1, kSizeT1),
              name + ": first construction exceeds (1,1,0;2,0,0), got " +
                  size_text(size_of_system(t1)));
    c.require(assert_size(t2, kSizeT2),
              name + ": second construction exceeds (2,0,0;1,1,0), got " +
                  size_text(size_of_system(t2)));
    c.require(total_weight(size_of_system(t1)) == 4,
              name + ": first construction weight != 4");
    c.require(total_weight(size_of_system(t2)) == 4,
              name + ": second construction weight != 4");
  }
  return c;
}

// 3. Slice equivalence for every bundled grammar, both constructions,
// L = 4..6 with B = L+10, S = 100.
Criterion slice_equivalence() {
  Criterion c{"slice equivalence"};
  for (const auto& [name, g] : bundled_grammars()) {
    for (int theorem : {1, 2}) {
      for (std::size_t L : {4u, 5u, 6u}) {
        const Report r = verify(g, theorem, mk(L, L + 10, 100));
        std::string cell = name + " construction " +
                           std::to_string(theorem) + " L=" +
                           std::to_string(L);
        std::string diff;
        for (const Word& w : r.extra) diff += " +" + word_text(w);
        for (const Word& w : r.missing) diff += " -" + word_text(w);
        c.require(r.verdict == Verdict::Equal,
                  cell + ": verdict " + verdict_name(r.verdict) + diff);
      }
    }
  }
  return c;
}

// 4. Soundness grid: extra = {} whenever both enumerations are exhausted.
Criterion soundness_grid() {
  Criterion c{"soundness grid"};
  for (const auto& [name, g] : bundled_grammars()) {
    for (int theorem : {1, 2}) {
      int cells = 0;
      for (std::size_t L : {2u, 3u, 4u}) {
        for (std::size_t extra_b : {2u, 8u}) {
          for (std::size_t S : {12u, 60u}) {
            ++cells;
            const Report r = verify(g, theorem, mk(L, L + extra_b, S));
            if (!r.system_exhausted || !r.oracle_exhausted) continue;
            std::string words;
            for (const Word& w : r.extra) words += " " + word_text(w);
            c.require(r.extra.empty(),
                      name + " construction " + std::to_string(theorem) +
                          " L=" + std::to_string(L) + " B=" +
                          std::to_string(L + extra_b) + " S=" +
                          std::to_string(S) +
                          ": exhausted with extra words:" + words);
          }
        }
      }
      c.require(cells == 12, "grid size drifted");
    }
  }
  return c;
}

// 5. Engine properties over >= 10^4 random cases.
Criterion engine_properties() {
  Criterion c{"engine properties"};
  std::mt19937 rng(20260824);
  auto rnd_size = [&](std::size_t max) {
    return std::uniform_int_distribution<std::size_t>(0, max)(rng);
  };
  const Symbol pool[] = {"a", "b", "A"};
  auto rnd_symbol = [&] { return pool[rnd_size(2)]; };
  auto rnd_word = [&](std::size_t max_len) {
    Word w(rnd_size(max_len));
    for (Symbol& s : w) s = rnd_symbol();
    return w;
  };
  auto rnd_rule = [&](RuleKind kind) {
    ContextRule r;
    r.kind = kind;
    r.left = rnd_word(2);
    r.body = rnd_word(1);
    r.body.push_back(rnd_symbol());
    r.right = rnd_word(2);
    return r;
  };

  std::size_t cases = 0;

  // inversion + length arithmetic
  for (int k = 0; k < 5000; ++k) {
    ++cases;
    const Word x = rnd_word(5);
    ContextRule r = rnd_rule(RuleKind::Insertion);
    for (const Word& y : apply_insertion(x, r)) {
      c.require(y.size() == x.size() + r.body.size(), "insertion length");
      r.kind = RuleKind::Deletion;
      c.require(apply_deletion(y, r).contains(x), "inversion ins->del");
      r.kind = RuleKind::Insertion;
    }
    r.kind = RuleKind::Deletion;
    for (const Word& y : apply_deletion(x, r)) {
      c.require(y.size() == x.size() - r.body.size(), "deletion length");
      r.kind = RuleKind::Insertion;
      c.require(apply_insertion(y, r).contains(x), "inversion del->ins");
      r.kind = RuleKind::Deletion;
    }
  }

  // <= k+1 context-free insertion positions
  for (int k = 0; k < 5000; ++k) {
    ++cases;
    const Word x = rnd_word(6);
    const Symbol s = rnd_symbol();
    const ContextRule r{RuleKind::Insertion, {}, {s}, {}, Target::Here};
    const WordSet results = apply_insertion(x, r);
    c.require(results.size() <= x.size() + 1, "more than k+1 positions");
    if (std::find(x.begin(), x.end(), s) == x.end()) {
      c.require(results.size() == x.size() + 1,
                "fresh symbol must hit every position");
    }
  }

  // derive_closure and run monotone in bounds
  for (int k = 0; k < 40; ++k) {
    ++cases;
    InsDelSystem sys;
    sys.alphabet = {"a", "b", "A"};
    sys.terminals = {"a", "b"};
    sys.axioms = {rnd_word(3)};
    for (int i = 0; i < 2; ++i) {
      sys.insertions.push_back(rnd_rule(RuleKind::Insertion));
      sys.deletions.push_back(rnd_rule(RuleKind::Deletion));
    }
    const auto small = derive_closure(sys, mk(2, 3, 4));
    const auto big = derive_closure(sys, mk(4, 8, 10));
    c.require(std::includes(big.language.begin(), big.language.end(),
                            small.language.begin(), small.language.end()),
              "derive_closure not monotone in bounds");
  }
  {
    const PSystemDef sys = compile_t1(bundled_grammars()[0].second);
    const RunResult small = run(sys, mk(2, 8, 20));
    const RunResult big = run(sys, mk(4, 14, 60));
    c.require(std::includes(big.language.begin(), big.language.end(),
                            small.language.begin(), small.language.end()),
              "run not monotone in bounds");
  }

  // run invariant under iteration-order shuffling
  {
    const PSystemDef base = compile_t1(bundled_grammars()[0].second);
    const RunResult expect = run(base, mk(4, 12, 40));
    for (int round = 0; round < 10; ++round) {
      ++cases;
      PSystemDef shuffled = base;
      for (auto& [_, rules] : shuffled.rules) {
        std::shuffle(rules.begin(), rules.end(), rng);
      }
      const RunResult rr = run(shuffled, mk(4, 12, 40));
      c.require(rr.language == expect.language &&
                    rr.final_config.contents == expect.final_config.contents,
                "run depends on rule iteration order");
    }
  }

  c.require(cases >= 10'000,
            "only " + std::to_string(cases) + " random cases");
  return c;
}

// 6. parse . print is the identity on every bundled file, byte-exact.
Criterion round_trip() {
  Criterion c{"round-trip serialization"};
  const fs::path dir = INSDEL_DATA_DIR;
  int files = 0;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const fs::path& p = entry.path();
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    const std::string original = ss.str();
    if (p.extension() == ".grammar") {
      ++files;
      c.require(print_grammar(parse_grammar_file(p)) == original,
                p.filename().string() + ": not a byte-exact fixpoint");
    } else if (p.extension() == ".system") {
      ++files;
      c.require(print_system(parse_system_file(p)) == original,
                p.filename().string() + ": not a byte-exact fixpoint");
    }
  }
  c.require(files >= 9, "expected at least 9 bundled files, found " +
                            std::to_string(files));
  return c;
}

// 7. Blocked-branch evidence on the second construction of a lone split.
Criterion blocked_branches() {
  Criterion c{"blocked-branch evidence"};
  Grammar g;
  g.nonterminals = {"A", "B", "C"};
  g.start = "A";
  g.productions = {{1, {"A"}, {"B", "C"}}};
  const PSystemDef sys = compile_t2(g);
  const Bounds b = mk(4, 12, 60);
  const auto blocked = diagnose_blocked(sys, b);
  c.require(std::any_of(blocked.begin(), blocked.end(),
                        [](const auto& e) { return e.first == 4; }),
            "no dead-end reported in membrane 4");
  const RunResult rr = run(sys, b);
  const OracleResult oracle = derive_bfs(g, oracle_bounds(4));
  c.require(rr.language == oracle.language,
            "language slice drifted while diagnosing");
  return c;
}

}  // namespace

int main() {
  std::vector<Criterion> results;
  results.push_back(golden_traces());
  results.push_back(size_certification());
  results.push_back(slice_equivalence());
  results.push_back(soundness_grid());
  results.push_back(engine_properties());
  results.push_back(round_trip());
  results.push_back(blocked_branches());

  int failed = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const Criterion& c = results[i];
    std::cout << "criterion " << i + 1 << " (" << c.name
              << "): " << (c.pass ? "PASS" : "FAIL") << "\n";
    for (const std::string& note : c.notes) {
      std::cout << "    " << note << "\n";
    }
    if (!c.pass) ++failed;
  }
  return failed;
}

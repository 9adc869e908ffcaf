// Desk-scale equivalence checking between a grammar and its compiled
// P system, golden-chain replay, and blocked-branch diagnostics.

#ifndef INSDEL_VERIFIER_HPP
#define INSDEL_VERIFIER_HPP

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "insdel/engine.hpp"
#include "insdel/grammar.hpp"
#include "insdel/membrane.hpp"

namespace insdel {

enum class Verdict { Equal, IncompleteBounds, Mismatch };

struct Report {
  WordSet grammar_slice;
  WordSet system_slice;
  WordSet missing;  // grammar - system
  WordSet extra;    // system - grammar
  Verdict verdict = Verdict::IncompleteBounds;
  bool system_exhausted = false;
  bool oracle_exhausted = false;
  Bounds system_bounds;
  Bounds oracle_bounds;
};

// Compiles g via the selected theorem construction (1 or 2), enumerates the
// grammar slice and the system slice at the same output length, and diffs.
// The oracle side runs with its own generous bounds (B = L + 2, large step
// budget) so truncation is never blamed on it.  A nonempty extra with both
// enumerations exhausted is a genuine soundness bug, hence Mismatch.
Report verify(const Grammar& g, int theorem, const Bounds& system_bounds);

// Stable text summary (sorted word lists, one per line).
std::string report_text(const Report& r);

// One expected (region, word) stop of a derivation chain.
struct ChainStep {
  int region = 0;
  Word word;
};

struct ReplayOutcome {
  bool ok = false;
  // On failure, index of the first chain entry that could not be reached
  // from its predecessor by any rule of the predecessor's region.
  std::size_t diverged_at = 0;
  std::string message;
};

// Checks that each consecutive chain pair is connected by a single rule
// application in the earlier step's region, routed to the later step's
// region.
ReplayOutcome replay_chain(const PSystemDef& sys,
                           const std::vector<ChainStep>& chain);

// Bundled derivation chains for single-production grammars, pinned to
// production index 1 with empty surrounding context.
inline constexpr std::string_view kGoldenTraceIds[] = {
    "T2-ABAC", "T2-ABC", "T2-Aalpha", "T1-ABAC-prose"};

std::vector<ChainStep> golden_chain(std::string_view trace_id);
PSystemDef golden_system(std::string_view trace_id);

// Replays the identified bundled chain against its compiled system.
// Throws std::invalid_argument on an unknown id.
ReplayOutcome replay_golden(std::string_view trace_id);

// Reachable (region, word) pairs to which no rule of that region applies,
// excluding terminal words sitting in the skin.  These are the derivation
// branches that can never contribute to the output.
std::set<std::pair<int, Word>> diagnose_blocked(const PSystemDef& sys,
                                                const Bounds& bounds);

}  // namespace insdel

#endif

// Insertion-deletion rewriting: the one-step relations and bounded
// closure of a standalone InsDel system.

#ifndef INSDEL_ENGINE_HPP
#define INSDEL_ENGINE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "insdel/rules.hpp"
#include "insdel/word.hpp"

namespace insdel {

// ID = (V, T, A, I, D).
struct InsDelSystem {
  SymbolSet alphabet;   // V
  SymbolSet terminals;  // T, subset of V
  WordSet axioms;       // A
  std::vector<ContextRule> insertions;
  std::vector<ContextRule> deletions;
};

// Truncation bounds for enumerations over an undecidable language.
//
// max_intermediate_len must be >= max_output_len, otherwise outputs could be
// unreachable through shrinking derivations.  exhausted=false anywhere means
// the reported slice is a lower bound of the true one: derivations may
// exceed the intermediate bound and shrink back.
struct Bounds {
  std::size_t max_output_len = 6;        // L
  std::size_t max_intermediate_len = 16; // B >= L
  std::size_t max_steps = 100;           // S
  std::size_t max_strings = 1'000'000;   // global cap on distinct words
};

// Throws std::invalid_argument unless B >= L.
void check_bounds(const Bounds& b);

// All words x1 u alpha v x2 for every decomposition x = x1 u v x2.
// Overlapping occurrences are all enumerated; duplicates collapse.
WordSet apply_insertion(const Word& x, const ContextRule& rule);

// All words x1 u v x2 for every decomposition x = x1 u alpha v x2.
WordSet apply_deletion(const Word& x, const ContextRule& rule);

// Dispatch on rule.kind.
WordSet apply_rule(const Word& x, const ContextRule& rule);

struct ClosureResult {
  WordSet language;  // reached words over T* with length <= L
  bool exhausted = false;
};

// Breadth-first closure of => from the axioms, deduplicating globally and
// discarding intermediates longer than B.  exhausted is true iff a fixpoint
// was reached within max_steps without pruning or hitting the string cap.
ClosureResult derive_closure(const InsDelSystem& sys, const Bounds& bounds);

// Structural checks: T subset of V, symbols known, rule kinds in the right
// set, bodies nonempty.  Returns human-readable findings; empty = valid.
std::vector<std::string> validate_insdel(const InsDelSystem& sys);

}  // namespace insdel

#endif

// Insertion-deletion P system semantics.
//
// "Arbitrary many copies" is modeled as set semantics with persistent
// originals: a step is a monotone set-transformer, so applying every rule to
// every string in every region per step is exactly the maximally parallel
// step, and run is deterministic.

#ifndef INSDEL_MEMBRANE_HPP
#define INSDEL_MEMBRANE_HPP

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "insdel/engine.hpp"
#include "insdel/rules.hpp"
#include "insdel/word.hpp"

namespace insdel {

// Destination pseudo-region for strings leaving the system.
inline constexpr int kEnvironment = 0;

// Rooted membrane tree; region ids are 1..size, region 1 is the skin.
class MembraneTree {
 public:
  MembraneTree() = default;

  // parent[i-1] is the parent of region i; the skin's entry is 0.
  // Throws std::invalid_argument unless the result is a tree rooted at 1.
  explicit MembraneTree(std::vector<int> parent);

  // [1[2[3...[k]...]]]
  static MembraneTree linear(int depth);

  int size() const { return static_cast<int>(parent_.size()); }
  bool contains(int region) const { return region >= 1 && region <= size(); }
  int parent_of(int region) const;
  const std::vector<int>& children_of(int region) const;

  // Nested-bracket word, e.g. "[1[2][3]]".
  std::string to_text() const;

  bool operator==(const MembraneTree& o) const { return parent_ == o.parent_; }

 private:
  std::vector<int> parent_;
  std::vector<std::vector<int>> children_;
};

// Pi = (V, T, mu, M_1..M_k, R_1..R_k).
struct PSystemDef {
  SymbolSet alphabet;   // V
  SymbolSet terminals;  // T
  MembraneTree tree;
  std::map<int, WordSet> axioms;                 // M_i
  std::map<int, std::vector<ContextRule>> rules; // R_i
};

struct Configuration {
  std::map<int, WordSet> contents;  // N_i, keys = tree regions
  WordSet emitted;                  // strings sent out of the skin, unfiltered
  std::size_t step_count = 0;
};

struct RunResult {
  WordSet language;     // emitted words over T* with length <= L
  WordSet emitted_raw;  // every emitted word, kept for debugging
  Configuration final_config;
  bool exhausted = false;
};

// Destinations of a rewritten string: here -> the region itself, out -> the
// parent (or the environment from the skin), in -> every child (the union
// over nondeterministic choices equals copying to all under set semantics).
// in at a leaf yields no destination; validate_psystem reports such rules.
std::vector<int> resolve_target(const MembraneTree& tree, int region,
                                Target tar);

// One maximally parallel step.  All originals remain; results longer than
// the intermediate bound are dropped and *pruned (when given) is set.
Configuration step(const PSystemDef& sys, const Configuration& cfg,
                   const Bounds& bounds, bool* pruned = nullptr);

Configuration initial_configuration(const PSystemDef& sys);

// Iterates steps from the initial configuration until no region gains a
// word and nothing new is emitted, or the step/string caps are hit.
// exhausted is true only for a genuine fixpoint with no pruning.
RunResult run(const PSystemDef& sys, const Bounds& bounds);

struct TraceStep {
  int region = 0;
  Word before;
  ContextRule rule;
  Word after;
  int destination = 0;  // region id, or kEnvironment
};

struct Trace {
  std::vector<TraceStep> steps;
};

struct NotGeneratedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One shortest sequence of rule applications from an axiom to the emission
// of w, by parent-pointer BFS over (region, word) states.  Throws
// NotGeneratedError if w is not emitted within the bounds.
Trace trace_witness(const PSystemDef& sys, const Word& w,
                    const Bounds& bounds);

std::string trace_text(const Trace& trace);

// Structural checks, including in-targeted rules sitting at leaf regions
// (they can never deliver a string anywhere).
std::vector<std::string> validate_psystem(const PSystemDef& sys);

}  // namespace insdel

#endif

// Context rules and the six-component size measure.

#ifndef INSDEL_RULES_HPP
#define INSDEL_RULES_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "insdel/word.hpp"

namespace insdel {

enum class RuleKind { Insertion, Deletion };

// Where a rewritten string is placed; meaningful only inside a P system.
enum class Target { Here, In, Out };

// One insertion or deletion rule (u, alpha, v).  An insertion rule permits
// uv -> u alpha v, a deletion rule permits u alpha v -> uv.  The body alpha
// must be nonempty.
struct ContextRule {
  RuleKind kind = RuleKind::Insertion;
  Word left;   // u
  Word body;   // alpha
  Word right;  // v
  Target target = Target::Here;

  auto operator<=>(const ContextRule&) const = default;
};

std::string rule_text(const ContextRule& r);

// Descriptional complexity of a rule set: per-side maxima of body and
// context lengths over insertion rules (first three) and deletion rules
// (last three).  Empty rule sets contribute zero components.
struct SizeVector {
  std::size_t ins_body = 0;    // n  = max |alpha| over insertions
  std::size_t ins_left = 0;    // m  = max |u| over insertions
  std::size_t ins_right = 0;   // m' = max |v| over insertions
  std::size_t del_body = 0;    // p  = max |alpha| over deletions
  std::size_t del_left = 0;    // q  = max |u| over deletions
  std::size_t del_right = 0;   // q' = max |v| over deletions

  auto operator<=>(const SizeVector&) const = default;
};

SizeVector size_of_rules(const std::vector<ContextRule>& insertions,
                         const std::vector<ContextRule>& deletions);

// Sum of all six components (the total weight psi).
std::size_t total_weight(const SizeVector& sv);

// True iff ins_body+ins_left+ins_right >= 2 and del_body+del_left+del_right
// >= 2, the constraint ruling out context-free single-symbol operations.
bool check_minimality(const SizeVector& sv);

bool componentwise_leq(const SizeVector& a, const SizeVector& b);

// "(n,m,m';p,q,q')"
std::string size_text(const SizeVector& sv);

}  // namespace insdel

#endif

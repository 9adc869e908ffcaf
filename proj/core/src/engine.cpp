#include "insdel/engine.hpp"

#include <stdexcept>

namespace insdel {

namespace {

bool matches_at(const Word& w, std::size_t pos, const Word& pattern) {
  if (pos + pattern.size() > w.size()) return false;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (w[pos + i] != pattern[i]) return false;
  }
  return true;
}

}  // namespace

void check_bounds(const Bounds& b) {
  if (b.max_intermediate_len < b.max_output_len) {
    throw std::invalid_argument(
        "bounds: max_intermediate_len must be >= max_output_len");
  }
}

WordSet apply_insertion(const Word& x, const ContextRule& rule) {
  if (rule.kind != RuleKind::Insertion) {
    throw std::invalid_argument("apply_insertion: rule is not an insertion");
  }
  WordSet out;
  const Word& u = rule.left;
  const Word& v = rule.right;
  for (std::size_t i = 0; i + u.size() + v.size() <= x.size(); ++i) {
    if (!matches_at(x, i, u) || !matches_at(x, i + u.size(), v)) continue;
    Word y;
    y.reserve(x.size() + rule.body.size());
    y.insert(y.end(), x.begin(), x.begin() + i + u.size());
    y.insert(y.end(), rule.body.begin(), rule.body.end());
    y.insert(y.end(), x.begin() + i + u.size(), x.end());
    out.insert(std::move(y));
  }
  return out;
}

WordSet apply_deletion(const Word& x, const ContextRule& rule) {
  if (rule.kind != RuleKind::Deletion) {
    throw std::invalid_argument("apply_deletion: rule is not a deletion");
  }
  WordSet out;
  const Word& u = rule.left;
  const Word& a = rule.body;
  const Word& v = rule.right;
  for (std::size_t i = 0; i + u.size() + a.size() + v.size() <= x.size();
       ++i) {
    if (!matches_at(x, i, u) || !matches_at(x, i + u.size(), a) ||
        !matches_at(x, i + u.size() + a.size(), v)) {
      continue;
    }
    Word y;
    y.reserve(x.size() - a.size());
    y.insert(y.end(), x.begin(), x.begin() + i + u.size());
    y.insert(y.end(), x.begin() + i + u.size() + a.size(), x.end());
    out.insert(std::move(y));
  }
  return out;
}

WordSet apply_rule(const Word& x, const ContextRule& rule) {
  return rule.kind == RuleKind::Insertion ? apply_insertion(x, rule)
                                          : apply_deletion(x, rule);
}

ClosureResult derive_closure(const InsDelSystem& sys, const Bounds& bounds) {
  check_bounds(bounds);
  WordSet seen;
  WordSet frontier;
  bool pruned = false;
  bool capped = false;

  for (const Word& a : sys.axioms) {
    if (a.size() > bounds.max_intermediate_len) {
      pruned = true;
      continue;
    }
    seen.insert(a);
    frontier.insert(a);
  }

  std::size_t steps = 0;
  while (steps < bounds.max_steps && !frontier.empty() && !capped) {
    WordSet next;
    for (const Word& w : frontier) {
      for (const std::vector<ContextRule>* rules :
           {&sys.insertions, &sys.deletions}) {
        for (const ContextRule& r : *rules) {
          for (Word y : apply_rule(w, r)) {
            if (y.size() > bounds.max_intermediate_len) {
              pruned = true;
              continue;
            }
            if (seen.size() >= bounds.max_strings) {
              capped = true;
              continue;
            }
            if (seen.insert(y).second) next.insert(std::move(y));
          }
        }
      }
    }
    frontier = std::move(next);
    ++steps;
  }

  ClosureResult result;
  result.exhausted = frontier.empty() && !pruned && !capped;
  for (const Word& w : seen) {
    if (w.size() <= bounds.max_output_len && word_over(w, sys.terminals)) {
      result.language.insert(w);
    }
  }
  return result;
}

std::vector<std::string> validate_insdel(const InsDelSystem& sys) {
  std::vector<std::string> out;
  for (const Symbol& t : sys.terminals) {
    if (!sys.alphabet.contains(t)) {
      out.push_back("terminal '" + t + "' not in alphabet");
    }
  }
  for (const Word& a : sys.axioms) {
    if (!word_over(a, sys.alphabet)) {
      out.push_back("axiom '" + word_text(a) + "' uses unknown symbols");
    }
  }
  auto check_rules = [&](const std::vector<ContextRule>& rules,
                         RuleKind kind, const char* what) {
    for (const ContextRule& r : rules) {
      if (r.kind != kind) {
        out.push_back(std::string(what) + " set contains a rule of the "
                      "other kind: " + rule_text(r));
      }
      if (r.body.empty()) {
        out.push_back("rule body must be nonempty: " + rule_text(r));
      }
      for (const Word* side : {&r.left, &r.body, &r.right}) {
        if (!word_over(*side, sys.alphabet)) {
          out.push_back("rule uses unknown symbols: " + rule_text(r));
          break;
        }
      }
    }
  };
  check_rules(sys.insertions, RuleKind::Insertion, "insertion");
  check_rules(sys.deletions, RuleKind::Deletion, "deletion");
  return out;
}

}  // namespace insdel

#include "insdel/oracle.hpp"

#include <deque>

namespace insdel {

namespace {

// All one-step rewrites of the sentential form by any production of g.
// Scans every occurrence of every lhs, including overlapping ones.
std::vector<Word> rewrite_once(const Word& form, const Grammar& g) {
  std::vector<Word> out;
  for (const Production& p : g.productions) {
    if (p.lhs.size() > form.size()) continue;
    for (std::size_t i = 0; i + p.lhs.size() <= form.size(); ++i) {
      bool match = true;
      for (std::size_t j = 0; j < p.lhs.size(); ++j) {
        if (form[i + j] != p.lhs[j]) {
          match = false;
          break;
        }
      }
      if (!match) continue;
      Word next;
      next.reserve(form.size() - p.lhs.size() + p.rhs.size());
      next.insert(next.end(), form.begin(), form.begin() + i);
      next.insert(next.end(), p.rhs.begin(), p.rhs.end());
      next.insert(next.end(), form.begin() + i + p.lhs.size(), form.end());
      out.push_back(std::move(next));
    }
  }
  return out;
}

}  // namespace

OracleResult derive_bfs(const Grammar& g, const Bounds& bounds) {
  check_bounds(bounds);
  WordSet seen;
  WordSet frontier;
  bool pruned = false;
  bool capped = false;

  const Word start = {g.start};
  if (start.size() <= bounds.max_intermediate_len) {
    seen.insert(start);
    frontier.insert(start);
  } else {
    pruned = true;
  }

  std::size_t steps = 0;
  while (steps < bounds.max_steps && !frontier.empty() && !capped) {
    WordSet next;
    for (const Word& form : frontier) {
      for (Word& y : rewrite_once(form, g)) {
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
    frontier = std::move(next);
    ++steps;
  }

  OracleResult result;
  result.exhausted = frontier.empty() && !pruned && !capped;
  for (const Word& w : seen) {
    if (w.size() <= bounds.max_output_len && word_over(w, g.terminals)) {
      result.language.insert(w);
    }
  }
  return result;
}

Bounds oracle_bounds(std::size_t max_output_len) {
  Bounds b;
  b.max_output_len = max_output_len;
  b.max_intermediate_len = 2 * max_output_len + 4;
  b.max_steps = 10'000;
  return b;
}

Membership membership(const Grammar& g, const Word& w, const Bounds& bounds) {
  return derive_bfs(g, bounds).language.contains(w) ? Membership::Yes
                                                    : Membership::NoWithinBounds;
}

}  // namespace insdel

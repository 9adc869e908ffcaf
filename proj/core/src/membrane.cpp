#include "insdel/membrane.hpp"

#include <deque>
#include <map>
#include <stdexcept>

namespace insdel {

MembraneTree::MembraneTree(std::vector<int> parent)
    : parent_(std::move(parent)) {
  const int k = size();
  if (k == 0) throw std::invalid_argument("membrane tree must be nonempty");
  if (parent_[0] != 0) {
    throw std::invalid_argument("region 1 must be the root");
  }
  children_.assign(k + 1, {});
  for (int i = 2; i <= k; ++i) {
    const int p = parent_[i - 1];
    if (p < 1 || p > k) {
      throw std::invalid_argument("region " + std::to_string(i) +
                                  " has parent outside the tree");
    }
    children_[p].push_back(i);
  }
  // Reachability from the root doubles as the acyclicity check.
  std::vector<bool> seen(k + 1, false);
  std::deque<int> queue = {1};
  seen[1] = true;
  int reached = 0;
  while (!queue.empty()) {
    const int r = queue.front();
    queue.pop_front();
    ++reached;
    for (int c : children_[r]) {
      if (!seen[c]) {
        seen[c] = true;
        queue.push_back(c);
      }
    }
  }
  if (reached != k) {
    throw std::invalid_argument("membrane tree is not connected");
  }
}

MembraneTree MembraneTree::linear(int depth) {
  std::vector<int> parent(static_cast<std::size_t>(depth));
  for (int i = 1; i <= depth; ++i) parent[i - 1] = i - 1;
  return MembraneTree(std::move(parent));
}

int MembraneTree::parent_of(int region) const {
  if (!contains(region)) throw std::out_of_range("unknown region");
  return parent_[region - 1];
}

const std::vector<int>& MembraneTree::children_of(int region) const {
  if (!contains(region)) throw std::out_of_range("unknown region");
  return children_[region];
}

std::string MembraneTree::to_text() const {
  std::string out;
  auto emit = [&](auto&& self, int region) -> void {
    out += '[' + std::to_string(region);
    for (int c : children_of(region)) self(self, c);
    out += ']';
  };
  emit(emit, 1);
  return out;
}

std::vector<int> resolve_target(const MembraneTree& tree, int region,
                                Target tar) {
  switch (tar) {
    case Target::Here:
      return {region};
    case Target::Out:
      return {region == 1 ? kEnvironment : tree.parent_of(region)};
    case Target::In:
      return tree.children_of(region);
  }
  return {};
}

Configuration initial_configuration(const PSystemDef& sys) {
  Configuration cfg;
  for (int r = 1; r <= sys.tree.size(); ++r) cfg.contents[r] = {};
  for (const auto& [region, words] : sys.axioms) {
    cfg.contents.at(region).insert(words.begin(), words.end());
  }
  return cfg;
}

namespace {

// Routes every result of every (word, rule) pair of `source` into `into`.
// Returns the words that are new to `into`, per region (kEnvironment maps
// to emissions).
std::map<int, WordSet> expand_into(const PSystemDef& sys,
                                   const std::map<int, WordSet>& source,
                                   Configuration& into, const Bounds& bounds,
                                   bool& pruned, bool& capped,
                                   std::size_t& total_strings) {
  std::map<int, WordSet> fresh;
  for (const auto& [region, words] : source) {
    auto rules_it = sys.rules.find(region);
    if (rules_it == sys.rules.end()) continue;
    for (const Word& w : words) {
      for (const ContextRule& r : rules_it->second) {
        WordSet results = apply_rule(w, r);
        if (results.empty()) continue;
        const std::vector<int> dests = resolve_target(sys.tree, region,
                                                      r.target);
        for (const Word& y : results) {
          if (y.size() > bounds.max_intermediate_len) {
            pruned = true;
            continue;
          }
          for (int d : dests) {
            if (total_strings >= bounds.max_strings) {
              capped = true;
              break;
            }
            WordSet& bucket =
                d == kEnvironment ? into.emitted : into.contents.at(d);
            if (bucket.insert(y).second) {
              ++total_strings;
              fresh[d].insert(y);
            }
          }
        }
      }
    }
  }
  return fresh;
}

std::size_t count_strings(const Configuration& cfg) {
  std::size_t n = cfg.emitted.size();
  for (const auto& [_, words] : cfg.contents) n += words.size();
  return n;
}

}  // namespace

Configuration step(const PSystemDef& sys, const Configuration& cfg,
                   const Bounds& bounds, bool* pruned_out) {
  check_bounds(bounds);
  Configuration next = cfg;
  next.step_count = cfg.step_count + 1;
  bool pruned = false;
  bool capped = false;
  std::size_t total = count_strings(cfg);
  expand_into(sys, cfg.contents, next, bounds, pruned, capped, total);
  if (pruned_out) *pruned_out = pruned || capped;
  return next;
}

RunResult run(const PSystemDef& sys, const Bounds& bounds) {
  check_bounds(bounds);
  Configuration cfg = initial_configuration(sys);
  bool pruned = false;
  bool capped = false;
  for (auto& [region, words] : cfg.contents) {
    WordSet kept;
    for (const Word& w : words) {
      if (w.size() > bounds.max_intermediate_len) {
        pruned = true;
      } else {
        kept.insert(w);
      }
    }
    words = std::move(kept);
  }
  std::size_t total = count_strings(cfg);

  // Only words added in the previous step need expanding: results persist,
  // so older words contributed everything they can already.  The visited
  // configuration sequence is identical to stepping the full contents.
  std::map<int, WordSet> frontier = cfg.contents;
  bool fixpoint = false;
  while (cfg.step_count < bounds.max_steps) {
    bool any_frontier = false;
    for (const auto& [_, words] : frontier) {
      if (!words.empty()) {
        any_frontier = true;
        break;
      }
    }
    if (!any_frontier) {
      fixpoint = true;
      break;
    }
    std::map<int, WordSet> fresh =
        expand_into(sys, frontier, cfg, bounds, pruned, capped, total);
    ++cfg.step_count;
    fresh.erase(kEnvironment);  // emissions are not rewritten further
    frontier = std::move(fresh);
    if (capped) break;
  }

  RunResult result;
  result.emitted_raw = cfg.emitted;
  for (const Word& w : cfg.emitted) {
    if (w.size() <= bounds.max_output_len && word_over(w, sys.terminals)) {
      result.language.insert(w);
    }
  }
  result.exhausted = fixpoint && !pruned && !capped;
  result.final_config = std::move(cfg);
  return result;
}

Trace trace_witness(const PSystemDef& sys, const Word& w,
                    const Bounds& bounds) {
  check_bounds(bounds);
  using State = std::pair<int, Word>;
  struct Link {
    State from;
    TraceStep step;
  };
  std::map<State, Link> parent;
  std::deque<State> queue;

  for (const auto& [region, words] : sys.axioms) {
    for (const Word& a : words) {
      if (a.size() > bounds.max_intermediate_len) continue;
      State s{region, a};
      if (parent.emplace(s, Link{s, {}}).second) queue.push_back(s);
    }
  }

  auto reconstruct = [&](const State& last, TraceStep final_step) {
    std::vector<TraceStep> steps = {std::move(final_step)};
    State cur = last;
    while (true) {
      const Link& link = parent.at(cur);
      if (link.from == cur) break;
      steps.push_back(link.step);
      cur = link.from;
    }
    Trace t;
    t.steps.assign(steps.rbegin(), steps.rend());
    return t;
  };

  while (!queue.empty()) {
    const State cur = queue.front();
    queue.pop_front();
    const auto& [region, word] = cur;
    auto rules_it = sys.rules.find(region);
    if (rules_it == sys.rules.end()) continue;
    for (const ContextRule& r : rules_it->second) {
      for (const Word& y : apply_rule(word, r)) {
        if (y.size() > bounds.max_intermediate_len) continue;
        for (int d : resolve_target(sys.tree, region, r.target)) {
          TraceStep ts{region, word, r, y, d};
          if (d == kEnvironment) {
            if (y == w) return reconstruct(cur, std::move(ts));
            continue;
          }
          State nxt{d, y};
          if (parent.size() >= bounds.max_strings) continue;
          if (parent.emplace(nxt, Link{cur, std::move(ts)}).second) {
            queue.push_back(nxt);
          }
        }
      }
    }
  }
  throw NotGeneratedError("word '" + word_text(w) +
                          "' is not emitted within the given bounds");
}

std::string trace_text(const Trace& trace) {
  std::string out;
  for (const TraceStep& s : trace.steps) {
    out += "[" + std::to_string(s.region) + "] " + word_text(s.before) +
           " --" + rule_text(s.rule) + "--> " + word_text(s.after) + " (" +
           (s.destination == kEnvironment ? std::string("OUT")
                                          : std::to_string(s.destination)) +
           ")\n";
  }
  return out;
}

std::vector<std::string> validate_psystem(const PSystemDef& sys) {
  std::vector<std::string> out;
  for (const Symbol& t : sys.terminals) {
    if (!sys.alphabet.contains(t)) {
      out.push_back("terminal '" + t + "' not in alphabet");
    }
  }
  for (const auto& [region, words] : sys.axioms) {
    if (!sys.tree.contains(region)) {
      out.push_back("axiom region " + std::to_string(region) +
                    " not in the membrane tree");
      continue;
    }
    for (const Word& w : words) {
      if (!word_over(w, sys.alphabet)) {
        out.push_back("axiom '" + word_text(w) + "' uses unknown symbols");
      }
    }
  }
  for (const auto& [region, rules] : sys.rules) {
    if (!sys.tree.contains(region)) {
      out.push_back("rule region " + std::to_string(region) +
                    " not in the membrane tree");
      continue;
    }
    for (const ContextRule& r : rules) {
      if (r.body.empty()) {
        out.push_back("rule body must be nonempty: " + rule_text(r));
      }
      for (const Word* side : {&r.left, &r.body, &r.right}) {
        if (!word_over(*side, sys.alphabet)) {
          out.push_back("rule uses unknown symbols: " + rule_text(r));
          break;
        }
      }
      if (r.target == Target::In && sys.tree.children_of(region).empty()) {
        out.push_back("InTargetAtLeaf: region " + std::to_string(region) +
                      " has no children for rule " + rule_text(r));
      }
    }
  }
  return out;
}

}  // namespace insdel

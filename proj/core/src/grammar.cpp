#include "insdel/grammar.hpp"

#include <algorithm>
#include <set>

namespace insdel {

namespace {

bool all_nonterminal(const Word& w, const Grammar& g) {
  return std::all_of(w.begin(), w.end(), [&](const Symbol& s) {
    return g.nonterminals.contains(s);
  });
}

}  // namespace

PenttonenClass classify_production(const Production& prod, const Grammar& g) {
  const Word& lhs = prod.lhs;
  const Word& rhs = prod.rhs;
  if (lhs.size() == 2) {
    // AB -> AC with shared A, all nonterminals.
    if (rhs.size() == 2 && lhs[0] == rhs[0] && all_nonterminal(lhs, g) &&
        all_nonterminal(rhs, g)) {
      return ContextReplace{lhs[0], lhs[1], rhs[1]};
    }
    throw NotPenttonenError("production " + std::to_string(prod.index) +
                            ": two-symbol lhs must have the form AB -> AC "
                            "over nonterminals");
  }
  if (lhs.size() == 1 && g.nonterminals.contains(lhs[0])) {
    if (rhs.empty()) return Erase{lhs[0]};
    if (rhs.size() == 1 &&
        (g.nonterminals.contains(rhs[0]) || g.terminals.contains(rhs[0]))) {
      return Rename{lhs[0], rhs[0]};
    }
    if (rhs.size() == 2 && all_nonterminal(rhs, g)) {
      return Split{lhs[0], rhs[0], rhs[1]};
    }
  }
  throw NotPenttonenError("production " + std::to_string(prod.index) +
                          ": not of a Penttonen shape");
}

std::vector<Violation> validate_penttonen(const Grammar& g) {
  std::vector<Violation> out;
  auto grammar_level = [&](const std::string& msg) {
    out.push_back({0, msg});
  };

  for (const Symbol& s : g.nonterminals) {
    if (g.terminals.contains(s)) {
      grammar_level("symbol '" + s + "' is both nonterminal and terminal");
    }
  }
  for (const SymbolSet* set : {&g.nonterminals, &g.terminals}) {
    for (const Symbol& s : *set) {
      if (!valid_symbol(s)) {
        grammar_level("invalid symbol name '" + s + "'");
      } else if (s.front() == kReservedPrefix) {
        grammar_level("symbol '" + s +
                      "' uses the reserved '#' prefix for generated names");
      }
    }
  }
  if (!g.nonterminals.contains(g.start)) {
    grammar_level("StartNotNonterminal: start symbol '" + g.start +
                  "' is not a nonterminal");
  }

  std::set<int> seen_indices;
  for (const Production& p : g.productions) {
    if (p.index <= 0 || !seen_indices.insert(p.index).second) {
      out.push_back({p.index, "production index must be positive and unique"});
    }
    if (p.lhs.empty()) {
      out.push_back({p.index, "production lhs must be nonempty"});
      continue;
    }
    bool symbols_known = true;
    for (const Word* side : {&p.lhs, &p.rhs}) {
      for (const Symbol& s : *side) {
        if (!g.nonterminals.contains(s) && !g.terminals.contains(s)) {
          out.push_back({p.index, "unknown symbol '" + s + "'"});
          symbols_known = false;
        }
      }
    }
    if (!symbols_known) continue;
    try {
      classify_production(p, g);
    } catch (const NotPenttonenError& e) {
      out.push_back({p.index, std::string("NotPenttonen: ") + e.what()});
    }
  }
  return out;
}

}  // namespace insdel

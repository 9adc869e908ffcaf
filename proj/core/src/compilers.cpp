#include "insdel/compilers.hpp"

#include <string>

namespace insdel {

namespace {

Word eps() { return {}; }

ContextRule ins(Word left, Word body, Word right, Target tar) {
  return {RuleKind::Insertion, std::move(left), std::move(body),
          std::move(right), tar};
}

ContextRule del(Word left, Word body, Word right, Target tar) {
  return {RuleKind::Deletion, std::move(left), std::move(body),
          std::move(right), tar};
}

void require_penttonen(const Grammar& g) {
  std::vector<Violation> violations = validate_penttonen(g);
  if (violations.empty()) return;
  std::string msg = "grammar is not in Penttonen normal form:";
  for (const Violation& v : violations) {
    msg += "\n  [" + std::to_string(v.production_index) + "] " + v.message;
  }
  throw NotPenttonenError(msg);
}

// Shared frame: five nested membranes, alphabet N u T u markers u {X},
// axiom SX in the skin, the epsilon-production and sentinel rules in R_1.
PSystemDef skeleton(const Grammar& g, int marker_slots) {
  const MarkerSet mk;
  PSystemDef sys;
  sys.tree = MembraneTree::linear(5);
  sys.alphabet = g.nonterminals;
  sys.alphabet.insert(g.terminals.begin(), g.terminals.end());
  for (const Production& p : g.productions) {
    for (int j = 1; j <= marker_slots; ++j) {
      sys.alphabet.insert(mk.marker(p.index, j));
    }
  }
  sys.alphabet.insert(mk.sentinel());
  sys.terminals = g.terminals;
  for (int r = 1; r <= 5; ++r) {
    sys.axioms[r] = {};
    sys.rules[r] = {};
  }
  sys.axioms[1] = {Word{g.start, mk.sentinel()}};
  return sys;
}

void add_sentinel_rule(PSystemDef& sys) {
  const MarkerSet mk;
  sys.rules[1].push_back(del(eps(), {mk.sentinel()}, eps(), Target::Out));
}

}  // namespace

Symbol MarkerSet::marker(int prod_index, int slot) const {
  return "#P" + std::to_string(slot) + "_" + std::to_string(prod_index);
}

Symbol MarkerSet::sentinel() const { return "#X"; }

PSystemDef compile_t1(const Grammar& g) {
  require_penttonen(g);
  const MarkerSet mk;
  PSystemDef sys = skeleton(g, 4);

  for (const Production& prod : g.productions) {
    const int i = prod.index;
    const Symbol p1 = mk.marker(i, 1);
    const Symbol p2 = mk.marker(i, 2);
    const Symbol p3 = mk.marker(i, 3);
    const PenttonenClass cls = classify_production(prod, g);

    if (const auto* ctx = std::get_if<ContextReplace>(&cls)) {
      const Symbol &a = ctx->left, &b = ctx->replaced, &c = ctx->result;
      sys.rules[1].push_back(ins({a}, {p1}, eps(), Target::In));
      sys.rules[2].push_back(ins({p1}, {p2}, eps(), Target::In));
      sys.rules[2].push_back(del(eps(), {p1, p3}, eps(), Target::Out));
      sys.rules[3].push_back(del(eps(), {p2, b}, eps(), Target::In));
      sys.rules[3].push_back(ins({p3}, {c}, eps(), Target::Out));
      sys.rules[4].push_back(ins({p1}, {p3}, eps(), Target::Out));
    } else if (const auto* split = std::get_if<Split>(&cls)) {
      const Symbol &a = split->lhs, &b = split->first, &c = split->second;
      sys.rules[1].push_back(ins({a}, {p1}, eps(), Target::In));
      sys.rules[2].push_back(ins({p1}, {p2}, eps(), Target::In));
      sys.rules[2].push_back(del(eps(), {p2}, eps(), Target::Out));
      sys.rules[3].push_back(ins({p1}, {b}, eps(), Target::In));
      sys.rules[3].push_back(del(eps(), {p3}, eps(), Target::Out));
      sys.rules[4].push_back(del(eps(), {a, p1}, eps(), Target::In));
      sys.rules[4].push_back(ins({p3}, {c}, eps(), Target::Out));
      sys.rules[5].push_back(ins({p2}, {p3}, eps(), Target::Out));
    } else if (const auto* ren = std::get_if<Rename>(&cls)) {
      const Symbol &a = ren->lhs, &alpha = ren->rhs;
      sys.rules[1].push_back(ins({a}, {p1}, eps(), Target::In));
      sys.rules[2].push_back(ins({p1}, {alpha}, eps(), Target::In));
      sys.rules[2].push_back(del(eps(), {p2, p3}, eps(), Target::Out));
      sys.rules[3].push_back(ins({p1}, {p2}, eps(), Target::In));
      sys.rules[3].push_back(ins({p2}, {p3}, eps(), Target::Out));
      sys.rules[4].push_back(del(eps(), {a, p1}, eps(), Target::Out));
    } else {
      const auto& erase = std::get<Erase>(cls);
      sys.rules[1].push_back(del(eps(), {erase.lhs}, eps(), Target::Here));
    }
  }
  add_sentinel_rule(sys);
  return sys;
}

PSystemDef compile_t2(const Grammar& g) {
  require_penttonen(g);
  const MarkerSet mk;
  PSystemDef sys = skeleton(g, 5);

  for (const Production& prod : g.productions) {
    const int i = prod.index;
    const Symbol p1 = mk.marker(i, 1);
    const Symbol p2 = mk.marker(i, 2);
    const Symbol p3 = mk.marker(i, 3);
    const Symbol p4 = mk.marker(i, 4);
    const PenttonenClass cls = classify_production(prod, g);

    if (const auto* ctx = std::get_if<ContextReplace>(&cls)) {
      const Symbol &a = ctx->left, &b = ctx->replaced, &c = ctx->result;
      sys.rules[1].push_back(ins(eps(), {p1, p2}, eps(), Target::In));
      sys.rules[2].push_back(del({p2}, {b}, eps(), Target::In));
      sys.rules[2].push_back(del({a}, {p3}, eps(), Target::Out));
      sys.rules[3].push_back(ins(eps(), {p3, c}, eps(), Target::In));
      sys.rules[3].push_back(del({a}, {p2}, eps(), Target::Out));
      sys.rules[4].push_back(del({a}, {p1}, eps(), Target::Out));
    } else if (const auto* split = std::get_if<Split>(&cls)) {
      const Symbol &a = split->lhs, &b = split->first, &c = split->second;
      sys.rules[1].push_back(ins(eps(), {p1, p2}, eps(), Target::In));
      sys.rules[2].push_back(del({p2}, {a}, eps(), Target::In));
      sys.rules[2].push_back(del(eps(), {p3}, eps(), Target::Out));
      sys.rules[3].push_back(ins(eps(), {b, p3}, eps(), Target::In));
      sys.rules[3].push_back(del({p3}, {p2}, eps(), Target::Out));
      sys.rules[4].push_back(del({p3}, {p1}, eps(), Target::In));
      sys.rules[4].push_back(del({p2}, {p4}, eps(), Target::Out));
      sys.rules[5].push_back(ins(eps(), {p4, c}, eps(), Target::Out));
    } else if (const auto* ren = std::get_if<Rename>(&cls)) {
      const Symbol &a = ren->lhs, &alpha = ren->rhs;
      sys.rules[1].push_back(ins(eps(), {alpha, p3}, eps(), Target::In));
      sys.rules[2].push_back(del({p3}, {a}, eps(), Target::In));
      sys.rules[2].push_back(del({alpha}, {p2}, eps(), Target::Out));
      sys.rules[3].push_back(ins(eps(), {p1, p2}, eps(), Target::In));
      sys.rules[3].push_back(del({alpha}, {p1}, eps(), Target::Out));
      sys.rules[4].push_back(del({alpha}, {p3}, eps(), Target::Out));
    } else {
      const auto& erase = std::get<Erase>(cls);
      sys.rules[1].push_back(del(eps(), {erase.lhs}, eps(), Target::Here));
    }
  }
  add_sentinel_rule(sys);
  return sys;
}

SizeVector size_of_system(const PSystemDef& sys) {
  std::vector<ContextRule> insertions;
  std::vector<ContextRule> deletions;
  for (const auto& [_, rules] : sys.rules) {
    for (const ContextRule& r : rules) {
      (r.kind == RuleKind::Insertion ? insertions : deletions).push_back(r);
    }
  }
  return size_of_rules(insertions, deletions);
}

bool assert_size(const PSystemDef& sys, const SizeVector& expected) {
  return componentwise_leq(size_of_system(sys), expected);
}

}  // namespace insdel

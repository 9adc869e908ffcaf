// Type-0 grammars with ordered productions and Penttonen classification.

#ifndef INSDEL_GRAMMAR_HPP
#define INSDEL_GRAMMAR_HPP

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "insdel/word.hpp"

namespace insdel {

// A grammar production.  The index is the rule's ordinal i, unique within a
// grammar and fixed by the order productions appear in.
struct Production {
  int index = 0;
  Word lhs;  // nonempty
  Word rhs;  // possibly empty

  auto operator<=>(const Production&) const = default;
};

struct Grammar {
  SymbolSet nonterminals;
  SymbolSet terminals;
  Symbol start;
  std::vector<Production> productions;

  bool operator==(const Grammar&) const = default;
};

// The four Penttonen production shapes.  Carried symbols are nonterminals,
// except Rename::rhs which may be a terminal.
struct ContextReplace {  // AB -> AC
  Symbol left, replaced, result;
};
struct Split {  // A -> BC
  Symbol lhs, first, second;
};
struct Rename {  // A -> alpha, alpha in T u N
  Symbol lhs, rhs;
};
struct Erase {  // A -> eps
  Symbol lhs;
};

using PenttonenClass = std::variant<ContextReplace, Split, Rename, Erase>;

struct NotPenttonenError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Returns the unique matching class; the four classes are mutually exclusive
// by shape.  Throws NotPenttonenError if the production matches none.
PenttonenClass classify_production(const Production& prod, const Grammar& g);

// A validation finding.  production_index is 0 for grammar-level findings.
struct Violation {
  int production_index = 0;
  std::string message;
};

// Empty result iff every production classifies and the grammar invariants
// hold (N and T disjoint, start in N, all symbols known, no reserved names).
std::vector<Violation> validate_penttonen(const Grammar& g);

}  // namespace insdel

#endif

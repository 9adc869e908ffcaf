// Brute-force enumeration of grammar language slices.
//
// Deliberately shares no rewrite machinery with the insertion-deletion
// engine; independence is what makes it usable as ground truth.

#ifndef INSDEL_ORACLE_HPP
#define INSDEL_ORACLE_HPP

#include "insdel/engine.hpp"
#include "insdel/grammar.hpp"
#include "insdel/word.hpp"

namespace insdel {

struct OracleResult {
  WordSet language;  // terminal words with length <= L derivable from S
  bool exhausted = false;
};

// BFS over sentential forms from the start symbol, rewriting any occurrence
// of any production lhs by its rhs.  Works on arbitrary type-0 grammars,
// not only Penttonen ones.
OracleResult derive_bfs(const Grammar& g, const Bounds& bounds);

// Default bounds for a slice of output length L.
Bounds oracle_bounds(std::size_t max_output_len);

enum class Membership { Yes, NoWithinBounds };

// Never a definitive no: membership is undecidable in general.
Membership membership(const Grammar& g, const Word& w, const Bounds& bounds);

}  // namespace insdel

#endif

// Grammar -> P system compilers.
//
// Both translations produce the five-membrane system [1[2[3[4[5]]]]] with
// axiom SX in the skin and a fixed rule bundle per production, one bundle
// shape per Penttonen class.  compile_t1 stays within size (1,1,0;2,0,0)
// (one-symbol left-context insertions, context-free two-symbol deletions);
// compile_t2 within (2,0,0;1,1,0) (context-free two-symbol insertions,
// one-symbol left-context deletions).

#ifndef INSDEL_COMPILERS_HPP
#define INSDEL_COMPILERS_HPP

#include "insdel/grammar.hpp"
#include "insdel/membrane.hpp"
#include "insdel/rules.hpp"

namespace insdel {

// Fresh control symbols threading one production's simulation through the
// membranes.  Generated names use the reserved '#' prefix, so they are
// distinct from every user symbol and from each other.
class MarkerSet {
 public:
  // #P<j>_<i> for production index i and slot j.
  Symbol marker(int prod_index, int slot) const;

  // The end marker X appended to the axiom; its context-free deletion with
  // target out performs emission.
  Symbol sentinel() const;
};

// Throws NotPenttonenError (with the collected violations in the message)
// unless validate_penttonen(g) is empty.
PSystemDef compile_t1(const Grammar& g);
PSystemDef compile_t2(const Grammar& g);

inline constexpr SizeVector kSizeT1{1, 1, 0, 2, 0, 0};
inline constexpr SizeVector kSizeT2{2, 0, 0, 1, 1, 0};

// True iff the size of the union of all region rule sets is componentwise
// <= expected.
bool assert_size(const PSystemDef& sys, const SizeVector& expected);

SizeVector size_of_system(const PSystemDef& sys);

}  // namespace insdel

#endif

// Text formats.
//
// Grammar files: one item per line, lines whose first nonblank character is
// '#' are comments.
//
//   nonterminals: S A B
//   terminals: a b
//   start: S
//   A B -> A C
//   A -> eps
//
// Production order in the file fixes the index i.
//
// System files:
//
//   alphabet: ...
//   terminals: ...
//   membranes: [1[2[3[4[5]]]]]
//   axiom 1: S #X
//   rule 1: ins (A | #P1_1 | eps) -> in
//   rule 3: del (eps | #P2_1 B | eps) -> in
//
// Words are space-separated symbol names, 'eps' denotes the empty word.
// print-then-parse is the identity on valid documents.

#ifndef INSDEL_IO_HPP
#define INSDEL_IO_HPP

#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>

#include "insdel/grammar.hpp"
#include "insdel/membrane.hpp"

namespace insdel {

struct ParseError : std::runtime_error {
  ParseError(int line, const std::string& what);
  int line;  // 1-based, 0 when not tied to a line
};

Grammar parse_grammar(std::istream& in);
Grammar parse_grammar_file(const std::filesystem::path& path);
std::string print_grammar(const Grammar& g);

PSystemDef parse_system(std::istream& in);
PSystemDef parse_system_file(const std::filesystem::path& path);
std::string print_system(const PSystemDef& sys);

MembraneTree parse_membrane_word(const std::string& text);

}  // namespace insdel

#endif

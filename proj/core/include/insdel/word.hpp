// Symbols and words.
//
// A symbol is an opaque named token, not a character: marker names such as
// "#P1_3" are single symbols.  Names beginning with '#' are reserved for
// generated symbols and rejected in user input.

#ifndef INSDEL_WORD_HPP
#define INSDEL_WORD_HPP

#include <set>
#include <string>
#include <vector>

namespace insdel {

using Symbol = std::string;

// A word is a finite sequence of symbols; the empty vector is epsilon.
using Word = std::vector<Symbol>;

using SymbolSet = std::set<Symbol>;
using WordSet = std::set<Word>;

inline constexpr const char* kEpsilonText = "eps";
inline constexpr char kReservedPrefix = '#';

// Space-separated symbol names, or "eps" for the empty word.
std::string word_text(const Word& w);

// Inverse of word_text for whitespace-separated tokens.
Word word_from_text(const std::string& text);

bool word_over(const Word& w, const SymbolSet& alphabet);

// Valid symbol names are nonempty, printable, without whitespace and without
// the characters used by the file formats ('(', ')', '|').
bool valid_symbol(const Symbol& s);

// Shortlex: shorter words first, ties broken lexicographically by names.
bool shortlex_less(const Word& a, const Word& b);

// Sorted listing order used by all textual output.
std::vector<Word> sorted_words(const WordSet& words);

}  // namespace insdel

#endif

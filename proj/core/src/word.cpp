#include "insdel/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace insdel {

std::string word_text(const Word& w) {
  if (w.empty()) return kEpsilonText;
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += w[i];
  }
  return out;
}

Word word_from_text(const std::string& text) {
  Word w;
  std::istringstream in(text);
  Symbol s;
  while (in >> s) {
    if (s == kEpsilonText) continue;
    w.push_back(s);
  }
  return w;
}

bool word_over(const Word& w, const SymbolSet& alphabet) {
  return std::all_of(w.begin(), w.end(),
                     [&](const Symbol& s) { return alphabet.contains(s); });
}

bool valid_symbol(const Symbol& s) {
  if (s.empty() || s == kEpsilonText) return false;
  for (unsigned char c : s) {
    if (std::isspace(c) || !std::isprint(c)) return false;
    if (c == '(' || c == ')' || c == '|') return false;
  }
  return true;
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::vector<Word> sorted_words(const WordSet& words) {
  std::vector<Word> out(words.begin(), words.end());
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

}  // namespace insdel

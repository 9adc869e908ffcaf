// Shared fixtures for the test suites.

#ifndef INSDEL_TESTS_HELPERS_HPP
#define INSDEL_TESTS_HELPERS_HPP

#include <filesystem>
#include <random>
#include <string>

#include "insdel/engine.hpp"
#include "insdel/grammar.hpp"

namespace insdel::testing {

inline std::filesystem::path data_dir() { return INSDEL_DATA_DIR; }

// {a^n b^n}: two splits, an erasing rule, two renames.
inline Grammar g_ab() {
  Grammar g;
  g.nonterminals = {"S", "A", "B", "C'"};
  g.terminals = {"a", "b"};
  g.start = "S";
  g.productions = {{1, {"S"}, {"A", "C'"}},
                   {2, {"C'"}, {"S", "B"}},
                   {3, {"S"}, {}},
                   {4, {"A"}, {"a"}},
                   {5, {"B"}, {"b"}}};
  return g;
}

// {ab, ac}: exercises the context-sensitive class.
inline Grammar g_ctx() {
  Grammar g;
  g.nonterminals = {"S", "A", "B", "C"};
  g.terminals = {"a", "b", "c"};
  g.start = "S";
  g.productions = {{1, {"S"}, {"A", "B"}},
                   {2, {"A", "B"}, {"A", "C"}},
                   {3, {"A"}, {"a"}},
                   {4, {"B"}, {"b"}},
                   {5, {"C"}, {"c"}}};
  return g;
}

// {a}: all four Penttonen classes present.
inline Grammar g_erase() {
  Grammar g;
  g.nonterminals = {"S", "A", "B", "C"};
  g.terminals = {"a"};
  g.start = "S";
  g.productions = {{1, {"S"}, {"A", "B"}},
                   {2, {"A", "B"}, {"A", "C"}},
                   {3, {"A"}, {"a"}},
                   {4, {"B"}, {}},
                   {5, {"C"}, {}}};
  return g;
}

inline Bounds bounds(std::size_t len, std::size_t inter, std::size_t steps) {
  Bounds b;
  b.max_output_len = len;
  b.max_intermediate_len = inter;
  b.max_steps = steps;
  return b;
}

// Random small words and rules for the property suites.
class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  std::size_t size(std::size_t max) {
    return std::uniform_int_distribution<std::size_t>(0, max)(rng_);
  }

  Symbol symbol() {
    static const Symbol pool[] = {"a", "b", "A"};
    return pool[size(2)];
  }

  Word word(std::size_t max_len) {
    Word w(size(max_len));
    for (Symbol& s : w) s = symbol();
    return w;
  }

  ContextRule rule(RuleKind kind) {
    ContextRule r;
    r.kind = kind;
    r.left = word(2);
    r.body = word(1);
    r.body.push_back(symbol());  // body is 1..2 symbols, never empty
    r.right = word(2);
    return r;
  }

  std::mt19937& rng() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace insdel::testing

#endif

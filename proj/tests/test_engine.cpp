#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "helpers.hpp"
#include "insdel/engine.hpp"

using namespace insdel;
namespace tst = insdel::testing;

namespace {

ContextRule ins(Word u, Word a, Word v) {
  return {RuleKind::Insertion, std::move(u), std::move(a), std::move(v),
          Target::Here};
}

ContextRule del(Word u, Word a, Word v) {
  return {RuleKind::Deletion, std::move(u), std::move(a), std::move(v),
          Target::Here};
}

}  // namespace

TEST_SUITE_BEGIN("insdel-engine");

TEST_CASE("apply_insertion enumerates every decomposition") {
  CHECK(apply_insertion({"A", "B"}, ins({"A"}, {"P"}, {})) ==
        WordSet{{"A", "P", "B"}});
  CHECK(apply_insertion({"a", "b"}, ins({}, {"c"}, {})) ==
        WordSet{{"c", "a", "b"}, {"a", "c", "b"}, {"a", "b", "c"}});
  CHECK(apply_insertion({"A", "A"}, ins({"A"}, {"P"}, {})) ==
        WordSet{{"A", "P", "A"}, {"A", "A", "P"}});
  // two-sided context
  CHECK(apply_insertion({"a", "b"}, ins({"a"}, {"x"}, {"b"})) ==
        WordSet{{"a", "x", "b"}});
  CHECK(apply_insertion({"b", "a"}, ins({"a"}, {"x"}, {"b"})).empty());
}

TEST_CASE("apply_deletion enumerates every decomposition") {
  CHECK(apply_deletion({"A", "P1", "P2", "B"}, del({}, {"P2", "B"}, {})) ==
        WordSet{{"A", "P1"}});
  CHECK(apply_deletion({"a", "b"}, del({}, {"c"}, {})).empty());
  // both occurrences collapse to the same word under set semantics
  CHECK(apply_deletion({"a", "a", "a"}, del({"a"}, {"a"}, {})) ==
        WordSet{{"a", "a"}});
  // deleting more symbols than present
  CHECK(apply_deletion({"a"}, del({}, {"a", "a"}, {})).empty());
}

TEST_CASE("apply_rule dispatches on kind") {
  CHECK(apply_rule({"A"}, ins({}, {"B"}, {})) ==
        WordSet{{"B", "A"}, {"A", "B"}});
  CHECK(apply_rule({"A", "B"}, del({}, {"B"}, {})) == WordSet{{"A"}});
}

TEST_CASE("check_bounds rejects B < L") {
  Bounds b = tst::bounds(6, 5, 10);
  CHECK_THROWS_AS(check_bounds(b), std::invalid_argument);
  b.max_intermediate_len = 6;
  CHECK_NOTHROW(check_bounds(b));
}

TEST_CASE("derive_closure on rule-free and simple systems") {
  InsDelSystem sys;
  sys.alphabet = {"a", "b"};
  sys.terminals = {"a", "b"};
  sys.axioms = {{"a", "b"}};
  auto res = derive_closure(sys, tst::bounds(6, 12, 10));
  CHECK(res.language == WordSet{{"a", "b"}});
  CHECK(res.exhausted);
}

TEST_CASE("a never-deleted nonterminal keeps the language empty") {
  InsDelSystem sys;
  sys.alphabet = {"S", "s"};
  sys.terminals = {"s"};
  sys.axioms = {{"S"}};
  sys.insertions = {ins({"S"}, {"s"}, {})};
  auto res = derive_closure(sys, tst::bounds(4, 8, 50));
  CHECK(res.language.empty());
  // growth saturates the intermediate bound, so the slice is only a lower
  // bound and the closure honestly reports that
  CHECK_FALSE(res.exhausted);
}

TEST_CASE("single deletion reaches the empty word") {
  InsDelSystem sys;
  sys.alphabet = {"X"};
  sys.terminals = {};
  sys.axioms = {{"X"}};
  sys.deletions = {del({}, {"X"}, {})};
  auto res = derive_closure(sys, tst::bounds(2, 4, 10));
  CHECK(res.language == WordSet{{}});
  CHECK(res.exhausted);
}

TEST_CASE("validate_insdel reports structural findings") {
  InsDelSystem sys;
  sys.alphabet = {"a"};
  sys.terminals = {"a"};
  sys.axioms = {{"a"}};
  CHECK(validate_insdel(sys).empty());

  sys.terminals.insert("z");  // T not a subset of V
  CHECK_FALSE(validate_insdel(sys).empty());

  InsDelSystem bad_kind;
  bad_kind.alphabet = {"a"};
  bad_kind.insertions = {del({}, {"a"}, {})};  // deletion among insertions
  CHECK_FALSE(validate_insdel(bad_kind).empty());

  InsDelSystem empty_body;
  empty_body.alphabet = {"a"};
  empty_body.deletions = {del({}, {}, {})};
  CHECK_FALSE(validate_insdel(empty_body).empty());
}

TEST_CASE("insertion and deletion are mutually inverse" *
          doctest::description("property: y in ins(x,r) iff x in del(y,r), "
                               "4000 random cases")) {
  tst::Gen gen(1);
  for (int k = 0; k < 4000; ++k) {
    const Word x = gen.word(5);
    ContextRule r = gen.rule(RuleKind::Insertion);
    for (const Word& y : apply_insertion(x, r)) {
      CHECK(y.size() == x.size() + r.body.size());
      r.kind = RuleKind::Deletion;
      CHECK(apply_deletion(y, r).contains(x));
      r.kind = RuleKind::Insertion;
    }
    r.kind = RuleKind::Deletion;
    for (const Word& y : apply_deletion(x, r)) {
      CHECK(y.size() == x.size() - r.body.size());
      r.kind = RuleKind::Insertion;
      CHECK(apply_insertion(y, r).contains(x));
      r.kind = RuleKind::Deletion;
    }
  }
}

TEST_CASE("context-free single-symbol insertion has at most k+1 positions" *
          doctest::description("2000 random cases")) {
  tst::Gen gen(2);
  for (int k = 0; k < 2000; ++k) {
    const Word x = gen.word(6);
    const Symbol s = gen.symbol();
    const WordSet results = apply_insertion(x, ins({}, {s}, {}));
    CHECK(results.size() <= x.size() + 1);
    if (std::find(x.begin(), x.end(), s) == x.end()) {
      CHECK(results.size() == x.size() + 1);
    }
  }
}

TEST_CASE("derive_closure is monotone in bounds" *
          doctest::description("random small systems; raising L, B or S "
                               "never removes words")) {
  tst::Gen gen(3);
  for (int k = 0; k < 60; ++k) {
    InsDelSystem sys;
    sys.alphabet = {"a", "b", "A"};
    sys.terminals = {"a", "b"};
    sys.axioms = {gen.word(3)};
    for (int i = 0; i < 2; ++i) {
      sys.insertions.push_back(gen.rule(RuleKind::Insertion));
      sys.deletions.push_back(gen.rule(RuleKind::Deletion));
    }
    const auto small = derive_closure(sys, tst::bounds(2, 3, 4));
    const Bounds wider[] = {tst::bounds(3, 3, 4), tst::bounds(2, 5, 4),
                            tst::bounds(2, 3, 8), tst::bounds(4, 8, 12)};
    for (const Bounds& b : wider) {
      const auto big = derive_closure(sys, b);
      CHECK(std::includes(big.language.begin(), big.language.end(),
                          small.language.begin(), small.language.end()));
    }
  }
}

TEST_SUITE_END();

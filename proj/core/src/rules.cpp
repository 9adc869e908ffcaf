#include "insdel/rules.hpp"

#include <algorithm>

namespace insdel {

std::string rule_text(const ContextRule& r) {
  std::string out = r.kind == RuleKind::Insertion ? "ins" : "del";
  out += " (" + word_text(r.left) + " | " + word_text(r.body) + " | " +
         word_text(r.right) + ") -> ";
  switch (r.target) {
    case Target::Here: out += "here"; break;
    case Target::In: out += "in"; break;
    case Target::Out: out += "out"; break;
  }
  return out;
}

SizeVector size_of_rules(const std::vector<ContextRule>& insertions,
                         const std::vector<ContextRule>& deletions) {
  SizeVector sv;
  for (const ContextRule& r : insertions) {
    sv.ins_body = std::max(sv.ins_body, r.body.size());
    sv.ins_left = std::max(sv.ins_left, r.left.size());
    sv.ins_right = std::max(sv.ins_right, r.right.size());
  }
  for (const ContextRule& r : deletions) {
    sv.del_body = std::max(sv.del_body, r.body.size());
    sv.del_left = std::max(sv.del_left, r.left.size());
    sv.del_right = std::max(sv.del_right, r.right.size());
  }
  return sv;
}

std::size_t total_weight(const SizeVector& sv) {
  return sv.ins_body + sv.ins_left + sv.ins_right + sv.del_body +
         sv.del_left + sv.del_right;
}

bool check_minimality(const SizeVector& sv) {
  return sv.ins_body + sv.ins_left + sv.ins_right >= 2 &&
         sv.del_body + sv.del_left + sv.del_right >= 2;
}

bool componentwise_leq(const SizeVector& a, const SizeVector& b) {
  return a.ins_body <= b.ins_body && a.ins_left <= b.ins_left &&
         a.ins_right <= b.ins_right && a.del_body <= b.del_body &&
         a.del_left <= b.del_left && a.del_right <= b.del_right;
}

std::string size_text(const SizeVector& sv) {
  return "(" + std::to_string(sv.ins_body) + "," + std::to_string(sv.ins_left) +
         "," + std::to_string(sv.ins_right) + ";" +
         std::to_string(sv.del_body) + "," + std::to_string(sv.del_left) +
         "," + std::to_string(sv.del_right) + ")";
}

}  // namespace insdel

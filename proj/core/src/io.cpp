#include "insdel/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace insdel {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool is_comment_or_blank(const std::string& line) {
  const std::string t = trim(line);
  return t.empty() || t.front() == '#';
}

std::vector<std::string> split_tokens(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

Word parse_word_tokens(const std::string& text, int line) {
  Word w;
  for (const std::string& tok : split_tokens(text)) {
    if (tok == kEpsilonText) {
      if (!w.empty() || split_tokens(text).size() != 1) {
        throw ParseError(line, "'eps' must stand alone");
      }
      return {};
    }
    if (!valid_symbol(tok)) {
      throw ParseError(line, "invalid symbol '" + tok + "'");
    }
    w.push_back(tok);
  }
  return w;
}

SymbolSet parse_symbol_set(const std::string& text, int line) {
  SymbolSet out;
  for (const std::string& tok : split_tokens(text)) {
    if (!valid_symbol(tok)) {
      throw ParseError(line, "invalid symbol '" + tok + "'");
    }
    out.insert(tok);
  }
  return out;
}

std::string joined(const SymbolSet& set) {
  std::string out;
  for (const Symbol& s : set) {
    if (!out.empty()) out += ' ';
    out += s;
  }
  return out;
}

}  // namespace

ParseError::ParseError(int line_no, const std::string& what)
    : std::runtime_error(line_no > 0
                             ? "line " + std::to_string(line_no) + ": " + what
                             : what),
      line(line_no) {}

Grammar parse_grammar(std::istream& in) {
  Grammar g;
  bool saw_nonterminals = false, saw_terminals = false, saw_start = false;
  std::string line;
  int line_no = 0;
  int next_index = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment_or_blank(line)) continue;
    const std::string t = trim(line);
    if (t.rfind("nonterminals:", 0) == 0) {
      g.nonterminals = parse_symbol_set(t.substr(13), line_no);
      saw_nonterminals = true;
    } else if (t.rfind("terminals:", 0) == 0) {
      g.terminals = parse_symbol_set(t.substr(10), line_no);
      saw_terminals = true;
    } else if (t.rfind("start:", 0) == 0) {
      const auto toks = split_tokens(t.substr(6));
      if (toks.size() != 1) {
        throw ParseError(line_no, "start expects exactly one symbol");
      }
      g.start = toks[0];
      saw_start = true;
    } else {
      const auto arrow = t.find("->");
      if (arrow == std::string::npos) {
        throw ParseError(line_no, "expected a production 'lhs -> rhs'");
      }
      Production p;
      p.index = next_index++;
      p.lhs = parse_word_tokens(t.substr(0, arrow), line_no);
      p.rhs = parse_word_tokens(t.substr(arrow + 2), line_no);
      if (p.lhs.empty()) {
        throw ParseError(line_no, "production lhs must be nonempty");
      }
      g.productions.push_back(std::move(p));
    }
  }
  if (!saw_nonterminals || !saw_terminals || !saw_start) {
    throw ParseError(0,
                     "grammar needs 'nonterminals:', 'terminals:' and "
                     "'start:' lines");
  }
  return g;
}

Grammar parse_grammar_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  return parse_grammar(in);
}

std::string print_grammar(const Grammar& g) {
  std::string out;
  out += "nonterminals: " + joined(g.nonterminals) + "\n";
  out += "terminals: " + joined(g.terminals) + "\n";
  out += "start: " + g.start + "\n";
  for (const Production& p : g.productions) {
    out += word_text(p.lhs) + " -> " + word_text(p.rhs) + "\n";
  }
  return out;
}

MembraneTree parse_membrane_word(const std::string& text) {
  // tree := '[' id tree* ']', ids assigned by the file must be 1..k.
  struct Node {
    int id;
    int parent;
  };
  std::vector<Node> nodes;
  std::vector<int> stack;  // open region ids
  std::size_t pos = 0;
  const std::string t = trim(text);
  while (pos < t.size()) {
    const char c = t[pos];
    if (c == '[') {
      ++pos;
      std::size_t end = pos;
      while (end < t.size() && std::isdigit(static_cast<unsigned char>(t[end])))
        ++end;
      if (end == pos) throw ParseError(0, "membrane id expected after '['");
      const int id = std::stoi(t.substr(pos, end - pos));
      nodes.push_back({id, stack.empty() ? 0 : stack.back()});
      stack.push_back(id);
      pos = end;
    } else if (c == ']') {
      if (stack.empty()) throw ParseError(0, "unbalanced ']' in membranes");
      stack.pop_back();
      ++pos;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
    } else {
      throw ParseError(0, std::string("unexpected character '") + c +
                              "' in membranes");
    }
  }
  if (!stack.empty()) throw ParseError(0, "unbalanced '[' in membranes");
  std::vector<int> parent(nodes.size(), -1);
  for (const Node& n : nodes) {
    if (n.id < 1 || n.id > static_cast<int>(nodes.size()) ||
        parent[n.id - 1] != -1) {
      throw ParseError(0, "membrane ids must be 1..k and unique");
    }
    parent[n.id - 1] = n.parent;
  }
  return MembraneTree(std::move(parent));
}

PSystemDef parse_system(std::istream& in) {
  PSystemDef sys;
  bool saw_alphabet = false, saw_terminals = false, saw_membranes = false;
  std::string line;
  int line_no = 0;

  auto parse_region = [&](const std::string& text) {
    const auto toks = split_tokens(text);
    if (toks.size() != 1) throw ParseError(line_no, "expected a region id");
    try {
      return std::stoi(toks[0]);
    } catch (const std::exception&) {
      throw ParseError(line_no, "bad region id '" + toks[0] + "'");
    }
  };

  struct PendingAxiom {
    int region;
    Word word;
    int line;
  };
  struct PendingRule {
    int region;
    ContextRule rule;
    int line;
  };
  std::vector<PendingAxiom> axioms;
  std::vector<PendingRule> rules;

  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment_or_blank(line)) continue;
    const std::string t = trim(line);
    if (t.rfind("alphabet:", 0) == 0) {
      sys.alphabet = parse_symbol_set(t.substr(9), line_no);
      saw_alphabet = true;
    } else if (t.rfind("terminals:", 0) == 0) {
      sys.terminals = parse_symbol_set(t.substr(10), line_no);
      saw_terminals = true;
    } else if (t.rfind("membranes:", 0) == 0) {
      try {
        sys.tree = parse_membrane_word(t.substr(10));
      } catch (const ParseError& e) {
        throw ParseError(line_no, e.what());
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
      }
      saw_membranes = true;
    } else if (t.rfind("axiom", 0) == 0) {
      const auto colon = t.find(':');
      if (colon == std::string::npos) {
        throw ParseError(line_no, "expected 'axiom <region>: <word>'");
      }
      axioms.push_back({parse_region(t.substr(5, colon - 5)),
                        parse_word_tokens(t.substr(colon + 1), line_no),
                        line_no});
    } else if (t.rfind("rule", 0) == 0) {
      const auto colon = t.find(':');
      if (colon == std::string::npos) {
        throw ParseError(line_no, "expected 'rule <region>: ...'");
      }
      const int region = parse_region(t.substr(4, colon - 4));
      std::string rest = trim(t.substr(colon + 1));

      ContextRule r;
      if (rest.rfind("ins", 0) == 0) {
        r.kind = RuleKind::Insertion;
      } else if (rest.rfind("del", 0) == 0) {
        r.kind = RuleKind::Deletion;
      } else {
        throw ParseError(line_no, "rule kind must be 'ins' or 'del'");
      }
      const auto open = rest.find('(');
      const auto close = rest.find(')');
      if (open == std::string::npos || close == std::string::npos ||
          close < open) {
        throw ParseError(line_no, "expected '(u | alpha | v)'");
      }
      const std::string triple = rest.substr(open + 1, close - open - 1);
      const auto bar1 = triple.find('|');
      const auto bar2 = triple.rfind('|');
      if (bar1 == std::string::npos || bar2 == bar1) {
        throw ParseError(line_no, "expected '(u | alpha | v)'");
      }
      r.left = parse_word_tokens(triple.substr(0, bar1), line_no);
      r.body = parse_word_tokens(triple.substr(bar1 + 1, bar2 - bar1 - 1),
                                 line_no);
      r.right = parse_word_tokens(triple.substr(bar2 + 1), line_no);
      if (r.body.empty()) {
        throw ParseError(line_no, "rule body must be nonempty");
      }
      const auto arrow = rest.find("->", close);
      if (arrow == std::string::npos) {
        throw ParseError(line_no, "expected '-> here|in|out'");
      }
      const std::string tar = trim(rest.substr(arrow + 2));
      if (tar == "here") {
        r.target = Target::Here;
      } else if (tar == "in") {
        r.target = Target::In;
      } else if (tar == "out") {
        r.target = Target::Out;
      } else {
        throw ParseError(line_no, "unknown target '" + tar + "'");
      }
      rules.push_back({region, std::move(r), line_no});
    } else {
      throw ParseError(line_no, "unrecognized line: " + t);
    }
  }

  if (!saw_alphabet || !saw_terminals || !saw_membranes) {
    throw ParseError(0,
                     "system needs 'alphabet:', 'terminals:' and "
                     "'membranes:' lines");
  }
  for (int region = 1; region <= sys.tree.size(); ++region) {
    sys.axioms[region] = {};
    sys.rules[region] = {};
  }
  for (PendingAxiom& a : axioms) {
    if (!sys.tree.contains(a.region)) {
      throw ParseError(a.line, "unknown region " + std::to_string(a.region));
    }
    sys.axioms[a.region].insert(std::move(a.word));
  }
  for (PendingRule& r : rules) {
    if (!sys.tree.contains(r.region)) {
      throw ParseError(r.line, "unknown region " + std::to_string(r.region));
    }
    sys.rules[r.region].push_back(std::move(r.rule));
  }
  return sys;
}

PSystemDef parse_system_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  return parse_system(in);
}

std::string print_system(const PSystemDef& sys) {
  std::string out;
  out += "alphabet: " + joined(sys.alphabet) + "\n";
  out += "terminals: " + joined(sys.terminals) + "\n";
  out += "membranes: " + sys.tree.to_text() + "\n";
  for (const auto& [region, words] : sys.axioms) {
    for (const Word& w : words) {
      out += "axiom " + std::to_string(region) + ": " + word_text(w) + "\n";
    }
  }
  for (const auto& [region, rules] : sys.rules) {
    for (const ContextRule& r : rules) {
      out += "rule " + std::to_string(region) + ": " + rule_text(r) + "\n";
    }
  }
  return out;
}

}  // namespace insdel

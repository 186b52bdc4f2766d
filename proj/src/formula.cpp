// Copyright 2026 The qclsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qclsim/formula.hpp"

#include <cctype>

#include "qclsim/errors.hpp"

namespace qclsim {

namespace {

const FormulaPtr& require(const FormulaPtr& child) {
  if (!child) throw InvariantError("malformed formula tree: missing operand");
  return child;
}

}  // namespace

FormulaPtr atom(std::string name) {
  if (name.empty()) throw InvariantError("malformed formula tree: atom without a name");
  return std::make_shared<const Formula>(Formula{AtomNode{std::move(name)}});
}
FormulaPtr negation(FormulaPtr child) {
  return std::make_shared<const Formula>(Formula{NotNode{require(child)}});
}
FormulaPtr conjunction(FormulaPtr left, FormulaPtr right) {
  return std::make_shared<const Formula>(Formula{AndNode{require(left), require(right)}});
}
FormulaPtr disjunction(FormulaPtr left, FormulaPtr right) {
  return std::make_shared<const Formula>(Formula{OrNode{require(left), require(right)}});
}
FormulaPtr gate_application(std::string gate, FormulaPtr child) {
  return std::make_shared<const Formula>(Formula{GateNode{std::move(gate), require(child)}});
}

namespace {

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class FormulaParser {
 public:
  FormulaParser(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  FormulaPtr parse() {
    skip_space();
    if (at_end()) fail("empty formula");
    FormulaPtr f = parse_or();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return f;
  }

 private:
  FormulaPtr parse_or() {
    FormulaPtr left = parse_and();
    while (consume('|')) left = disjunction(left, parse_and());
    return left;
  }

  FormulaPtr parse_and() {
    FormulaPtr left = parse_unary();
    while (consume('&')) left = conjunction(left, parse_unary());
    return left;
  }

  FormulaPtr parse_unary() {
    skip_space();
    if (at_end()) fail("expected an operand");
    if (consume('!')) return negation(parse_unary());
    if (consume('(')) {
      FormulaPtr inner = parse_or();
      expect(')');
      return inner;
    }
    if (!is_ident_start(text_[pos_])) {
      fail(std::string("unexpected '") + text_[pos_] + "'");
    }
    std::string name = identifier();
    if (consume('(')) {
      FormulaPtr inner = parse_or();
      expect(')');
      return gate_application(std::move(name), std::move(inner));
    }
    return atom(std::move(name));
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (!at_end() && is_ident_char(text_[pos_])) advance();
    return std::string(text_.substr(start, pos_ - start));
  }

  bool consume(char c) {
    skip_space();
    if (!at_end() && text_[pos_] == c) {
      advance();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, line_, column_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t column_ = 1;
};

}  // namespace

FormulaPtr parse_formula(std::string_view text, std::size_t line) {
  return FormulaParser(text, line).parse();
}

std::string to_string(const Formula& f) {
  struct Printer {
    std::string operator()(const AtomNode& n) const { return n.name; }
    std::string operator()(const NotNode& n) const { return "!" + to_string(*n.child); }
    std::string operator()(const AndNode& n) const {
      return "(" + to_string(*n.left) + " & " + to_string(*n.right) + ")";
    }
    std::string operator()(const OrNode& n) const {
      return "(" + to_string(*n.left) + " | " + to_string(*n.right) + ")";
    }
    std::string operator()(const GateNode& n) const {
      return n.gate + "(" + to_string(*n.child) + ")";
    }
  };
  return std::visit(Printer{}, f.node);
}

std::set<std::string> atom_names(const Formula& f) {
  std::set<std::string> out;
  auto collect = [&out](auto&& self, const Formula& g) -> void {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, AtomNode>) {
            out.insert(n.name);
          } else if constexpr (std::is_same_v<T, AndNode> || std::is_same_v<T, OrNode>) {
            self(self, *n.left);
            self(self, *n.right);
          } else {
            self(self, *n.child);
          }
        },
        g.node);
  };
  collect(collect, f);
  return out;
}

bool structurally_equal(const Formula& a, const Formula& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&b](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, AtomNode>) {
          return x.name == y.name;
        } else if constexpr (std::is_same_v<T, AndNode> || std::is_same_v<T, OrNode>) {
          return structurally_equal(*x.left, *y.left) &&
                 structurally_equal(*x.right, *y.right);
        } else if constexpr (std::is_same_v<T, GateNode>) {
          return x.gate == y.gate && structurally_equal(*x.child, *y.child);
        } else {
          return structurally_equal(*x.child, *y.child);
        }
      },
      a.node);
}

}  // namespace qclsim

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

#ifndef QCLSIM_FORMULA_HPP_
#define QCLSIM_FORMULA_HPP_

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <variant>

namespace qclsim {

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct AtomNode {
  std::string name;
};
struct NotNode {
  FormulaPtr child;
};
struct AndNode {
  FormulaPtr left, right;
};
struct OrNode {
  FormulaPtr left, right;
};
// Applies a one-qubit gate (h, sqrtnot, ...) to the truth qubit of the
// child's state. No truth-functional law is attached to these.
struct GateNode {
  std::string gate;
  FormulaPtr child;
};

struct Formula {
  std::variant<AtomNode, NotNode, AndNode, OrNode, GateNode> node;
};

FormulaPtr atom(std::string name);
FormulaPtr negation(FormulaPtr child);
FormulaPtr conjunction(FormulaPtr left, FormulaPtr right);
FormulaPtr disjunction(FormulaPtr left, FormulaPtr right);
FormulaPtr gate_application(std::string gate, FormulaPtr child);

// Grammar (precedence ! > & > |, both binary operators left-associative):
//   or    := and ('|' and)*
//   and   := unary ('&' unary)*
//   unary := '!' unary | ident '(' or ')' | '(' or ')' | ident
// `ident '(' ... ')'` names a one-qubit gate such as h or sqrtnot.
// Errors are reported as ParseError with `line` as the line number the
// text starts on and a 1-based column.
FormulaPtr parse_formula(std::string_view text, std::size_t line = 1);

// Fully parenthesized rendering; parse_formula(to_string(f)) rebuilds f.
std::string to_string(const Formula& f);

std::set<std::string> atom_names(const Formula& f);

bool structurally_equal(const Formula& a, const Formula& b);

}  // namespace qclsim

#endif  // QCLSIM_FORMULA_HPP_

// Copyright 2026 The morphfst Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MORPHFST_RULE_AST_H_
#define MORPHFST_RULE_AST_H_

#include <string>
#include <utility>
#include <vector>

namespace morphfst {

enum class RuleKind {
  kLiteral,    // symbol              a     -> a:a
  kPair,       // symbol : symbol     a:b
  kConcat,     // children in order
  kUnion,      // children alternatives
  kStar,       // children[0]*
  kPlus,       // children[0]+
  kOptional,   // children[0]?
  kCompose,    // children[0] || children[1]
  kCharClass,  // [abc]
  kVarRef,     // $name$
  kInclude,    // #include "path"
};

// One node of a parsed rule expression.
//
//   kLiteral    text = symbol
//   kPair       text = input symbol, output = output symbol ("<>" = epsilon)
//   kCharClass  chars = sorted distinct single-scalar symbols
//   kVarRef     text = variable name (without '$')
//   kInclude    text = path as written
struct RuleAst {
  RuleKind kind = RuleKind::kLiteral;
  std::string text;
  std::string output;
  std::vector<std::string> chars;
  std::vector<RuleAst> children;

  bool operator==(const RuleAst&) const = default;

  static RuleAst Literal(std::string symbol) {
    RuleAst n;
    n.kind = RuleKind::kLiteral;
    n.text = std::move(symbol);
    return n;
  }
  static RuleAst Pair(std::string in, std::string out) {
    RuleAst n;
    n.kind = RuleKind::kPair;
    n.text = std::move(in);
    n.output = std::move(out);
    return n;
  }
  static RuleAst Node(RuleKind kind, std::vector<RuleAst> children) {
    RuleAst n;
    n.kind = kind;
    n.children = std::move(children);
    return n;
  }
  static RuleAst VarRef(std::string name) {
    RuleAst n;
    n.kind = RuleKind::kVarRef;
    n.text = std::move(name);
    return n;
  }
};

struct RuleDefinition {
  std::string name;
  RuleAst body;
  bool operator==(const RuleDefinition&) const = default;
};

struct RuleFile {
  std::vector<RuleDefinition> definitions;
  RuleAst result;
  bool operator==(const RuleFile&) const = default;
};

}  // namespace morphfst

#endif  // MORPHFST_RULE_AST_H_

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

// Parser for .mrl rule files.
//
//   file     = { def | expr-stmt }
//   def      = $name$ "=" expr [";"] (newline | end)
//   expr     = alt { "||" alt }                 composition, lowest precedence
//   alt      = seq { "|" seq }
//   seq      = postfix { postfix }              juxtaposition concatenates
//   postfix  = atom { "*" | "+" | "?" }
//   atom     = sym [ ":" sym ] | "[" chars "]" | "(" expr ")" | $name$
//            | #include "path"
//   sym      = one scalar | <Tag> | <> | \x (escaped scalar)
//
// '%' starts a comment running to the end of the line. A newline ends a
// statement unless it occurs inside parentheses or right after a binary
// operator. Character classes accept ranges ("क-ह"). The last expression
// statement is the result.

#ifndef MORPHFST_RULE_PARSER_H_
#define MORPHFST_RULE_PARSER_H_

#include <string>
#include <string_view>

#include "morphfst/rule_ast.h"

namespace morphfst {

// Normalizes `text` to NFC and parses it. Throws SyntaxError,
// UndefinedVariable or EmptyFile.
RuleFile ParseRules(std::string_view text);

// Pretty-prints a rule file in a form ParseRules reads back to the same AST.
std::string RenderRules(const RuleFile& file);
std::string RenderExpression(const RuleAst& node);

}  // namespace morphfst

#endif  // MORPHFST_RULE_PARSER_H_

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

#ifndef MORPHFST_SYMBOL_TABLE_H_
#define MORPHFST_SYMBOL_TABLE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace morphfst {

using SymbolId = std::uint32_t;

inline constexpr SymbolId kEpsilon = 0;
inline constexpr std::string_view kEpsilonSymbol = "<>";

// Interns single scalars ("a", "क") and multi-character tags ("<Noun>") into
// dense ids. Id 0 is always epsilon, written "<>".
//
// A table is append-only: ids never change once handed out, so transducers
// built against an earlier size stay valid while a compiler keeps interning.
// Interning is single-owner; concurrent readers are fine once growth stops.
class SymbolTable {
 public:
  SymbolTable();

  // Returns the id for `symbol`, adding it if new. "<>" maps to kEpsilon.
  // Throws Error if `symbol` is neither one scalar nor a "<Name>" tag.
  SymbolId Intern(std::string_view symbol);

  std::optional<SymbolId> Find(std::string_view symbol) const;

  // Throws std::out_of_range for ids >= size().
  const std::string& Symbol(SymbolId id) const { return entries_.at(id); }

  std::size_t size() const { return entries_.size(); }
  std::span<const std::string> entries() const { return entries_; }

  bool operator==(const SymbolTable& other) const {
    return entries_ == other.entries_;
  }

 private:
  std::vector<std::string> entries_;
  std::unordered_map<std::string, SymbolId> index_;
};

// True for "<Name>" spans, including the epsilon spelling "<>".
bool IsTagSymbol(std::string_view symbol);

// Greedy left-to-right scan: each "<...>" span is one symbol, every other
// scalar is one symbol. Throws UnterminatedTag for a '<' without '>'.
std::vector<std::string> SplitLexicalString(std::string_view text);

// Tokenizes and interns, growing `table` as needed. "<>" spans are dropped
// (they denote the empty string).
std::vector<SymbolId> InternLexicalString(std::string_view text,
                                          SymbolTable* table);

// Tokenizes against a fixed table; throws UnknownSymbol on a miss.
std::vector<SymbolId> LookupLexicalString(std::string_view text,
                                          const SymbolTable& table);

// Concatenates the symbol strings; epsilon renders as nothing.
std::string RenderSymbols(std::span<const SymbolId> ids,
                          const SymbolTable& table);

}  // namespace morphfst

#endif  // MORPHFST_SYMBOL_TABLE_H_

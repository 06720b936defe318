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

#include "morphfst/symbol_table.h"

#include "morphfst/errors.h"
#include "morphfst/unicode.h"

namespace morphfst {

SymbolTable::SymbolTable() {
  entries_.emplace_back(kEpsilonSymbol);
  index_.emplace(std::string(kEpsilonSymbol), kEpsilon);
}

SymbolId SymbolTable::Intern(std::string_view symbol) {
  if (auto found = Find(symbol)) return *found;
  if (!IsTagSymbol(symbol) && ScalarLength(symbol) != 1) {
    throw Error("not a valid symbol: '" + std::string(symbol) + "'");
  }
  const auto id = static_cast<SymbolId>(entries_.size());
  entries_.emplace_back(symbol);
  index_.emplace(std::string(symbol), id);
  return id;
}

std::optional<SymbolId> SymbolTable::Find(std::string_view symbol) const {
  auto it = index_.find(std::string(symbol));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool IsTagSymbol(std::string_view symbol) {
  if (symbol.size() < 2 || symbol.front() != '<' || symbol.back() != '>') {
    return false;
  }
  // Exactly one closing bracket, at the end.
  return symbol.find('>') == symbol.size() - 1;
}

std::vector<std::string> SplitLexicalString(std::string_view text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == '<') {
      const std::size_t close = text.find('>', pos + 1);
      if (close == std::string_view::npos) {
        throw UnterminatedTag(std::string(text));
      }
      out.emplace_back(text.substr(pos, close - pos + 1));
      pos = close + 1;
      continue;
    }
    // One scalar. Lead byte determines the length; validity was checked by
    // the caller's normalization or is checked by ValidateUtf8 below.
    const auto lead = static_cast<unsigned char>(text[pos]);
    std::size_t len = 1;
    if (lead >= 0xF0) {
      len = 4;
    } else if (lead >= 0xE0) {
      len = 3;
    } else if (lead >= 0xC0) {
      len = 2;
    }
    const std::string_view piece = text.substr(pos, len);
    ValidateUtf8(piece);
    if (piece.size() != len) throw InvalidUtf8(pos);
    out.emplace_back(piece);
    pos += len;
  }
  return out;
}

std::vector<SymbolId> InternLexicalString(std::string_view text,
                                          SymbolTable* table) {
  std::vector<SymbolId> ids;
  for (const std::string& piece : SplitLexicalString(text)) {
    const SymbolId id = table->Intern(piece);
    if (id != kEpsilon) ids.push_back(id);
  }
  return ids;
}

std::vector<SymbolId> LookupLexicalString(std::string_view text,
                                          const SymbolTable& table) {
  std::vector<SymbolId> ids;
  for (const std::string& piece : SplitLexicalString(text)) {
    auto id = table.Find(piece);
    if (!id) throw UnknownSymbol(piece);
    if (*id != kEpsilon) ids.push_back(*id);
  }
  return ids;
}

std::string RenderSymbols(std::span<const SymbolId> ids,
                          const SymbolTable& table) {
  std::string out;
  for (SymbolId id : ids) {
    if (id != kEpsilon) out += table.Symbol(id);
  }
  return out;
}

}  // namespace morphfst

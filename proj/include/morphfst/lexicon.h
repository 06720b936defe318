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

// Lexicon generation and classified root-word lexicons.
//
// A raw corpus goes through ExtractUniqueSorted to give the word list that
// annotators classify. Classified files hold one root per line, optionally
// followed by a TAB and a continuation class that grammars dispatch on:
//
//   % nouns
//   लडका	NA
//   कहानी	NIM

#ifndef MORPHFST_LEXICON_H_
#define MORPHFST_LEXICON_H_

#include <array>
#include <filesystem>
#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "morphfst/symbol_table.h"
#include "morphfst/transducer.h"

namespace morphfst {

enum class PosClass {
  kNoun,
  kPronoun,
  kAdjective,
  kVerb,
  kAdverb,
  kParticle,
  kAdjectiveNoun,  // words listed as both adjective and noun
};

inline constexpr std::array<PosClass, 7> kAllPosClasses = {
    PosClass::kNoun,   PosClass::kPronoun,  PosClass::kAdjective,
    PosClass::kVerb,   PosClass::kAdverb,   PosClass::kParticle,
    PosClass::kAdjectiveNoun};

// "nouns", "pronouns", ..., "adj_noun": the file stem under lex/.
std::string_view PosClassFileStem(PosClass pos);
std::string_view PosClassName(PosClass pos);  // "Noun", "Pronoun", ...
std::optional<PosClass> PosClassFromFileStem(std::string_view stem);

struct LexiconEntry {
  std::string root;  // NFC, non-empty
  PosClass pos_class = PosClass::kNoun;
  std::optional<std::string> infl_class;

  bool operator==(const LexiconEntry&) const = default;
};

struct LexiconStats {
  std::map<PosClass, std::size_t> per_class;
  // Distinct roots over all classes; a root listed in two files counts once.
  std::size_t total = 0;
};

// ---- lexicon generator ----

// Splits on whitespace and on । ? ! , " ' ( ), normalizes to NFC, and
// returns the distinct words in Unicode scalar order. Throws InvalidUtf8
// with the byte offset into `corpus`.
std::vector<std::string> ExtractUniqueSorted(std::string_view corpus);
std::vector<std::string> ExtractUniqueSorted(std::istream& corpus);

// Same result as ExtractUniqueSorted, computed over `shards` slices of the
// corpus in parallel and merged.
std::vector<std::string> ExtractUniqueSortedParallel(std::string_view corpus,
                                                     std::size_t shards);

// Merges sorted, deduplicated word lists.
std::vector<std::string> MergeUniqueSorted(
    const std::vector<std::vector<std::string>>& lists);

// ---- classified lexicons ----

// Parses one classified file. Throws DuplicateRoot or InvalidUtf8.
std::vector<LexiconEntry> ParseLexicon(std::string_view text, PosClass pos);
std::vector<LexiconEntry> ReadLexiconFile(const std::filesystem::path& path,
                                          PosClass pos);

struct ClassifiedLexicon {
  std::vector<LexiconEntry> entries;
  LexiconStats stats;
};

ClassifiedLexicon LoadClassified(
    const std::map<PosClass, std::filesystem::path>& path_per_class);

// Loads whichever of the standard lex/<stem>.txt files exist in `dir`.
ClassifiedLexicon LoadClassifiedDirectory(const std::filesystem::path& dir);

LexiconStats ComputeStats(const std::vector<LexiconEntry>& entries);

// Acceptor over the roots, each optionally followed by the tag symbol
// "<infl_class>". Determinized and minimized.
Transducer CompileLexiconFst(const std::vector<LexiconEntry>& entries,
                             const std::shared_ptr<SymbolTable>& symbols);

}  // namespace morphfst

#endif  // MORPHFST_LEXICON_H_

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

// Analyzer and generator over a compiled grammar.
//
// The grammar is written in the generation direction (lexical -> surface);
// the analyzer applies its inversion. Indeclinable words bypass the
// grammar: a word listed in the indeclinable dictionary is analyzed only
// from the dictionary.

#ifndef MORPHFST_MORPH_H_
#define MORPHFST_MORPH_H_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "morphfst/analysis.h"
#include "morphfst/transducer.h"

namespace morphfst {

// NFC word -> analyses, in file order with duplicates removed.
using IndeclinableMap = std::map<std::string, std::vector<Analysis>>;

// One "word<TAB>analysis" record per line; repeated words accumulate.
// Blank lines are skipped. Throws MalformedAnalysis carrying the line.
IndeclinableMap ParseIndeclinables(std::string_view text);
IndeclinableMap LoadIndeclinables(const std::filesystem::path& path);

class MorphModel {
 public:
  explicit MorphModel(Transducer grammar, IndeclinableMap indeclinables = {});

  // Reads a transducer file and, optionally, an indeclinable dictionary.
  static MorphModel Load(
      const std::filesystem::path& fst_path,
      const std::optional<std::filesystem::path>& indeclinables_path =
          std::nullopt);

  const Transducer& grammar() const { return grammar_; }
  const Transducer& inverse() const { return inverse_; }
  const IndeclinableMap& indeclinables() const { return indeclinables_; }

  // Analyses of `surface`, ordered by rendered form. Empty for unknown
  // words, including words with symbols the grammar has never seen.
  std::vector<Analysis> Analyze(std::string_view surface) const;

  // Surface forms of `lexical` (a rendered Analysis), sorted. An indeclinable
  // word is produced from its dictionary analyses; since the dictionary
  // shadows the grammar for that word, grammar outputs equal to an
  // indeclinable word are left out. Throws MalformedAnalysis.
  std::vector<std::string> Generate(std::string_view lexical) const;

 private:
  Transducer grammar_;
  Transducer inverse_;
  IndeclinableMap indeclinables_;
};

}  // namespace morphfst

#endif  // MORPHFST_MORPH_H_

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

#include "morphfst/morph.h"

#include <algorithm>
#include <set>

#include "morphfst/apply.h"
#include "morphfst/binary_io.h"
#include "morphfst/errors.h"
#include "morphfst/fst_io.h"
#include "morphfst/operations.h"
#include "morphfst/symbol_table.h"
#include "morphfst/unicode.h"

namespace morphfst {

std::string Analysis::Render() const {
  std::string out = root;
  for (const std::string& tag : tags) out += "<" + tag + ">";
  return out;
}

Analysis ParseAnalysis(std::string_view text) {
  const std::string normalized = NormalizeNfc(text);
  std::vector<std::string> symbols;
  try {
    symbols = SplitLexicalString(normalized);
  } catch (const UnterminatedTag&) {
    throw MalformedAnalysis(normalized);
  }
  Analysis analysis;
  for (const std::string& symbol : symbols) {
    if (IsTagSymbol(symbol)) {
      if (symbol.size() == 2) throw MalformedAnalysis(normalized);  // "<>"
      analysis.tags.push_back(symbol.substr(1, symbol.size() - 2));
    } else if (analysis.tags.empty()) {
      analysis.root += symbol;
    } else {
      throw MalformedAnalysis(normalized);  // text after the tags
    }
  }
  if (analysis.root.empty() || analysis.tags.empty()) {
    throw MalformedAnalysis(normalized);
  }
  return analysis;
}

IndeclinableMap ParseIndeclinables(std::string_view text) {
  ValidateUtf8(text);
  IndeclinableMap map;
  int line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '%') continue;
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos || tab == 0) {
      throw MalformedAnalysis(std::string(line), line_no);
    }
    Analysis analysis;
    try {
      analysis = ParseAnalysis(line.substr(tab + 1));
    } catch (const MalformedAnalysis&) {
      throw MalformedAnalysis(std::string(line.substr(tab + 1)), line_no);
    }
    auto& list = map[NormalizeNfc(line.substr(0, tab))];
    if (std::find(list.begin(), list.end(), analysis) == list.end()) {
      list.push_back(std::move(analysis));
    }
  }
  return map;
}

IndeclinableMap LoadIndeclinables(const std::filesystem::path& path) {
  if (!std::filesystem::is_regular_file(path)) {
    throw Error("indeclinable file not found: " + path.string());
  }
  try {
    return ParseIndeclinables(ReadFileBytes(path));
  } catch (const MalformedAnalysis& e) {
    throw MalformedAnalysis(path.string() + ": " + e.what(), e.line);
  }
}

MorphModel::MorphModel(Transducer grammar, IndeclinableMap indeclinables)
    : grammar_(std::move(grammar)),
      inverse_(Invert(grammar_)),
      indeclinables_(std::move(indeclinables)) {}

MorphModel MorphModel::Load(
    const std::filesystem::path& fst_path,
    const std::optional<std::filesystem::path>& indeclinables_path) {
  IndeclinableMap indeclinables;
  if (indeclinables_path) indeclinables = LoadIndeclinables(*indeclinables_path);
  return MorphModel(ReadTransducerFile(fst_path), std::move(indeclinables));
}

std::vector<Analysis> MorphModel::Analyze(std::string_view surface) const {
  const std::string word = NormalizeNfc(surface);
  std::vector<Analysis> out;
  if (const auto it = indeclinables_.find(word); it != indeclinables_.end()) {
    out = it->second;
  } else {
    StringPairSet pairs;
    try {
      pairs = Apply(inverse_, word);
    } catch (const UnknownSymbol&) {
      return {};
    } catch (const UnterminatedTag&) {
      return {};
    }
    for (const auto& [in, lexical] : pairs) {
      out.push_back(ParseAnalysis(lexical));
    }
  }
  std::sort(out.begin(), out.end(), [](const Analysis& a, const Analysis& b) {
    return a.Render() < b.Render();
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::string> MorphModel::Generate(std::string_view lexical) const {
  const std::string rendered = ParseAnalysis(lexical).Render();
  std::set<std::string> out;
  for (const auto& [word, analyses] : indeclinables_) {
    for (const Analysis& a : analyses) {
      if (a.Render() == rendered) out.insert(word);
    }
  }
  try {
    for (const auto& [in, surface] : Apply(grammar_, rendered)) {
      if (!indeclinables_.count(surface)) out.insert(surface);
    }
  } catch (const UnknownSymbol&) {
    // A tag or character the grammar never uses: nothing to generate.
  }
  return {out.begin(), out.end()};
}

}  // namespace morphfst

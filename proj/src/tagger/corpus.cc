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

#include "morphfst/tag_corpus.h"

#include "morphfst/binary_io.h"
#include "morphfst/errors.h"
#include "morphfst/unicode.h"

namespace morphfst {
namespace {

bool IsWhitespace(char32_t c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v' || c == 0x00A0;
}

bool IsDetached(char32_t c) {
  return c == 0x0964 || c == '?' || c == '!' || c == ',';
}

bool IsPunctScalar(char32_t c) {
  return IsDetached(c) || c == 0x0965 || c == '.' || c == ';' || c == ':';
}

std::vector<std::string_view> SplitWhitespace(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

bool IsPunctuation(std::string_view surface) {
  if (surface.empty()) return false;
  for (char32_t c : DecodeUtf8(surface)) {
    if (!IsPunctScalar(c)) return false;
  }
  return true;
}

std::vector<Token> TokenizeSentence(std::string_view text) {
  std::vector<Token> tokens;
  std::string current;
  auto flush = [&] {
    if (current.empty()) return;
    std::string surface = NormalizeNfc(current);
    const bool punct = IsPunctuation(surface);
    tokens.push_back({std::move(surface), punct});
    current.clear();
  };
  for (char32_t c : DecodeUtf8(text)) {
    if (IsWhitespace(c)) {
      flush();
    } else if (IsDetached(c)) {
      flush();
      AppendUtf8(c, &current);
      flush();
    } else {
      AppendUtf8(c, &current);
    }
  }
  flush();
  return tokens;
}

TaggedCorpus ParseTaggedCorpus(std::string_view text) {
  ValidateUtf8(text);
  TaggedCorpus corpus;
  int line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    TaggedSentence sentence;
    for (std::string_view item : SplitWhitespace(line)) {
      const auto slash = item.rfind('/');
      if (slash == std::string_view::npos || slash == 0 ||
          slash + 1 == item.size()) {
        throw FormatError("line " + std::to_string(line_no) +
                          ": expected surface/TAG, got '" + std::string(item) +
                          "'");
      }
      sentence.emplace_back(NormalizeNfc(item.substr(0, slash)),
                            std::string(item.substr(slash + 1)));
    }
    if (!sentence.empty()) corpus.push_back(std::move(sentence));
  }
  return corpus;
}

TaggedCorpus ReadTaggedCorpus(const std::filesystem::path& path) {
  if (!std::filesystem::is_regular_file(path)) {
    throw Error("corpus file not found: " + path.string());
  }
  try {
    return ParseTaggedCorpus(ReadFileBytes(path));
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

std::vector<Token> TokensOf(const TaggedSentence& sentence) {
  std::vector<Token> tokens;
  tokens.reserve(sentence.size());
  for (const auto& [surface, tag] : sentence) {
    tokens.push_back({surface, IsPunctuation(surface)});
  }
  return tokens;
}

}  // namespace morphfst

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

// Sentence tokenization and the "surface/TAG" corpus format.

#ifndef MORPHFST_TAG_CORPUS_H_
#define MORPHFST_TAG_CORPUS_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace morphfst {

struct Token {
  std::string surface;  // NFC, non-empty
  bool is_punct = false;

  bool operator==(const Token&) const = default;
};

// True for tokens made only of sentence punctuation (। ॥ ? ! , . ; :).
bool IsPunctuation(std::string_view surface);

// Splits on whitespace and detaches । ? ! and comma as tokens of their own.
// Each token is NFC-normalized.
std::vector<Token> TokenizeSentence(std::string_view text);

using TaggedWord = std::pair<std::string, std::string>;  // (surface, tag)
using TaggedSentence = std::vector<TaggedWord>;
using TaggedCorpus = std::vector<TaggedSentence>;

// One sentence per line of space-separated "surface/TAG" items, split at the
// last '/'. Blank lines are skipped; surfaces are NFC-normalized. Throws
// FormatError naming the line of a malformed item.
TaggedCorpus ParseTaggedCorpus(std::string_view text);
TaggedCorpus ReadTaggedCorpus(const std::filesystem::path& path);

std::vector<Token> TokensOf(const TaggedSentence& sentence);

}  // namespace morphfst

#endif  // MORPHFST_TAG_CORPUS_H_

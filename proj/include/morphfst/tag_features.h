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

// Contextual features of the log-linear tagger. A feature is a template id
// plus a string payload; it fires jointly with each candidate tag.

#ifndef MORPHFST_TAG_FEATURES_H_
#define MORPHFST_TAG_FEATURES_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "morphfst/tag_corpus.h"

namespace morphfst {

enum class FeatureTemplate : std::uint8_t {
  kWord = 0,
  kPrevWord,
  kNextWord,
  kPrevTag,
  kSuffix1,
  kSuffix2,
  kSuffix3,
  kSuffix4,
  kPrefix1,
  kPunct,
  kDigit,
};
inline constexpr std::size_t kNumFeatureTemplates = 11;

inline constexpr std::string_view kSentenceBegin = "<B>";  // previous word
inline constexpr std::string_view kSentenceEnd = "<E>";    // next word
inline constexpr std::string_view kStartTag = "<S>";       // previous tag

std::vector<FeatureTemplate> AllFeatureTemplates();
std::string_view FeatureTemplateName(FeatureTemplate t);  // "w", "pw", ...
std::optional<FeatureTemplate> FeatureTemplateFromId(std::uint32_t id);

using Feature = std::pair<FeatureTemplate, std::string>;

// Features of position `i`, one per enabled template, in template order.
// `prev_tag` is kStartTag at i == 0. Suffixes and the prefix count Unicode
// scalars and are the whole word when it is shorter.
std::vector<Feature> ExtractFeatures(std::span<const Token> sentence,
                                     std::size_t i, std::string_view prev_tag,
                                     std::span<const FeatureTemplate> templates);

}  // namespace morphfst

#endif  // MORPHFST_TAG_FEATURES_H_

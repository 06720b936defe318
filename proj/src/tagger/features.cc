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

#include "morphfst/tag_features.h"

#include <algorithm>
#include <array>

#include "morphfst/unicode.h"

namespace morphfst {
namespace {

constexpr std::array<std::string_view, kNumFeatureTemplates> kNames = {
    "w", "pw", "nw", "pt", "s1", "s2", "s3", "s4", "p1", "punct", "digit"};

bool IsDigit(char32_t c) {
  return (c >= '0' && c <= '9') || (c >= 0x0966 && c <= 0x096F);
}

}  // namespace

std::vector<FeatureTemplate> AllFeatureTemplates() {
  std::vector<FeatureTemplate> all;
  for (std::size_t i = 0; i < kNumFeatureTemplates; ++i) {
    all.push_back(static_cast<FeatureTemplate>(i));
  }
  return all;
}

std::string_view FeatureTemplateName(FeatureTemplate t) {
  return kNames.at(static_cast<std::size_t>(t));
}

std::optional<FeatureTemplate> FeatureTemplateFromId(std::uint32_t id) {
  if (id >= kNumFeatureTemplates) return std::nullopt;
  return static_cast<FeatureTemplate>(id);
}

std::vector<Feature> ExtractFeatures(
    std::span<const Token> sentence, std::size_t i, std::string_view prev_tag,
    std::span<const FeatureTemplate> templates) {
  const std::string& word = sentence[i].surface;
  const std::vector<char32_t> scalars = DecodeUtf8(word);
  auto suffix = [&](std::size_t k) {
    std::string out;
    const std::size_t n = std::min(k, scalars.size());
    for (std::size_t j = scalars.size() - n; j < scalars.size(); ++j) {
      AppendUtf8(scalars[j], &out);
    }
    return out;
  };

  std::vector<Feature> features;
  features.reserve(templates.size());
  for (FeatureTemplate t : templates) {
    std::string payload;
    switch (t) {
      case FeatureTemplate::kWord:
        payload = word;
        break;
      case FeatureTemplate::kPrevWord:
        payload = i == 0 ? std::string(kSentenceBegin)
                         : sentence[i - 1].surface;
        break;
      case FeatureTemplate::kNextWord:
        payload = i + 1 == sentence.size() ? std::string(kSentenceEnd)
                                           : sentence[i + 1].surface;
        break;
      case FeatureTemplate::kPrevTag:
        payload = prev_tag;
        break;
      case FeatureTemplate::kSuffix1:
      case FeatureTemplate::kSuffix2:
      case FeatureTemplate::kSuffix3:
      case FeatureTemplate::kSuffix4:
        payload = suffix(static_cast<std::size_t>(t) -
                         static_cast<std::size_t>(FeatureTemplate::kSuffix1) +
                         1);
        break;
      case FeatureTemplate::kPrefix1:
        if (!scalars.empty()) AppendUtf8(scalars.front(), &payload);
        break;
      case FeatureTemplate::kPunct:
        payload = sentence[i].is_punct ? "1" : "0";
        break;
      case FeatureTemplate::kDigit:
        payload = std::any_of(scalars.begin(), scalars.end(), IsDigit) ? "1"
                                                                       : "0";
        break;
    }
    features.emplace_back(t, std::move(payload));
  }
  return features;
}

}  // namespace morphfst

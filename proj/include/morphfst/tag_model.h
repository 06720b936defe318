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

// The trained tagger: p(t | h) = exp(w . f(h, t)) / sum_t' exp(w . f(h, t')).

#ifndef MORPHFST_TAG_MODEL_H_
#define MORPHFST_TAG_MODEL_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "morphfst/tag_corpus.h"
#include "morphfst/tag_features.h"

namespace morphfst {

inline constexpr std::uint16_t kTagModelFormatVersion = 1;

struct TagModel {
  std::vector<std::string> tagset;  // sorted, distinct
  std::vector<FeatureTemplate> templates;
  // Word -> tags observed with it in training, sorted.
  std::map<std::string, std::vector<std::string>> dictionary;
  double l2_lambda = 0.1;
  // Feature -> one weight per tag, in tagset order. Absent features weigh 0.
  std::map<Feature, std::vector<double>> weights;

  std::optional<std::size_t> TagIndex(std::string_view tag) const;

  // w . f(h, t) for every tag, in tagset order.
  std::vector<double> Scores(std::span<const Token> sentence, std::size_t i,
                             std::string_view prev_tag) const;
  // log p(t | h) for every tag.
  std::vector<double> LogDistribution(std::span<const Token> sentence,
                                      std::size_t i,
                                      std::string_view prev_tag) const;
  // p(t | h) for every tag; sums to 1.
  std::vector<double> Distribution(std::span<const Token> sentence,
                                   std::size_t i,
                                   std::string_view prev_tag) const;

  bool operator==(const TagModel&) const = default;
};

// Numerically stable log-softmax.
std::vector<double> LogSoftmax(std::span<const double> scores);

// Binary layout: "MTAG", u16 version, f64 lambda, tagset, templates,
// dictionary, then weights sorted by (template, payload). Throws FormatError
// on malformed input.
std::string SerializeTagModel(const TagModel& model);
TagModel DeserializeTagModel(std::string_view bytes);
void WriteTagModelFile(const TagModel& model,
                       const std::filesystem::path& path);
TagModel ReadTagModelFile(const std::filesystem::path& path);

}  // namespace morphfst

#endif  // MORPHFST_TAG_MODEL_H_

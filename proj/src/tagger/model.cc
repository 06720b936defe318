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

#include "morphfst/tag_model.h"

#include <algorithm>
#include <cmath>

#include "morphfst/binary_io.h"
#include "morphfst/errors.h"

namespace morphfst {

std::optional<std::size_t> TagModel::TagIndex(std::string_view tag) const {
  const auto it = std::lower_bound(tagset.begin(), tagset.end(), tag);
  if (it == tagset.end() || *it != tag) return std::nullopt;
  return static_cast<std::size_t>(it - tagset.begin());
}

std::vector<double> TagModel::Scores(std::span<const Token> sentence,
                                     std::size_t i,
                                     std::string_view prev_tag) const {
  std::vector<double> scores(tagset.size(), 0.0);
  for (const Feature& f : ExtractFeatures(sentence, i, prev_tag, templates)) {
    const auto it = weights.find(f);
    if (it == weights.end()) continue;
    for (std::size_t t = 0; t < scores.size(); ++t) scores[t] += it->second[t];
  }
  return scores;
}

std::vector<double> LogSoftmax(std::span<const double> scores) {
  std::vector<double> out(scores.begin(), scores.end());
  if (out.empty()) return out;
  const double max = *std::max_element(out.begin(), out.end());
  double sum = 0.0;
  for (double s : out) sum += std::exp(s - max);
  const double log_z = max + std::log(sum);
  for (double& s : out) s -= log_z;
  return out;
}

std::vector<double> TagModel::LogDistribution(std::span<const Token> sentence,
                                              std::size_t i,
                                              std::string_view prev_tag) const {
  return LogSoftmax(Scores(sentence, i, prev_tag));
}

std::vector<double> TagModel::Distribution(std::span<const Token> sentence,
                                           std::size_t i,
                                           std::string_view prev_tag) const {
  std::vector<double> p = LogDistribution(sentence, i, prev_tag);
  for (double& x : p) x = std::exp(x);
  return p;
}

std::string SerializeTagModel(const TagModel& model) {
  ByteWriter out;
  out.Bytes("MTAG");
  out.U16(kTagModelFormatVersion);
  out.F64(model.l2_lambda);
  out.U32(static_cast<std::uint32_t>(model.tagset.size()));
  for (const std::string& tag : model.tagset) out.String(tag);
  out.U32(static_cast<std::uint32_t>(model.templates.size()));
  for (FeatureTemplate t : model.templates) {
    out.U32(static_cast<std::uint32_t>(t));
  }
  out.U32(static_cast<std::uint32_t>(model.dictionary.size()));
  for (const auto& [word, tags] : model.dictionary) {
    out.String(word);
    out.U32(static_cast<std::uint32_t>(tags.size()));
    for (const std::string& tag : tags) {
      const auto index = model.TagIndex(tag);
      if (!index) throw TagsetMismatch(tag);
      out.U32(static_cast<std::uint32_t>(*index));
    }
  }
  out.U32(static_cast<std::uint32_t>(model.weights.size()));
  for (const auto& [feature, w] : model.weights) {
    out.U32(static_cast<std::uint32_t>(feature.first));
    out.String(feature.second);
    for (double x : w) out.F64(x);
  }
  return out.Take();
}

TagModel DeserializeTagModel(std::string_view bytes) {
  ByteReader in(bytes);
  if (in.Bytes(4) != "MTAG") throw FormatError("not a tag model file");
  const std::uint16_t version = in.U16();
  if (version != kTagModelFormatVersion) {
    throw FormatError("unsupported tag model version " +
                      std::to_string(version));
  }
  TagModel model;
  model.l2_lambda = in.F64();
  if (!std::isfinite(model.l2_lambda) || model.l2_lambda < 0) {
    throw FormatError("invalid regularization constant");
  }
  model.tagset.resize(in.Count(4));
  for (auto& tag : model.tagset) tag = in.String();
  if (!std::is_sorted(model.tagset.begin(), model.tagset.end()) ||
      std::adjacent_find(model.tagset.begin(), model.tagset.end()) !=
          model.tagset.end()) {
    throw FormatError("tagset is not sorted and distinct");
  }
  model.templates.resize(in.Count(4));
  for (auto& t : model.templates) {
    const auto parsed = FeatureTemplateFromId(in.U32());
    if (!parsed) throw FormatError("unknown feature template");
    t = *parsed;
  }
  const std::size_t num_words = in.Count(8);
  for (std::size_t i = 0; i < num_words; ++i) {
    std::string word = in.String();
    std::vector<std::string> tags(in.Count(4));
    for (auto& tag : tags) {
      const std::uint32_t index = in.U32();
      if (index >= model.tagset.size()) throw FormatError("tag index range");
      tag = model.tagset[index];
    }
    model.dictionary.emplace(std::move(word), std::move(tags));
  }
  const std::size_t num_features = in.Count(8);
  for (std::size_t i = 0; i < num_features; ++i) {
    const auto t = FeatureTemplateFromId(in.U32());
    if (!t) throw FormatError("unknown feature template");
    Feature feature{*t, in.String()};
    std::vector<double> w(model.tagset.size());
    for (double& x : w) {
      x = in.F64();
      if (!std::isfinite(x)) throw FormatError("non-finite weight");
    }
    model.weights.emplace(std::move(feature), std::move(w));
  }
  if (!in.AtEnd()) throw FormatError("trailing bytes after tag model");
  return model;
}

void WriteTagModelFile(const TagModel& model,
                       const std::filesystem::path& path) {
  WriteFileAtomically(path, SerializeTagModel(model));
}

TagModel ReadTagModelFile(const std::filesystem::path& path) {
  try {
    return DeserializeTagModel(ReadFileBytes(path));
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

}  // namespace morphfst

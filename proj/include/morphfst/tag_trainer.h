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

// Maximum-likelihood training of the tagger with an L2 penalty:
//
//   J(w) = sum_i log p(tag_i | h_i) - lambda * |w|^2
//
// where h_i uses the gold previous tag. J is maximized by full-batch
// gradient ascent from w = 0 with a fixed step. The step is divided by the
// number of training sentences, i.e. the ascent runs on the mean
// per-sentence objective, so one step size suits corpora of any length.

#ifndef MORPHFST_TAG_TRAINER_H_
#define MORPHFST_TAG_TRAINER_H_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "morphfst/tag_corpus.h"
#include "morphfst/tag_features.h"
#include "morphfst/tag_model.h"

namespace morphfst {

struct TrainConfig {
  double l2_lambda = 0.1;
  int epochs = 100;
  double step = 0.1;
  std::vector<FeatureTemplate> templates = AllFeatureTemplates();
};

// The training objective over a fixed corpus, as a function of a flat
// parameter vector laid out feature-major: w[feature * |tagset| + tag].
class TrainingProblem {
 public:
  // Throws EmptyCorpus.
  TrainingProblem(const TaggedCorpus& corpus,
                  std::vector<FeatureTemplate> templates, double l2_lambda);

  std::size_t NumParameters() const { return features_.size() * num_tags(); }
  std::size_t NumTokens() const { return contexts_.size(); }
  std::size_t NumSentences() const { return num_sentences_; }
  std::size_t num_tags() const { return tagset_.size(); }
  const std::vector<std::string>& tagset() const { return tagset_; }

  double Objective(std::span<const double> w) const;
  std::vector<double> Gradient(std::span<const double> w) const;

  TagModel ToModel(std::span<const double> w) const;

 private:
  struct Context {
    std::vector<std::uint32_t> features;
    std::uint32_t gold;
  };

  // log p(. | context) for every tag.
  std::vector<double> LogProbabilities(const Context& c,
                                       std::span<const double> w) const;

  std::vector<std::string> tagset_;
  std::vector<FeatureTemplate> templates_;
  double l2_lambda_;
  std::size_t num_sentences_ = 0;
  std::vector<Feature> features_;  // sorted
  std::vector<Context> contexts_;
  std::map<std::string, std::vector<std::string>> dictionary_;
};

// Trains a model. When `objective_trace` is given it receives J(w) before
// the first update and after every epoch (epochs + 1 values).
TagModel Train(const TaggedCorpus& corpus, const TrainConfig& config = {},
               std::vector<double>* objective_trace = nullptr);

}  // namespace morphfst

#endif  // MORPHFST_TAG_TRAINER_H_

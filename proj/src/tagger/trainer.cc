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

#include "morphfst/tag_trainer.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "morphfst/errors.h"

namespace morphfst {

TrainingProblem::TrainingProblem(const TaggedCorpus& corpus,
                                 std::vector<FeatureTemplate> templates,
                                 double l2_lambda)
    : templates_(std::move(templates)), l2_lambda_(l2_lambda) {
  std::set<std::string> tags;
  std::map<std::string, std::set<std::string>> dictionary;
  for (const TaggedSentence& sentence : corpus) {
    if (!sentence.empty()) ++num_sentences_;
    for (const auto& [surface, tag] : sentence) {
      tags.insert(tag);
      dictionary[surface].insert(tag);
    }
  }
  if (tags.empty()) throw EmptyCorpus();
  tagset_.assign(tags.begin(), tags.end());
  for (auto& [word, seen] : dictionary) {
    dictionary_.emplace(word, std::vector<std::string>(seen.begin(), seen.end()));
  }

  // First pass collects the feature inventory, second pass indexes it.
  std::vector<std::pair<std::vector<Feature>, std::uint32_t>> raw;
  std::set<Feature> inventory;
  for (const TaggedSentence& sentence : corpus) {
    const std::vector<Token> tokens = TokensOf(sentence);
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      const std::string_view prev =
          i == 0 ? kStartTag : std::string_view(sentence[i - 1].second);
      auto features = ExtractFeatures(tokens, i, prev, templates_);
      inventory.insert(features.begin(), features.end());
      const auto gold = std::lower_bound(tagset_.begin(), tagset_.end(),
                                         sentence[i].second) -
                        tagset_.begin();
      raw.emplace_back(std::move(features), static_cast<std::uint32_t>(gold));
    }
  }
  features_.assign(inventory.begin(), inventory.end());
  for (const auto& [features, gold] : raw) {
    Context c;
    c.gold = gold;
    for (const Feature& f : features) {
      c.features.push_back(static_cast<std::uint32_t>(
          std::lower_bound(features_.begin(), features_.end(), f) -
          features_.begin()));
    }
    contexts_.push_back(std::move(c));
  }
}

std::vector<double> TrainingProblem::LogProbabilities(
    const Context& c, std::span<const double> w) const {
  const std::size_t t_count = num_tags();
  std::vector<double> scores(t_count, 0.0);
  for (std::uint32_t f : c.features) {
    const double* row = w.data() + static_cast<std::size_t>(f) * t_count;
    for (std::size_t t = 0; t < t_count; ++t) scores[t] += row[t];
  }
  return LogSoftmax(scores);
}

double TrainingProblem::Objective(std::span<const double> w) const {
  double log_likelihood = 0.0;
  for (const Context& c : contexts_) {
    log_likelihood += LogProbabilities(c, w)[c.gold];
  }
  double norm = 0.0;
  for (double x : w) norm += x * x;
  return log_likelihood - l2_lambda_ * norm;
}

std::vector<double> TrainingProblem::Gradient(std::span<const double> w) const {
  const std::size_t t_count = num_tags();
  std::vector<double> grad(w.size(), 0.0);
  for (const Context& c : contexts_) {
    std::vector<double> p = LogProbabilities(c, w);
    for (double& x : p) x = std::exp(x);
    p[c.gold] -= 1.0;  // now p - indicator
    for (std::uint32_t f : c.features) {
      double* row = grad.data() + static_cast<std::size_t>(f) * t_count;
      for (std::size_t t = 0; t < t_count; ++t) row[t] -= p[t];
    }
  }
  for (std::size_t k = 0; k < w.size(); ++k) grad[k] -= 2.0 * l2_lambda_ * w[k];
  return grad;
}

TagModel TrainingProblem::ToModel(std::span<const double> w) const {
  TagModel model;
  model.tagset = tagset_;
  model.templates = templates_;
  model.dictionary = dictionary_;
  model.l2_lambda = l2_lambda_;
  const std::size_t t_count = num_tags();
  for (std::size_t f = 0; f < features_.size(); ++f) {
    model.weights.emplace(
        features_[f],
        std::vector<double>(w.begin() + f * t_count,
                            w.begin() + (f + 1) * t_count));
  }
  return model;
}

TagModel Train(const TaggedCorpus& corpus, const TrainConfig& config,
               std::vector<double>* objective_trace) {
  if (config.l2_lambda < 0 || config.step <= 0 || config.epochs < 0) {
    throw Error("invalid training configuration");
  }
  const TrainingProblem problem(corpus, config.templates, config.l2_lambda);
  std::vector<double> w(problem.NumParameters(), 0.0);
  const double rate = config.step / static_cast<double>(problem.NumSentences());
  if (objective_trace) {
    objective_trace->clear();
    objective_trace->push_back(problem.Objective(w));
  }
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    const std::vector<double> grad = problem.Gradient(w);
    for (std::size_t k = 0; k < w.size(); ++k) w[k] += rate * grad[k];
    if (objective_trace) objective_trace->push_back(problem.Objective(w));
  }
  return problem.ToModel(w);
}

}  // namespace morphfst

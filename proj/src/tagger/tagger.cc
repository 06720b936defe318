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

#include "morphfst/tagger.h"

#include <algorithm>
#include <map>
#include <set>

#include "morphfst/errors.h"

namespace morphfst {
namespace {

const std::map<std::string, std::vector<std::string>, std::less<>>&
CategoryMap() {
  static const auto* map =
      new std::map<std::string, std::vector<std::string>, std::less<>>{
          {"Noun", {"N_NN"}},         {"Pronoun", {"PR_PRI"}},
          {"Adjective", {"JJ"}},      {"Verb", {"V_VM", "V_AUX"}},
          {"Adverb", {"RB"}},         {"Particle", {"RP"}},
      };
  return *map;
}

struct Hypothesis {
  double score = 0.0;
  std::vector<std::uint32_t> tags;
};

bool Better(const Hypothesis& a, const Hypothesis& b) {
  if (a.score != b.score) return a.score > b.score;
  return a.tags < b.tags;
}

double Ratio(std::size_t correct, std::size_t total) {
  return total == 0 ? 1.0 : static_cast<double>(correct) / total;
}

}  // namespace

std::vector<std::string> CandidateTags(const TagModel& model,
                                       const MorphModel* morph,
                                       std::string_view word) {
  if (const auto it = model.dictionary.find(std::string(word));
      it != model.dictionary.end()) {
    return it->second;
  }
  if (IsPunctuation(word) && model.TagIndex(kPunctuationTag)) {
    return {std::string(kPunctuationTag)};
  }
  std::set<std::string> mapped;
  bool open = morph == nullptr;
  if (morph) {
    const std::vector<Analysis> analyses = morph->Analyze(word);
    if (analyses.empty()) open = true;
    for (const Analysis& a : analyses) {
      const auto it = CategoryMap().find(a.tags.front());
      if (it == CategoryMap().end()) {
        open = true;
        break;
      }
      for (const std::string& tag : it->second) {
        if (model.TagIndex(tag)) mapped.insert(tag);
      }
    }
  }
  if (open || mapped.empty()) return model.tagset;
  return {mapped.begin(), mapped.end()};
}

std::vector<std::string> DecodeTags(const TagModel& model,
                                    const MorphModel* morph,
                                    std::span<const Token> tokens,
                                    std::size_t beam_width) {
  beam_width = std::max<std::size_t>(1, beam_width);
  std::vector<Hypothesis> beam(1);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    std::vector<std::uint32_t> candidates;
    for (const std::string& tag : CandidateTags(model, morph,
                                                tokens[i].surface)) {
      candidates.push_back(static_cast<std::uint32_t>(*model.TagIndex(tag)));
    }
    // Recombine on the last tag: the model only looks one tag back.
    std::map<std::uint32_t, Hypothesis> best;
    for (const Hypothesis& h : beam) {
      const std::string_view prev =
          h.tags.empty() ? kStartTag
                         : std::string_view(model.tagset[h.tags.back()]);
      const std::vector<double> log_p = model.LogDistribution(tokens, i, prev);
      for (std::uint32_t c : candidates) {
        Hypothesis next{h.score + log_p[c], h.tags};
        next.tags.push_back(c);
        const auto it = best.find(c);
        if (it == best.end()) {
          best.emplace(c, std::move(next));
        } else if (Better(next, it->second)) {
          it->second = std::move(next);
        }
      }
    }
    beam.clear();
    for (auto& [tag, h] : best) beam.push_back(std::move(h));
    std::sort(beam.begin(), beam.end(), Better);
    if (beam.size() > beam_width) beam.resize(beam_width);
  }
  std::vector<std::string> out;
  for (std::uint32_t t : beam.front().tags) out.push_back(model.tagset[t]);
  return out;
}

TaggedSentence TagSentence(const TagModel& model, const MorphModel* morph,
                           std::string_view sentence, std::size_t beam_width) {
  const std::vector<Token> tokens = TokenizeSentence(sentence);
  const std::vector<std::string> tags =
      DecodeTags(model, morph, tokens, beam_width);
  TaggedSentence out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    out.emplace_back(tokens[i].surface, tags[i]);
  }
  return out;
}

double Evaluation::known_accuracy() const {
  return Ratio(known_correct, known_total);
}
double Evaluation::unknown_accuracy() const {
  return Ratio(unknown_correct, unknown_total);
}
double Evaluation::overall_accuracy() const {
  return Ratio(known_correct + unknown_correct, known_total + unknown_total);
}

Evaluation Evaluate(const TagModel& model, const MorphModel* morph,
                    const TaggedCorpus& gold, std::size_t beam_width) {
  for (const TaggedSentence& sentence : gold) {
    for (const auto& [surface, tag] : sentence) {
      if (!model.TagIndex(tag)) throw TagsetMismatch(tag);
    }
  }
  Evaluation eval;
  for (const TaggedSentence& sentence : gold) {
    const std::vector<Token> tokens = TokensOf(sentence);
    const std::vector<std::string> predicted =
        DecodeTags(model, morph, tokens, beam_width);
    for (std::size_t i = 0; i < sentence.size(); ++i) {
      const bool correct = predicted[i] == sentence[i].second;
      if (model.dictionary.count(sentence[i].first)) {
        ++eval.known_total;
        eval.known_correct += correct;
      } else {
        ++eval.unknown_total;
        eval.unknown_correct += correct;
      }
    }
  }
  return eval;
}

}  // namespace morphfst

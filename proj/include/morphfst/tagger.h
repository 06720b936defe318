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

// Tagging with a trained model: candidate tags per token, beam search over
// first-order tag histories, and accuracy evaluation.

#ifndef MORPHFST_TAGGER_H_
#define MORPHFST_TAGGER_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "morphfst/morph.h"
#include "morphfst/tag_corpus.h"
#include "morphfst/tag_model.h"

namespace morphfst {

inline constexpr std::size_t kDefaultBeamWidth = 3;
inline constexpr std::string_view kPunctuationTag = "I";

// Tags a token may receive, in tagset order:
//   - a dictionary word: the tags it was seen with in training;
//   - punctuation: "I";
//   - otherwise the categories of its morphological analyses (first tag
//     Noun -> N_NN, Pronoun -> PR_PRI, Adjective -> JJ, Verb -> V_VM and
//     V_AUX, Adverb -> RB, Particle -> RP);
//   - the whole tagset when none of the above applies. `morph` may be null.
std::vector<std::string> CandidateTags(const TagModel& model,
                                       const MorphModel* morph,
                                       std::string_view word);

// Highest-probability tag sequence found by a beam of `beam_width`
// hypotheses, one per last tag. Equal scores go to the sequence that comes
// first in tagset order.
std::vector<std::string> DecodeTags(const TagModel& model,
                                    const MorphModel* morph,
                                    std::span<const Token> tokens,
                                    std::size_t beam_width = kDefaultBeamWidth);

TaggedSentence TagSentence(const TagModel& model, const MorphModel* morph,
                           std::string_view sentence,
                           std::size_t beam_width = kDefaultBeamWidth);

struct Evaluation {
  std::size_t known_total = 0;
  std::size_t known_correct = 0;
  std::size_t unknown_total = 0;
  std::size_t unknown_correct = 0;

  // Accuracy over an empty partition is reported as 1.0; check has_* first.
  bool has_known() const { return known_total > 0; }
  bool has_unknown() const { return unknown_total > 0; }
  double known_accuracy() const;
  double unknown_accuracy() const;
  double overall_accuracy() const;
};

// Token accuracy against `gold`, split by whether the surface word is in the
// model's dictionary. Throws TagsetMismatch for a gold tag outside the
// tagset.
Evaluation Evaluate(const TagModel& model, const MorphModel* morph,
                    const TaggedCorpus& gold,
                    std::size_t beam_width = kDefaultBeamWidth);

}  // namespace morphfst

#endif  // MORPHFST_TAGGER_H_

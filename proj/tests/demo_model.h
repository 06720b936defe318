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

// Shared fixture: the demo grammar compiled once per test binary.

#ifndef MORPHFST_TESTS_DEMO_MODEL_H_
#define MORPHFST_TESTS_DEMO_MODEL_H_

#include <filesystem>
#include <memory>

#include "morphfst/morph.h"
#include "morphfst/rule_compiler.h"
#include "morphfst/tag_corpus.h"
#include "morphfst/tag_model.h"
#include "morphfst/tag_trainer.h"

namespace morphfst::testing_demo {

inline std::filesystem::path DataDir() { return MORPHFST_DATA_DIR; }

inline const Transducer& DemoGrammar() {
  static const Transducer* grammar = new Transducer(CompileRuleFile(
      DataDir() / "hindi.mrl", std::make_shared<SymbolTable>()));
  return *grammar;
}

inline const MorphModel& DemoMorph() {
  static const MorphModel* model = new MorphModel(
      DemoGrammar(), LoadIndeclinables(DataDir() / "indeclinables.tsv"));
  return *model;
}

inline const TaggedCorpus& DemoTrainingCorpus() {
  static const TaggedCorpus* corpus =
      new TaggedCorpus(ReadTaggedCorpus(DataDir() / "corpus" / "train.txt"));
  return *corpus;
}

// Trained with the default configuration.
inline const TagModel& DemoTagModel() {
  static const TagModel* model = new TagModel(Train(DemoTrainingCorpus()));
  return *model;
}

}  // namespace morphfst::testing_demo

#endif  // MORPHFST_TESTS_DEMO_MODEL_H_

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

#include <chrono>

#include "gtest/gtest.h"
#include "demo_model.h"
#include "golden_tables.h"
#include "morphfst/apply.h"
#include "morphfst/errors.h"
#include "morphfst/operations.h"

namespace morphfst {
namespace {

using testing_demo::DemoGrammar;
using testing_demo::DemoMorph;
using testing_demo::GoldenRow;
using testing_demo::GoldenRows;
using testing_demo::SplitCell;
using Strings = std::vector<std::string>;

Strings Rendered(const std::vector<Analysis>& analyses) {
  Strings out;
  for (const Analysis& a : analyses) out.push_back(a.Render());
  return out;
}

Strings AnalyzeRendered(std::string_view word) {
  return Rendered(DemoMorph().Analyze(word));
}

// ---- analysis strings ----

TEST(AnalysisTest, ParseAndRender) {
  const Analysis a = ParseAnalysis("लडका<Noun><masculine><sg>");
  EXPECT_EQ(a.root, "लडका");
  EXPECT_EQ(a.tags, (Strings{"Noun", "masculine", "sg"}));
  EXPECT_EQ(a.Render(), "लडका<Noun><masculine><sg>");
  EXPECT_EQ(ParseAnalysis("अरे लडका<X>").root, "अरे लडका");
}

TEST(AnalysisTest, Malformed) {
  EXPECT_THROW(ParseAnalysis("<Noun>"), MalformedAnalysis);
  EXPECT_THROW(ParseAnalysis("no-tags"), MalformedAnalysis);
  EXPECT_THROW(ParseAnalysis(""), MalformedAnalysis);
  EXPECT_THROW(ParseAnalysis("a<Noun"), MalformedAnalysis);
  EXPECT_THROW(ParseAnalysis("a<Noun>b"), MalformedAnalysis);
  EXPECT_THROW(ParseAnalysis("a<>"), MalformedAnalysis);
}

TEST(IndeclinableTest, Parse) {
  const IndeclinableMap m =
      ParseIndeclinables("अतःकरण\tअतःकरण<Noun><Masculine><sg>\n");
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m.at("अतःकरण").size(), 1u);
  EXPECT_EQ(m.at("अतःकरण")[0].Render(), "अतःकरण<Noun><Masculine><sg>");
  EXPECT_TRUE(ParseIndeclinables("").empty());
  const IndeclinableMap two = ParseIndeclinables("x\tx<A>\n\nx\tx<B>\n");
  EXPECT_EQ(two.at("x").size(), 2u);
}

TEST(IndeclinableTest, MalformedNamesLine) {
  try {
    ParseIndeclinables("a\ta<A>\nx\tno-tags\n");
    FAIL() << "expected MalformedAnalysis";
  } catch (const MalformedAnalysis& e) {
    EXPECT_EQ(e.line, 2);
  }
}

TEST(GoldenMorphTest, TableRows) {
  for (const GoldenRow& row : GoldenRows()) {
    std::multiset<std::string> got;
    for (const std::string& word : row.inputs) {
      for (const std::string& a : AnalyzeRendered(word)) got.insert(a);
    }
    EXPECT_EQ(got, SplitCell(row.cell)) << row.inputs[0];
  }
}

TEST(GoldenMorphTest, PerWord) {
  EXPECT_EQ(AnalyzeRendered("लडका"), Strings{"लडका<Noun><masculine><sg>"});
  EXPECT_EQ(AnalyzeRendered("लडकी"), Strings{"लडकी<Noun><feminine><sg>"});
  // Printed as feminine in the source table; reproduced as printed.
  EXPECT_EQ(AnalyzeRendered("मालन"), Strings{"माली<Noun><feminine><sg>"});
  // Printed as masculine in the source table; reproduced as printed.
  EXPECT_EQ(AnalyzeRendered("कहानियाँ"),
            Strings{"कहानी<Noun><masculine><pl>"});
  EXPECT_EQ(AnalyzeRendered("अरे लडके"), Strings{"लडका<Noun><Vocative>"});
  EXPECT_EQ(AnalyzeRendered("शेरनी"), Strings{"शेर<Noun><feminine><sg>"});
  EXPECT_EQ(AnalyzeRendered("बेशर्म"), Strings{"बेशर्म<Noun><Masculine><sg>"});
  EXPECT_EQ(AnalyzeRendered("पढ़ी"),
            Strings{"पढ़<Verb><Indicative><Feminine>"});
  EXPECT_EQ(AnalyzeRendered("जा"),
            (Strings{"जा<Verb><Imprative><Intimate>", "जा<Verb><Transitive>"}));
  const Strings jate = AnalyzeRendered("जाते");
  EXPECT_EQ(jate, (Strings{"जा<Verb><Dative>",
                           "जा<Verb><Indicative><Masculine><Perfectiv><sg>",
                           "जा<Verb><present>"}));
  EXPECT_EQ(AnalyzeRendered("करते"),
            Strings{"कर<Verb><Indicative><Masculine><Habitual><pl>"});
}

TEST(GoldenMorphTest, UnknownWords) {
  EXPECT_TRUE(DemoMorph().Analyze("xyz-not-in-grammar").empty());
  EXPECT_TRUE(DemoMorph().Analyze("लडको").empty());
  EXPECT_TRUE(DemoMorph().Analyze("").empty());
  EXPECT_TRUE(DemoMorph().Analyze("a<b").empty());
}

TEST(GoldenMorphTest, Indeclinable) {
  EXPECT_EQ(AnalyzeRendered("अतःकरण"),
            Strings{"अतःकरण<Noun><Masculine><sg>"});
  EXPECT_EQ(DemoMorph().Generate("अतःकरण<Noun><Masculine><sg>"),
            Strings{"अतःकरण"});
}

TEST(GenerateTest, Examples) {
  EXPECT_EQ(DemoMorph().Generate("लडका<Noun><masculine><pl>"),
            Strings{"लडके"});
  EXPECT_EQ(DemoMorph().Generate("शेर<Noun><feminine><sg>"),
            Strings{"शेरनी"});
  EXPECT_EQ(DemoMorph().Generate("लडका<Noun><Vocative>"),
            Strings{"अरे लडके"});
  EXPECT_TRUE(DemoMorph().Generate("लडका<Noun><Unknown>").empty());
  EXPECT_TRUE(DemoMorph().Generate("qq<Noun>").empty());
  EXPECT_THROW(DemoMorph().Generate("<Noun>"), MalformedAnalysis);
}

// ---- properties ----

TEST(MorphPropertyTest, DemoGrammarIsAcyclicAndMinimal) {
  EXPECT_TRUE(IsAcyclic(DemoGrammar()));
  EXPECT_TRUE(IsPairDeterministic(DemoGrammar()));
  EXPECT_EQ(Minimize(DemoGrammar()).NumStates(), DemoGrammar().NumStates());
}

TEST(MorphPropertyTest, DualityOverEveryGrammarPair) {
  const Transducer& g = DemoGrammar();
  const StringPairSet pairs = EnumeratePairs(g, LongestPathLength(g));
  ASSERT_GT(pairs.size(), 50u);
  std::size_t violations = 0;
  for (const auto& [lexical, surface] : pairs) {
    const Strings generated = DemoMorph().Generate(lexical);
    const Strings analyzed = AnalyzeRendered(surface);
    const bool gen = std::find(generated.begin(), generated.end(), surface) !=
                     generated.end();
    const bool ana = std::find(analyzed.begin(), analyzed.end(), lexical) !=
                     analyzed.end();
    // Every enumerated pair must be found from both directions.
    if (!gen || !ana) {
      ++violations;
      ADD_FAILURE() << lexical << " / " << surface;
    }
    for (const std::string& a : analyzed) {
      const Strings back = DemoMorph().Generate(a);
      if (std::find(back.begin(), back.end(), surface) == back.end()) {
        ++violations;
        ADD_FAILURE() << a << " does not generate " << surface;
      }
    }
  }
  EXPECT_EQ(violations, 0u);
}

TEST(MorphPropertyTest, NfcInsensitive) {
  // U+095D is the precomposed form of ढ़; NFC decomposes it.
  const std::string precomposed = "पढ़";
  const std::string decomposed = "पढ़";
  ASSERT_NE(precomposed, decomposed);
  EXPECT_EQ(DemoMorph().Analyze(precomposed), DemoMorph().Analyze(decomposed));
  EXPECT_EQ(AnalyzeRendered(precomposed),
            Strings{"पढ़<Verb><Indicative><Masculine>"});
  EXPECT_EQ(DemoMorph().Generate("पढ़<Verb><Indicative><Feminine>"),
            Strings{"पढ़ी"});
}

TEST(MorphPropertyTest, IndeclinablesShadowTheGrammar) {
  IndeclinableMap conflict =
      ParseIndeclinables("लडका\tलडका<Particle>\n");
  const MorphModel model(DemoGrammar(), conflict);
  EXPECT_EQ(Rendered(model.Analyze("लडका")), Strings{"लडका<Particle>"});
  // The grammar's analysis no longer generates the shadowed word.
  EXPECT_TRUE(model.Generate("लडका<Noun><masculine><sg>").empty());
  EXPECT_EQ(model.Generate("लडका<Particle>"), Strings{"लडका"});
  // Other words are unaffected.
  EXPECT_EQ(Rendered(model.Analyze("लडके")),
            Strings{"लडका<Noun><masculine><pl>"});
}

TEST(MorphPropertyTest, RepeatedCallsAgree) {
  for (const GoldenRow& row : GoldenRows()) {
    for (const std::string& word : row.inputs) {
      const auto first = DemoMorph().Analyze(word);
      for (int i = 0; i < 3; ++i) EXPECT_EQ(DemoMorph().Analyze(word), first);
    }
  }
}

TEST(MorphPropertyTest, GoldenRowsRunFast) {
  (void)DemoMorph();
  const auto start = std::chrono::steady_clock::now();
  for (const GoldenRow& row : GoldenRows()) {
    for (const std::string& word : row.inputs) (void)DemoMorph().Analyze(word);
  }
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;
  EXPECT_LT(elapsed.count(), 1.0);
}

}  // namespace
}  // namespace morphfst

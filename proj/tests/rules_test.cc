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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>

#include <unistd.h>

#include "gtest/gtest.h"
#include "fst_oracle.h"
#include "morphfst/apply.h"
#include "morphfst/errors.h"
#include "morphfst/operations.h"
#include "morphfst/rule_compiler.h"
#include "morphfst/rule_parser.h"

namespace morphfst {
namespace {

using oracle::Relation;

RuleFile ResultOnly(RuleAst ast) {
  RuleFile f;
  f.result = std::move(ast);
  return f;
}

Transducer CompileText(std::string_view text,
                       const std::shared_ptr<SymbolTable>& table) {
  return CompileRules(ParseRules(text), table);
}

TEST(RuleParserTest, SinglePair) {
  const RuleFile f = ParseRules("a:b");
  EXPECT_TRUE(f.definitions.empty());
  EXPECT_EQ(f.result, RuleAst::Pair("a", "b"));
}

TEST(RuleParserTest, DefinitionThenExpressionOnOneLine) {
  const RuleFile f = ParseRules("$V$ = a | i ;  $V$ $V$*");
  ASSERT_EQ(f.definitions.size(), 1u);
  EXPECT_EQ(f.definitions[0].name, "V");
  EXPECT_EQ(f.definitions[0].body,
            RuleAst::Node(RuleKind::kUnion,
                          {RuleAst::Literal("a"), RuleAst::Literal("i")}));
  EXPECT_EQ(f.result,
            RuleAst::Node(RuleKind::kConcat,
                          {RuleAst::VarRef("V"),
                           RuleAst::Node(RuleKind::kStar,
                                         {RuleAst::VarRef("V")})}));
}

TEST(RuleParserTest, PrecedenceAndGrouping) {
  // Composition binds loosest, then union, then juxtaposition, then postfix.
  const RuleFile f = ParseRules("a b* | c || d");
  const RuleAst expected = RuleAst::Node(
      RuleKind::kCompose,
      {RuleAst::Node(
           RuleKind::kUnion,
           {RuleAst::Node(RuleKind::kConcat,
                          {RuleAst::Literal("a"),
                           RuleAst::Node(RuleKind::kStar,
                                         {RuleAst::Literal("b")})}),
            RuleAst::Literal("c")}),
       RuleAst::Literal("d")});
  EXPECT_EQ(f.result, expected);
}

TEST(RuleParserTest, TagsClassesIncludesAndComments) {
  const RuleFile f = ParseRules(
      "% comment line\n"
      "$L$ = [a-c x]   % trailing comment\n"
      "$N$ = #include \"lex/nouns.txt\"\n"
      "$N$ <Noun>:<> \\ :\\:\n");
  ASSERT_EQ(f.definitions.size(), 2u);
  EXPECT_EQ(f.definitions[0].body.kind, RuleKind::kCharClass);
  EXPECT_EQ(f.definitions[0].body.chars,
            (std::vector<std::string>{"a", "b", "c", "x"}));
  EXPECT_EQ(f.definitions[1].body.kind, RuleKind::kInclude);
  EXPECT_EQ(f.definitions[1].body.text, "lex/nouns.txt");
  EXPECT_EQ(f.result,
            RuleAst::Node(RuleKind::kConcat,
                          {RuleAst::VarRef("N"), RuleAst::Pair("<Noun>", "<>"),
                           RuleAst::Pair(" ", ":")}));
}

TEST(RuleParserTest, ContinuationRules) {
  EXPECT_EQ(ParseRules("(a\n b |\n c)").result,
            ParseRules("(a b | c)").result);
  EXPECT_EQ(ParseRules("a |\n b").result, ParseRules("a | b").result);
  EXPECT_EQ(ParseRules("a ||\n b").result, ParseRules("a || b").result);
}

TEST(RuleParserTest, LastExpressionIsResult) {
  EXPECT_EQ(ParseRules("a\nb\n").result, RuleAst::Literal("b"));
}

TEST(RuleParserTest, Errors) {
  EXPECT_THROW(ParseRules(""), EmptyFile);
  EXPECT_THROW(ParseRules("% only a comment\n$A$ = a\n"), EmptyFile);
  EXPECT_THROW(ParseRules("$A$ $B$"), UndefinedVariable);
  // No forward references and no recursion.
  EXPECT_THROW(ParseRules("$A$ = $B$\n$B$ = b\n$A$"), UndefinedVariable);
  EXPECT_THROW(ParseRules("$A$ = a $A$\n$A$"), UndefinedVariable);
  EXPECT_THROW(ParseRules("<>:<>"), SyntaxError);
  EXPECT_THROW(ParseRules("$A$ = a\n$A$ = b\n$A$"), SyntaxError);
  EXPECT_THROW(ParseRules("(a b"), SyntaxError);
  EXPECT_THROW(ParseRules("a:"), SyntaxError);
  EXPECT_THROW(ParseRules("<Noun"), SyntaxError);
  EXPECT_THROW(ParseRules("[a-"), SyntaxError);
  EXPECT_THROW(ParseRules("#include nouns.txt"), SyntaxError);
  EXPECT_THROW(ParseRules("(a\n b)\n| d"), SyntaxError);
}

TEST(RuleParserTest, SyntaxErrorPosition) {
  try {
    ParseRules("a b\nc )\n");
    FAIL() << "expected SyntaxError";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line, 2);
    EXPECT_EQ(e.col, 3);
  }
}

TEST(RuleParserTest, InputIsNormalized) {
  // U+095D (precomposed) decomposes to U+0922 U+093C under NFC.
  const RuleFile f = ParseRules("\u095D");
  EXPECT_EQ(f.result,
            RuleAst::Node(RuleKind::kConcat, {RuleAst::Literal("\u0922"),
                                              RuleAst::Literal("\u093C")}));
}

TEST(RuleParserTest, RangesSkipScalarsOutsideNfc) {
  const RuleFile f = ParseRules("[ऀ-ॿ]");
  const auto& chars = f.result.chars;
  EXPECT_EQ(std::count(chars.begin(), chars.end(), "ढ़"), 0);
  EXPECT_EQ(std::count(chars.begin(), chars.end(), "ढ"), 1);
  EXPECT_EQ(std::count(chars.begin(), chars.end(), "़"), 1);
}

// ---- render / re-parse ----

RuleAst RandomAst(std::mt19937& rng, int depth) {
  static const std::vector<std::string> kSymbols = {
      "a", "b", "<>", "<Tag>", "|", " ", "%", "\\", "ल", ":"};
  std::uniform_int_distribution<int> kind_dist(0, depth <= 0 ? 2 : 9);
  std::uniform_int_distribution<std::size_t> sym(0, kSymbols.size() - 1);
  switch (kind_dist(rng)) {
    case 0:
      return RuleAst::Literal(kSymbols[sym(rng)]);
    case 1: {
      std::string in = kSymbols[sym(rng)], out = kSymbols[sym(rng)];
      if (in == "<>" && out == "<>") out = "a";
      return RuleAst::Pair(in, out);
    }
    case 2: {
      RuleAst n;
      n.kind = RuleKind::kCharClass;
      n.chars = {"-", "]", "a"};
      n.chars.resize(1 + rng() % 3);
      return n;
    }
    case 3: case 4: case 5: {
      static const RuleKind kNary[] = {RuleKind::kConcat, RuleKind::kUnion,
                                       RuleKind::kCompose};
      const RuleKind kind = kNary[rng() % 3];
      const std::size_t n = kind == RuleKind::kCompose ? 2 : 2 + rng() % 2;
      std::vector<RuleAst> children;
      for (std::size_t i = 0; i < n; ++i) {
        children.push_back(RandomAst(rng, depth - 1));
      }
      return RuleAst::Node(kind, std::move(children));
    }
    case 6:
      return RuleAst::Node(RuleKind::kStar, {RandomAst(rng, depth - 1)});
    case 7:
      return RuleAst::Node(RuleKind::kPlus, {RandomAst(rng, depth - 1)});
    case 8:
      return RuleAst::Node(RuleKind::kOptional, {RandomAst(rng, depth - 1)});
    default: {
      RuleAst n;
      n.kind = RuleKind::kInclude;
      n.text = "lex/verbs.txt";
      return n;
    }
  }
}

TEST(RuleRenderTest, HandWrittenFixpoint) {
  const char* kText =
      "$L$ = [ऀ-ॿ]\n"
      "$N$ = #include \"lex/nouns.txt\"\n"
      "$S$ = (a:b | <>:c)* d? ((e f)+ | g)\n"
      "($L$* <>:<X>) || $N$ || ($L$* <X>:<>) | $S$ \\| \\%\n";
  const RuleFile once = ParseRules(kText);
  const RuleFile twice = ParseRules(RenderRules(once));
  EXPECT_EQ(once, twice);
  EXPECT_EQ(RenderRules(once), RenderRules(twice));
}

TEST(RuleRenderTest, RandomAstsSurviveRoundTrip) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    RuleFile f;
    f.definitions.push_back({"D", RandomAst(rng, 2)});
    f.result = RuleAst::Node(RuleKind::kConcat,
                             {RuleAst::VarRef("D"), RandomAst(rng, 3)});
    const std::string text = RenderRules(f);
    RuleFile parsed;
    ASSERT_NO_THROW(parsed = ParseRules(text)) << text;
    EXPECT_EQ(parsed, f) << text;
  }
}

// ---- compilation ----

TEST(RuleCompilerTest, PairAndUnion) {
  auto table = std::make_shared<SymbolTable>();
  EXPECT_EQ(EnumeratePairs(CompileRules(ResultOnly(RuleAst::Pair("a", "b")),
                                        table),
                           4),
            (StringPairSet{{"a", "b"}}));
  const RuleAst u = RuleAst::Node(
      RuleKind::kUnion, {RuleAst::Literal("a"), RuleAst::Literal("b")});
  EXPECT_EQ(EnumeratePairs(CompileRules(ResultOnly(u), table), 4),
            (StringPairSet{{"a", "a"}, {"b", "b"}}));
}

TEST(RuleCompilerTest, EpsilonLiteralAndTags) {
  auto table = std::make_shared<SymbolTable>();
  EXPECT_EQ(EnumeratePairs(CompileText("<>", table), 3),
            (StringPairSet{{"", ""}}));
  EXPECT_EQ(EnumeratePairs(CompileText("a <Noun>:<> <>:\\ ", table), 5),
            (StringPairSet{{"a<Noun>", "a "}}));
}

TEST(RuleCompilerTest, NounFragmentGeneratesAndAnalyzes) {
  auto table = std::make_shared<SymbolTable>();
  const Transducer t = CompileText(
      "लडक ( ा:ा <Noun>:<> <masculine>:<> <sg>:<> | "
      "ा:े <Noun>:<> <masculine>:<> <pl>:<> )",
      table);
  EXPECT_EQ(EnumeratePairs(t, LongestPathLength(t)),
            (StringPairSet{{"लडका<Noun><masculine><pl>", "लडके"},
                           {"लडका<Noun><masculine><sg>", "लडका"}}));
  EXPECT_EQ(Apply(Invert(t), "लडके"),
            (StringPairSet{{"लडके", "लडका<Noun><masculine><pl>"}}));
}

TEST(RuleCompilerTest, CompositionAndVariables) {
  auto table = std::make_shared<SymbolTable>();
  const Transducer t = CompileText(
      "$A$ = a:b | c\n"
      "$B$ = b:x | c:y\n"
      "$A$ $A$ || $B$ $B$\n",
      table);
  EXPECT_EQ(EnumeratePairs(t, 8), (StringPairSet{{"aa", "xx"},
                                                 {"ac", "xy"},
                                                 {"ca", "yx"},
                                                 {"cc", "yy"}}));
}

TEST(RuleCompilerTest, ResultsAreDeterministicAndMinimal) {
  std::mt19937 rng(11);
  auto table = std::make_shared<SymbolTable>();
  for (int trial = 0; trial < 100; ++trial) {
    RuleAst ast = RandomAst(rng, 3);
    if (ast.kind == RuleKind::kInclude) continue;
    std::optional<Transducer> compiled;
    try {
      compiled = CompileRules(ResultOnly(ast), table);
    } catch (const IncludeNotFound&) {
      continue;
    }
    const Transducer& t = *compiled;
    EXPECT_TRUE(IsPairDeterministic(t)) << RenderExpression(ast);
    EXPECT_EQ(Minimize(t).NumStates(), t.NumStates()) << RenderExpression(ast);
  }
}

// Random expressions over {a, b, c}; no composition, so every relation
// window is a closed-form combination of the children's windows.
RuleAst RandomAlgebraAst(std::mt19937& rng, int depth) {
  static const char* kSyms[] = {"a", "b", "c", "<>"};
  const int kind = static_cast<int>(rng() % (depth <= 0 ? 2 : 7));
  auto child = [&] { return RandomAlgebraAst(rng, depth - 1); };
  switch (kind) {
    case 0:
      return RuleAst::Literal(kSyms[rng() % 3]);
    case 1: {
      std::string in = kSyms[rng() % 4], out = kSyms[rng() % 4];
      if (in == "<>" && out == "<>") in = "a";
      return RuleAst::Pair(in, out);
    }
    case 2: case 3:
      return RuleAst::Node(RuleKind::kConcat, {child(), child()});
    case 4: case 5:
      return RuleAst::Node(RuleKind::kUnion, {child(), child()});
    default:
      return RuleAst::Node(
          rng() % 2 ? RuleKind::kStar : RuleKind::kPlus, {child()});
  }
}

TEST(RuleCompilerTest, CompilationIsCompositional) {
  constexpr std::size_t kLimit = 5;
  std::mt19937 rng(1234);
  auto table = oracle::RandomAlphabet(3);
  auto window = [&](const RuleAst& ast) {
    return oracle::Window(CompileRules(ResultOnly(ast), table), kLimit);
  };
  for (int trial = 0; trial < 200; ++trial) {
    const RuleAst x = RandomAlgebraAst(rng, 2);
    const RuleAst y = RandomAlgebraAst(rng, 2);
    const Relation wx = window(x), wy = window(y);
    EXPECT_EQ(window(RuleAst::Node(RuleKind::kUnion, {x, y})),
              oracle::UnionOf(wx, wy));
    EXPECT_EQ(window(RuleAst::Node(RuleKind::kConcat, {x, y})),
              oracle::ConcatOf(wx, wy, kLimit));
    EXPECT_EQ(window(RuleAst::Node(RuleKind::kStar, {x})),
              oracle::StarOf(wx, kLimit));
    EXPECT_EQ(window(RuleAst::Node(RuleKind::kPlus, {x})),
              oracle::PlusOf(wx, kLimit));
    Relation opt = wx;
    opt.emplace("", "");
    EXPECT_EQ(window(RuleAst::Node(RuleKind::kOptional, {x})), opt);
  }
}

// ---- includes ----

class IncludeTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("morphfst_rules_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_ / "lex");
    std::filesystem::create_directories(dir_ / "other");
    Write(dir_ / "lex" / "nouns.txt", "ab\tX\nb\n");
    Write(dir_ / "other" / "nouns.txt", "c\n");
    Write(dir_ / "g.mrl", "#include \"lex/nouns.txt\"\n");
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  static void Write(const std::filesystem::path& p, const std::string& s) {
    std::ofstream(p, std::ios::binary) << s;
  }

  std::filesystem::path dir_;
};

TEST_F(IncludeTest, ResolvesAgainstRuleFileDirectory) {
  auto table = std::make_shared<SymbolTable>();
  const Transducer t = CompileRuleFile(dir_ / "g.mrl", table);
  EXPECT_EQ(EnumeratePairs(t, 4),
            (StringPairSet{{"ab<X>", "ab<X>"}, {"b", "b"}}));
}

TEST_F(IncludeTest, LexdirTakesPrecedence) {
  auto table = std::make_shared<SymbolTable>();
  const Transducer t = CompileRuleFile(dir_ / "g.mrl", table, dir_ / "other");
  EXPECT_EQ(EnumeratePairs(t, 4), (StringPairSet{{"c", "c"}}));
}

TEST_F(IncludeTest, MissingIncludeIsReported) {
  Write(dir_ / "bad.mrl", "#include \"lex/verbs.txt\"\n");
  auto table = std::make_shared<SymbolTable>();
  try {
    CompileRuleFile(dir_ / "bad.mrl", table);
    FAIL() << "expected IncludeNotFound";
  } catch (const IncludeNotFound& e) {
    EXPECT_EQ(e.path, "lex/verbs.txt");
  }
}

// ---- lexical strings ----

TEST(LexicalStringTest, InternSplitsTagsGreedily) {
  SymbolTable table;
  const auto ids = InternLexicalString("लडका<Noun><sg>", &table);
  ASSERT_EQ(ids.size(), 6u);
  EXPECT_EQ(table.Symbol(ids[0]), "ल");
  EXPECT_EQ(table.Symbol(ids[3]), "ा");
  EXPECT_EQ(table.Symbol(ids[4]), "<Noun>");
  EXPECT_EQ(table.Symbol(ids[5]), "<sg>");
  EXPECT_TRUE(InternLexicalString("", &table).empty());
  EXPECT_THROW(InternLexicalString("a<b", &table), UnterminatedTag);
}

}  // namespace
}  // namespace morphfst

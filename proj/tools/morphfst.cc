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

// morphfst: command-line front end for lexicon extraction, grammar
// compilation, morphological analysis/generation and POS tagging.
//
// Exit status: 0 on success (unknown words included), 1 on domain errors,
// 2 on usage errors.

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "morphfst/binary_io.h"
#include "morphfst/errors.h"
#include "morphfst/fst_io.h"
#include "morphfst/lexicon.h"
#include "morphfst/morph.h"
#include "morphfst/rule_compiler.h"
#include "morphfst/tag_corpus.h"
#include "morphfst/tag_model.h"
#include "morphfst/tag_trainer.h"
#include "morphfst/tagger.h"

namespace fs = std::filesystem;

namespace morphfst {
namespace {

constexpr int kExitDomainError = 1;
constexpr int kExitUsageError = 2;

bool UseColor() {
  const char* no_color = std::getenv("NO_COLOR");
  if (no_color != nullptr && no_color[0] != '\0') return false;
  return ::isatty(STDERR_FILENO) != 0;
}

void PrintError(std::string_view message) {
  if (UseColor()) {
    std::cerr << "\033[1;31merror:\033[0m " << message << '\n';
  } else {
    std::cerr << "error: " << message << '\n';
  }
}

std::string_view TrimAscii(std::string_view s) {
  const auto blank = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  };
  while (!s.empty() && blank(s.front())) s.remove_prefix(1);
  while (!s.empty() && blank(s.back())) s.remove_suffix(1);
  return s;
}

// Arguments as given, with "-" (or no arguments at all) standing for the
// lines of stdin. Blank items are dropped in both modes so that the two
// produce the same output.
template <typename Fn>
void ForEachInput(const std::vector<std::string>& args, Fn&& fn) {
  auto emit = [&](std::string_view item) {
    item = TrimAscii(item);
    if (!item.empty()) fn(item);
  };
  auto read_stdin = [&] {
    std::string line;
    while (std::getline(std::cin, line)) emit(line);
  };
  if (args.empty()) {
    read_stdin();
    return;
  }
  for (const std::string& arg : args) {
    if (arg == "-") {
      read_stdin();
    } else {
      emit(arg);
    }
  }
}

std::string RenderTagged(const TaggedSentence& sentence) {
  std::string out;
  for (const auto& [word, tag] : sentence) {
    if (!out.empty()) out += ' ';
    out += word;
    out += '/';
    out += tag;
  }
  return out;
}

std::string FormatAccuracy(std::string_view name, std::size_t correct,
                           std::size_t total, double accuracy) {
  char value[32];
  std::snprintf(value, sizeof value, "%.4f", accuracy);
  return std::string(name) + '\t' + value + '\t' + std::to_string(correct) +
         '/' + std::to_string(total);
}

// ---- subcommands ----

struct ExtractArgs {
  fs::path corpus;
  fs::path out;
};

void RunLexiconExtract(const ExtractArgs& args) {
  const std::string text = ReadFileBytes(args.corpus);
  const std::size_t shards =
      std::max(1u, std::thread::hardware_concurrency());
  const auto words = ExtractUniqueSortedParallel(text, shards);
  std::string out;
  for (const std::string& w : words) {
    out += w;
    out += '\n';
  }
  WriteFileAtomically(args.out, out);
  std::cout << words.size() << " unique words written to "
            << args.out.string() << '\n';
}

void RunLexiconStats(const fs::path& lexdir) {
  const ClassifiedLexicon lexicon = LoadClassifiedDirectory(lexdir);
  std::cout << "total base words\t" << lexicon.stats.total << '\n';
  for (PosClass pos : kAllPosClasses) {
    std::cout << PosClassFileStem(pos) << '\t'
              << lexicon.stats.per_class.at(pos) << '\n';
  }
}

struct CompileArgs {
  fs::path rules;
  std::optional<fs::path> lexdir;
  fs::path out;
};

void RunCompile(const CompileArgs& args) {
  auto symbols = std::make_shared<SymbolTable>();
  std::optional<Transducer> fst;
  try {
    fst = CompileRuleFile(args.rules, symbols, args.lexdir);
  } catch (const SyntaxError& e) {
    throw Error(args.rules.string() + ":" + e.what());
  } catch (const UndefinedVariable& e) {
    throw Error(args.rules.string() + ":" + e.what());
  } catch (const EmptyFile& e) {
    throw Error(args.rules.string() + ": " + e.what());
  }
  WriteTransducerFile(*fst, args.out);
  std::cout << args.out.string() << ": " << fst->NumStates() << " states, "
            << fst->NumTransitions() << " arcs, " << symbols->size()
            << " symbols\n";
}

struct MorphArgs {
  fs::path model;
  std::optional<fs::path> indeclinables;
  std::vector<std::string> items;
};

void RunAnalyze(const MorphArgs& args) {
  const MorphModel morph = MorphModel::Load(args.model, args.indeclinables);
  ForEachInput(args.items, [&](std::string_view word) {
    std::string line(word);
    const auto analyses = morph.Analyze(word);
    if (analyses.empty()) line += "\t?";
    for (const Analysis& a : analyses) line += '\t' + a.Render();
    std::cout << line << '\n';
  });
}

void RunGenerate(const MorphArgs& args) {
  const MorphModel morph = MorphModel::Load(args.model);
  ForEachInput(args.items, [&](std::string_view lexical) {
    std::string line(lexical);
    const auto surfaces = morph.Generate(lexical);
    if (surfaces.empty()) line += "\t?";
    for (const std::string& s : surfaces) line += '\t' + s;
    std::cout << line << '\n';
  });
}

struct TrainArgs {
  fs::path corpus;
  fs::path out;
  TrainConfig config;
};

void RunTrain(const TrainArgs& args) {
  const TaggedCorpus corpus = ReadTaggedCorpus(args.corpus);
  const TagModel model = Train(corpus, args.config);
  WriteTagModelFile(model, args.out);
  std::cout << args.out.string() << ": " << model.tagset.size() << " tags, "
            << model.weights.size() << " features, "
            << model.dictionary.size() << " dictionary words\n";
}

struct TagArgs {
  fs::path model;
  fs::path grammar;
  fs::path corpus;
  std::size_t beam = kDefaultBeamWidth;
  std::vector<std::string> sentences;
};

void RunTag(const TagArgs& args) {
  const TagModel model = ReadTagModelFile(args.model);
  const MorphModel morph = MorphModel::Load(args.grammar);
  ForEachInput(args.sentences, [&](std::string_view sentence) {
    std::cout << RenderTagged(TagSentence(model, &morph, sentence, args.beam))
              << '\n';
  });
}

void RunEval(const TagArgs& args) {
  const TagModel model = ReadTagModelFile(args.model);
  const MorphModel morph = MorphModel::Load(args.grammar);
  const TaggedCorpus gold = ReadTaggedCorpus(args.corpus);
  const Evaluation e = Evaluate(model, &morph, gold, args.beam);
  std::cout << FormatAccuracy("known", e.known_correct, e.known_total,
                              e.known_accuracy())
            << '\n'
            << FormatAccuracy("unknown", e.unknown_correct, e.unknown_total,
                              e.unknown_accuracy())
            << '\n'
            << FormatAccuracy("overall", e.known_correct + e.unknown_correct,
                              e.known_total + e.unknown_total,
                              e.overall_accuracy())
            << '\n';
}

int Run(int argc, char** argv) {
  CLI::App app{"Finite-state morphology and POS tagging for Hindi."};
  app.name("morphfst");
  app.require_subcommand(1);

  ExtractArgs extract;
  auto* cmd_extract = app.add_subcommand(
      "lexicon-extract", "Extract the sorted unique words of a raw corpus.");
  cmd_extract->add_option("corpus", extract.corpus, "UTF-8 text")
      ->required()
      ->check(CLI::ExistingFile);
  cmd_extract->add_option("-o,--output", extract.out, "Word list")->required();

  fs::path stats_lexdir;
  auto* cmd_stats = app.add_subcommand(
      "lexicon-stats", "Count base words per classified lexicon file.");
  cmd_stats->add_option("--lexdir", stats_lexdir, "Directory of lex/*.txt")
      ->required()
      ->check(CLI::ExistingDirectory);

  CompileArgs compile;
  auto* cmd_compile =
      app.add_subcommand("compile", "Compile a rule file to a transducer.");
  cmd_compile->add_option("-r,--rules", compile.rules, "Rule file (.mrl)")
      ->required()
      ->check(CLI::ExistingFile);
  cmd_compile
      ->add_option("--lexdir", compile.lexdir,
                   "Directory searched first for included lexicons")
      ->check(CLI::ExistingDirectory);
  cmd_compile->add_option("-o,--output", compile.out, "Transducer file")
      ->required();

  MorphArgs analyze;
  auto* cmd_analyze =
      app.add_subcommand("analyze", "Analyze surface words ('-' = stdin).");
  cmd_analyze->add_option("-m,--model", analyze.model, "Transducer file")
      ->required()
      ->check(CLI::ExistingFile);
  cmd_analyze
      ->add_option("--indecl", analyze.indeclinables,
                   "Indeclinable dictionary (word TAB analysis)")
      ->check(CLI::ExistingFile);
  cmd_analyze->add_option("words", analyze.items, "Words");

  MorphArgs generate;
  auto* cmd_generate = app.add_subcommand(
      "generate", "Generate surface words from analyses ('-' = stdin).");
  cmd_generate->add_option("-m,--model", generate.model, "Transducer file")
      ->required()
      ->check(CLI::ExistingFile);
  cmd_generate->add_option("lexical", generate.items, "Analyses");

  TrainArgs train;
  auto* cmd_train = app.add_subcommand("train", "Train a tag model.");
  cmd_train->add_option("-c,--corpus", train.corpus, "Tagged corpus")
      ->required()
      ->check(CLI::ExistingFile);
  cmd_train->add_option("-o,--output", train.out, "Tag model file")
      ->required();
  cmd_train
      ->add_option("--lambda", train.config.l2_lambda, "L2 regularization")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd_train->add_option("--epochs", train.config.epochs, "Gradient steps")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd_train->add_option("--step", train.config.step, "Step size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  TagArgs tag;
  auto* cmd_tag = app.add_subcommand("tag", "Tag sentences ('-' = stdin).");
  cmd_tag->add_option("-m,--model", tag.model, "Tag model file")
      ->required()
      ->check(CLI::ExistingFile);
  cmd_tag->add_option("-f,--fst", tag.grammar, "Transducer file")
      ->required()
      ->check(CLI::ExistingFile);
  cmd_tag->add_option("--beam", tag.beam, "Beam width")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd_tag->add_option("sentences", tag.sentences, "Sentences");

  TagArgs eval;
  auto* cmd_eval =
      app.add_subcommand("eval", "Tagging accuracy against a gold corpus.");
  cmd_eval->add_option("-m,--model", eval.model, "Tag model file")
      ->required()
      ->check(CLI::ExistingFile);
  cmd_eval->add_option("-f,--fst", eval.grammar, "Transducer file")
      ->required()
      ->check(CLI::ExistingFile);
  cmd_eval->add_option("-c,--corpus", eval.corpus, "Gold tagged corpus")
      ->required()
      ->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsageError;
  }

  try {
    if (*cmd_extract) RunLexiconExtract(extract);
    if (*cmd_stats) RunLexiconStats(stats_lexdir);
    if (*cmd_compile) RunCompile(compile);
    if (*cmd_analyze) RunAnalyze(analyze);
    if (*cmd_generate) RunGenerate(generate);
    if (*cmd_train) RunTrain(train);
    if (*cmd_tag) RunTag(tag);
    if (*cmd_eval) RunEval(eval);
  } catch (const Error& e) {
    std::cout.flush();
    PrintError(e.what());
    return kExitDomainError;
  } catch (const std::exception& e) {
    std::cout.flush();
    PrintError(e.what());
    return kExitDomainError;
  }
  return 0;
}

}  // namespace
}  // namespace morphfst

int main(int argc, char** argv) { return morphfst::Run(argc, argv); }

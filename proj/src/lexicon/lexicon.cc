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

#include "morphfst/lexicon.h"

#include <algorithm>
#include <iterator>
#include <set>
#include <thread>

#include "morphfst/binary_io.h"
#include "morphfst/errors.h"
#include "morphfst/operations.h"
#include "morphfst/unicode.h"

namespace morphfst {
namespace {

struct PosInfo {
  PosClass pos;
  std::string_view stem;
  std::string_view name;
};

constexpr PosInfo kPosInfo[] = {
    {PosClass::kNoun, "nouns", "Noun"},
    {PosClass::kPronoun, "pronouns", "Pronoun"},
    {PosClass::kAdjective, "adjectives", "Adjective"},
    {PosClass::kVerb, "verbs", "Verb"},
    {PosClass::kAdverb, "adverbs", "Adverb"},
    {PosClass::kParticle, "particles", "Particle"},
    {PosClass::kAdjectiveNoun, "adj_noun", "AdjectiveNoun"},
};

bool IsWordSeparator(char32_t c) {
  switch (c) {
    case ' ': case '\t': case '\n': case '\r': case '\f': case '\v':
    case 0x00A0:                         // no-break space
    case 0x0964:                         // danda
    case '?': case '!': case ',': case '"': case '\'': case '(': case ')':
      return true;
    default:
      return false;
  }
}

// Splitting assumes `corpus` is valid UTF-8.
std::vector<std::string> ExtractValidated(std::string_view corpus) {
  std::set<std::string> words;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) {
      words.insert(NormalizeNfc(current));
      current.clear();
    }
  };
  for (char32_t c : DecodeUtf8(corpus)) {
    if (IsWordSeparator(c)) {
      flush();
    } else {
      AppendUtf8(c, &current);
    }
  }
  flush();
  return {words.begin(), words.end()};
}

std::string_view Trim(std::string_view s) {
  const auto is_blank = [](char c) {
    return c == ' ' || c == '\t' || c == '\r';
  };
  while (!s.empty() && is_blank(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_blank(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string_view PosClassFileStem(PosClass pos) {
  for (const auto& info : kPosInfo) {
    if (info.pos == pos) return info.stem;
  }
  return "";
}

std::string_view PosClassName(PosClass pos) {
  for (const auto& info : kPosInfo) {
    if (info.pos == pos) return info.name;
  }
  return "";
}

std::optional<PosClass> PosClassFromFileStem(std::string_view stem) {
  for (const auto& info : kPosInfo) {
    if (info.stem == stem) return info.pos;
  }
  return std::nullopt;
}

std::vector<std::string> ExtractUniqueSorted(std::string_view corpus) {
  ValidateUtf8(corpus);
  return ExtractValidated(corpus);
}

std::vector<std::string> ExtractUniqueSorted(std::istream& corpus) {
  const std::string text(std::istreambuf_iterator<char>(corpus), {});
  return ExtractUniqueSorted(text);
}

std::vector<std::string> MergeUniqueSorted(
    const std::vector<std::vector<std::string>>& lists) {
  std::vector<std::string> merged;
  for (const auto& list : lists) {
    std::vector<std::string> next;
    next.reserve(merged.size() + list.size());
    std::set_union(merged.begin(), merged.end(), list.begin(), list.end(),
                   std::back_inserter(next));
    merged = std::move(next);
  }
  return merged;
}

std::vector<std::string> ExtractUniqueSortedParallel(std::string_view corpus,
                                                     std::size_t shards) {
  ValidateUtf8(corpus);
  shards = std::max<std::size_t>(1, shards);
  // Cut only at ASCII whitespace, which never occurs inside a multi-byte
  // sequence and always separates words.
  std::vector<std::string_view> slices;
  std::size_t begin = 0;
  for (std::size_t k = 1; k <= shards && begin < corpus.size(); ++k) {
    std::size_t end = k == shards ? corpus.size() : corpus.size() * k / shards;
    end = std::max(end, begin);
    while (end < corpus.size() && corpus[end] != ' ' && corpus[end] != '\n' &&
           corpus[end] != '\t' && corpus[end] != '\r') {
      ++end;
    }
    slices.push_back(corpus.substr(begin, end - begin));
    begin = end;
  }
  std::vector<std::vector<std::string>> results(slices.size());
  std::vector<std::thread> workers;
  for (std::size_t i = 0; i < slices.size(); ++i) {
    workers.emplace_back(
        [&, i] { results[i] = ExtractValidated(slices[i]); });
  }
  for (auto& w : workers) w.join();
  return MergeUniqueSorted(results);
}

std::vector<LexiconEntry> ParseLexicon(std::string_view text, PosClass pos) {
  ValidateUtf8(text);
  std::vector<LexiconEntry> entries;
  std::set<std::string> seen;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (const auto comment = line.find('%'); comment != std::string_view::npos) {
      line = line.substr(0, comment);
    }
    line = Trim(line);
    if (line.empty()) continue;

    LexiconEntry entry;
    entry.pos_class = pos;
    const auto tab = line.find('\t');
    entry.root = NormalizeNfc(Trim(line.substr(0, tab)));
    if (tab != std::string_view::npos) {
      const std::string_view cls = Trim(line.substr(tab + 1));
      if (cls.find_first_of("<>\t ") != std::string_view::npos) {
        throw Error("line " + std::to_string(line_no) +
                    ": invalid continuation class '" + std::string(cls) + "'");
      }
      if (!cls.empty()) entry.infl_class = NormalizeNfc(cls);
    }
    if (!seen.insert(entry.root).second) {
      throw DuplicateRoot(std::string(PosClassName(pos)), entry.root, line_no);
    }
    entries.push_back(std::move(entry));
    if (end == text.size()) break;
  }
  return entries;
}

std::vector<LexiconEntry> ReadLexiconFile(const std::filesystem::path& path,
                                          PosClass pos) {
  if (!std::filesystem::exists(path)) {
    throw Error("lexicon file not found: " + path.string());
  }
  try {
    return ParseLexicon(ReadFileBytes(path), pos);
  } catch (const DuplicateRoot&) {
    throw;
  } catch (const InvalidUtf8&) {
    throw;
  } catch (const Error& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

LexiconStats ComputeStats(const std::vector<LexiconEntry>& entries) {
  LexiconStats stats;
  for (PosClass pos : kAllPosClasses) stats.per_class[pos] = 0;
  std::set<std::string> distinct;
  for (const LexiconEntry& e : entries) {
    ++stats.per_class[e.pos_class];
    distinct.insert(e.root);
  }
  stats.total = distinct.size();
  return stats;
}

ClassifiedLexicon LoadClassified(
    const std::map<PosClass, std::filesystem::path>& path_per_class) {
  ClassifiedLexicon lexicon;
  for (const auto& [pos, path] : path_per_class) {
    auto entries = ReadLexiconFile(path, pos);
    lexicon.entries.insert(lexicon.entries.end(),
                           std::make_move_iterator(entries.begin()),
                           std::make_move_iterator(entries.end()));
  }
  lexicon.stats = ComputeStats(lexicon.entries);
  return lexicon;
}

ClassifiedLexicon LoadClassifiedDirectory(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw Error("not a directory: " + dir.string());
  }
  std::map<PosClass, std::filesystem::path> paths;
  for (PosClass pos : kAllPosClasses) {
    auto path = dir / (std::string(PosClassFileStem(pos)) + ".txt");
    if (std::filesystem::exists(path)) paths[pos] = std::move(path);
  }
  return LoadClassified(paths);
}

Transducer CompileLexiconFst(const std::vector<LexiconEntry>& entries,
                             const std::shared_ptr<SymbolTable>& symbols) {
  // Trie first; Minimize then shares suffixes as well.
  std::vector<Transition> arcs;
  std::map<std::pair<StateId, SymbolId>, StateId> children;
  std::vector<StateId> finals;
  StateId num_states = 1;
  for (const LexiconEntry& entry : entries) {
    std::vector<SymbolId> path;
    for (const std::string& scalar : SplitScalars(entry.root)) {
      path.push_back(symbols->Intern(scalar));
    }
    if (entry.infl_class) {
      path.push_back(symbols->Intern("<" + *entry.infl_class + ">"));
    }
    StateId state = 0;
    for (SymbolId sym : path) {
      auto [it, inserted] = children.try_emplace({state, sym}, num_states);
      if (inserted) {
        arcs.push_back({state, {sym, sym}, num_states});
        ++num_states;
      }
      state = it->second;
    }
    finals.push_back(state);
  }
  return Minimize(Transducer::Build(num_states, 0, std::move(finals),
                                    std::move(arcs), symbols));
}

}  // namespace morphfst

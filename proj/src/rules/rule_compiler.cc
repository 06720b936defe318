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

#include "morphfst/rule_compiler.h"

#include <map>
#include <string>

#include "morphfst/binary_io.h"
#include "morphfst/errors.h"
#include "morphfst/lexicon.h"
#include "morphfst/operations.h"
#include "morphfst/rule_parser.h"

namespace morphfst {
namespace {

class Compiler {
 public:
  Compiler(std::shared_ptr<SymbolTable> symbols, const CompileOptions& options)
      : symbols_(std::move(symbols)), options_(options) {}

  Transducer Run(const RuleFile& file) {
    for (const RuleDefinition& def : file.definitions) {
      env_.insert_or_assign(def.name, Minimize(Compile(def.body)));
    }
    return Minimize(Compile(file.result));
  }

 private:
  Transducer Arc(SymbolId in, SymbolId out) const {
    if (in == kEpsilon && out == kEpsilon) {
      return Transducer::EpsilonMachine(symbols_);
    }
    return Transducer::Build(2, 0, {1}, {{0, {in, out}, 1}}, symbols_);
  }

  Transducer Compile(const RuleAst& node) {
    switch (node.kind) {
      case RuleKind::kLiteral: {
        const SymbolId id = symbols_->Intern(node.text);
        return Arc(id, id);
      }
      case RuleKind::kPair:
        return Arc(symbols_->Intern(node.text), symbols_->Intern(node.output));
      case RuleKind::kCharClass: {
        std::vector<Transition> arcs;
        for (const std::string& c : node.chars) {
          const SymbolId id = symbols_->Intern(c);
          arcs.push_back({0, {id, id}, 1});
        }
        return Transducer::Build(2, 0, {1}, std::move(arcs), symbols_);
      }
      case RuleKind::kConcat: {
        Transducer t = Compile(node.children.at(0));
        for (std::size_t i = 1; i < node.children.size(); ++i) {
          t = Concat(t, Compile(node.children[i]));
        }
        return t;
      }
      case RuleKind::kUnion: {
        Transducer t = Compile(node.children.at(0));
        for (std::size_t i = 1; i < node.children.size(); ++i) {
          t = Union(t, Compile(node.children[i]));
        }
        return t;
      }
      case RuleKind::kStar:
        return Closure(Compile(node.children.at(0)), ClosureKind::kStar);
      case RuleKind::kPlus:
        return Closure(Compile(node.children.at(0)), ClosureKind::kPlus);
      case RuleKind::kOptional:
        return Closure(Compile(node.children.at(0)), ClosureKind::kOptional);
      case RuleKind::kCompose:
        // Composition is the expensive step; shrink the operands first.
        return Compose(Minimize(Compile(node.children.at(0))),
                       Minimize(Compile(node.children.at(1))));
      case RuleKind::kVarRef: {
        const auto it = env_.find(node.text);
        if (it == env_.end()) throw UndefinedVariable(node.text, 0, 0);
        return it->second;
      }
      case RuleKind::kInclude:
        return CompileInclude(node.text);
    }
    throw Error("unhandled rule node");
  }

  Transducer CompileInclude(const std::string& written) {
    const std::filesystem::path relative(written);
    std::vector<std::filesystem::path> candidates;
    if (options_.lexdir) {
      candidates.push_back(*options_.lexdir / relative.filename());
    }
    candidates.push_back(relative.is_absolute() ? relative
                                                : options_.base_dir / relative);
    for (const auto& path : candidates) {
      if (!std::filesystem::is_regular_file(path)) continue;
      const PosClass pos = PosClassFromFileStem(path.stem().string())
                               .value_or(PosClass::kNoun);
      const auto entries = ReadLexiconFile(path, pos);
      if (entries.empty()) return Transducer::Empty(symbols_);
      return CompileLexiconFst(entries, symbols_);
    }
    throw IncludeNotFound(written);
  }

  std::shared_ptr<SymbolTable> symbols_;
  CompileOptions options_;
  std::map<std::string, Transducer> env_;
};

}  // namespace

Transducer CompileRules(const RuleFile& file,
                        const std::shared_ptr<SymbolTable>& symbols,
                        const CompileOptions& options) {
  return Compiler(symbols, options).Run(file);
}

Transducer CompileRuleFile(const std::filesystem::path& path,
                           const std::shared_ptr<SymbolTable>& symbols,
                           const std::optional<std::filesystem::path>& lexdir) {
  if (!std::filesystem::is_regular_file(path)) {
    throw Error("rule file not found: " + path.string());
  }
  const RuleFile file = ParseRules(ReadFileBytes(path));
  CompileOptions options;
  options.base_dir = path.parent_path().empty() ? "." : path.parent_path();
  options.lexdir = lexdir;
  return CompileRules(file, symbols, options);
}

}  // namespace morphfst

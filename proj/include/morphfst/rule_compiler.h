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

#ifndef MORPHFST_RULE_COMPILER_H_
#define MORPHFST_RULE_COMPILER_H_

#include <filesystem>
#include <memory>
#include <optional>

#include "morphfst/rule_ast.h"
#include "morphfst/symbol_table.h"
#include "morphfst/transducer.h"

namespace morphfst {

struct CompileOptions {
  // Directory that relative #include paths resolve against.
  std::filesystem::path base_dir = ".";
  // When set, an include's file name is looked up here before base_dir.
  std::optional<std::filesystem::path> lexdir;
};

// Compiles `file` to a minimized transducer, interning any new symbols into
// `symbols`. An #include names a classified lexicon file; its part of
// speech comes from the file stem (nouns.txt, verbs.txt, ...). Throws
// IncludeNotFound.
Transducer CompileRules(const RuleFile& file,
                        const std::shared_ptr<SymbolTable>& symbols,
                        const CompileOptions& options = {});

// Reads, parses and compiles a .mrl file; includes resolve against the
// file's own directory.
Transducer CompileRuleFile(
    const std::filesystem::path& path,
    const std::shared_ptr<SymbolTable>& symbols,
    const std::optional<std::filesystem::path>& lexdir = std::nullopt);

}  // namespace morphfst

#endif  // MORPHFST_RULE_COMPILER_H_

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

// The lexical form of a word: a root followed by feature tags, rendered
// with no separators, e.g. "लडका<Noun><masculine><sg>".

#ifndef MORPHFST_ANALYSIS_H_
#define MORPHFST_ANALYSIS_H_

#include <string>
#include <string_view>
#include <vector>

namespace morphfst {

struct Analysis {
  std::string root;               // non-empty
  std::vector<std::string> tags;  // without angle brackets; non-empty

  std::string Render() const;

  auto operator<=>(const Analysis&) const = default;
  bool operator==(const Analysis&) const = default;
};

// Parses a rendered analysis after NFC normalization. The root may not
// contain tags and at least one tag must follow it. Throws MalformedAnalysis.
Analysis ParseAnalysis(std::string_view text);

}  // namespace morphfst

#endif  // MORPHFST_ANALYSIS_H_

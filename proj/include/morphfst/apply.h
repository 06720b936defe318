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

#ifndef MORPHFST_APPLY_H_
#define MORPHFST_APPLY_H_

#include <set>
#include <string>
#include <string_view>
#include <utility>

#include "morphfst/transducer.h"

namespace morphfst {

// (input, output) string pairs. std::set over UTF-8 std::string orders by
// input then output, by Unicode scalar value.
using StringPair = std::pair<std::string, std::string>;
using StringPairSet = std::set<StringPair>;

// All pairs whose input side is exactly `input`. Input-epsilon arcs are
// followed freely.
//
// Throws UnknownSymbol if `input` has a symbol absent from the table, and
// EpsilonCycle if an input-epsilon cycle that writes output lies on an
// accepting path for this input.
StringPairSet Apply(const Transducer& fst, std::string_view input);

// Every pair read along an accepting path of at most `max_len` arcs.
StringPairSet EnumeratePairs(const Transducer& fst, std::size_t max_len);

}  // namespace morphfst

#endif  // MORPHFST_APPLY_H_

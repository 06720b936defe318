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

// UTF-8 helpers shared by every module. All strings inside the library are
// UTF-8 in NFC; byte-wise std::string ordering then coincides with ordering
// by Unicode scalar values.

#ifndef MORPHFST_UNICODE_H_
#define MORPHFST_UNICODE_H_

#include <string>
#include <string_view>
#include <vector>

namespace morphfst {

// Decodes `text` into scalar values. Throws InvalidUtf8 with the byte offset
// of the first bad sequence.
std::vector<char32_t> DecodeUtf8(std::string_view text);

void AppendUtf8(char32_t scalar, std::string* out);
std::string EncodeUtf8(char32_t scalar);

// Splits into one string per scalar value.
std::vector<std::string> SplitScalars(std::string_view text);

// Throws InvalidUtf8 if `text` is not well-formed.
void ValidateUtf8(std::string_view text);

// Canonical composition (NFC). Throws InvalidUtf8 on malformed input.
std::string NormalizeNfc(std::string_view text);

std::size_t ScalarLength(std::string_view text);

}  // namespace morphfst

#endif  // MORPHFST_UNICODE_H_

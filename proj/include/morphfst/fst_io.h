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

// Binary transducer files.
//
//   "MFST"                       4 bytes
//   version                      u16
//   symbol count                 u32
//     per symbol: byte length    u32, then UTF-8 bytes (in id order)
//   state count                  u32
//   start                        u32
//   final count                  u32, then final ids (u32, ascending)
//   transition count             u32
//     per transition: from, input, output, to   (u32 each)
//
// All integers little-endian. Transitions are written in the machine's
// canonical sorted order, so read-then-write reproduces the input bytes.

#ifndef MORPHFST_FST_IO_H_
#define MORPHFST_FST_IO_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "morphfst/transducer.h"

namespace morphfst {

inline constexpr std::uint16_t kFstFormatVersion = 1;

std::string SerializeTransducer(const Transducer& fst);

// Builds a fresh SymbolTable from the file. Throws FormatError.
Transducer DeserializeTransducer(std::string_view bytes);

void WriteTransducerFile(const Transducer& fst,
                         const std::filesystem::path& path);
Transducer ReadTransducerFile(const std::filesystem::path& path);

}  // namespace morphfst

#endif  // MORPHFST_FST_IO_H_

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

// Little-endian byte streams for the model file formats, and file helpers.

#ifndef MORPHFST_BINARY_IO_H_
#define MORPHFST_BINARY_IO_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>

namespace morphfst {

class ByteWriter {
 public:
  void Bytes(std::string_view bytes) { buffer_.append(bytes); }
  void U16(std::uint16_t v);
  void U32(std::uint32_t v);
  void F64(double v);
  // u32 byte length, then the bytes.
  void String(std::string_view s);

  std::string Take() { return std::move(buffer_); }

 private:
  std::string buffer_;
};

// Throws FormatError on truncation.
class ByteReader {
 public:
  explicit ByteReader(std::string_view bytes) : bytes_(bytes) {}

  std::string_view Bytes(std::size_t n);
  std::uint16_t U16();
  std::uint32_t U32();
  double F64();
  std::string String();
  // Reads a u32 element count and checks that count * element_size bytes
  // remain, so corrupt counts cannot trigger huge allocations.
  std::size_t Count(std::size_t element_size);

  bool AtEnd() const { return pos_ == bytes_.size(); }

 private:
  std::string_view bytes_;
  std::size_t pos_ = 0;
};

std::string ReadFileBytes(const std::filesystem::path& path);

// Writes to a sibling temporary file and renames it over `path`, so a failed
// write never leaves a partial file behind.
void WriteFileAtomically(const std::filesystem::path& path,
                         std::string_view bytes);

}  // namespace morphfst

#endif  // MORPHFST_BINARY_IO_H_

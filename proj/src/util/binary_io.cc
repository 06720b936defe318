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

#include "morphfst/binary_io.h"

#include <bit>
#include <fstream>
#include <iterator>
#include <system_error>

#include <unistd.h>

#include "morphfst/errors.h"

namespace morphfst {

void ByteWriter::U16(std::uint16_t v) {
  buffer_.push_back(static_cast<char>(v & 0xFF));
  buffer_.push_back(static_cast<char>(v >> 8));
}

void ByteWriter::U32(std::uint32_t v) {
  for (int shift = 0; shift < 32; shift += 8) {
    buffer_.push_back(static_cast<char>((v >> shift) & 0xFF));
  }
}

void ByteWriter::F64(double v) {
  const auto bits = std::bit_cast<std::uint64_t>(v);
  for (int shift = 0; shift < 64; shift += 8) {
    buffer_.push_back(static_cast<char>((bits >> shift) & 0xFF));
  }
}

void ByteWriter::String(std::string_view s) {
  U32(static_cast<std::uint32_t>(s.size()));
  buffer_.append(s);
}

std::string_view ByteReader::Bytes(std::size_t n) {
  if (bytes_.size() - pos_ < n) throw FormatError("unexpected end of file");
  const std::string_view out = bytes_.substr(pos_, n);
  pos_ += n;
  return out;
}

std::uint16_t ByteReader::U16() {
  const std::string_view b = Bytes(2);
  return static_cast<std::uint16_t>(static_cast<unsigned char>(b[0]) |
                                    (static_cast<unsigned char>(b[1]) << 8));
}

std::uint32_t ByteReader::U32() {
  const std::string_view b = Bytes(4);
  std::uint32_t v = 0;
  for (int i = 3; i >= 0; --i) {
    v = (v << 8) | static_cast<unsigned char>(b[i]);
  }
  return v;
}

double ByteReader::F64() {
  const std::string_view b = Bytes(8);
  std::uint64_t bits = 0;
  for (int i = 7; i >= 0; --i) {
    bits = (bits << 8) | static_cast<unsigned char>(b[i]);
  }
  return std::bit_cast<double>(bits);
}

std::string ByteReader::String() {
  const std::uint32_t n = U32();
  return std::string(Bytes(n));
}

std::size_t ByteReader::Count(std::size_t element_size) {
  const std::uint32_t n = U32();
  if (element_size > 0 && (bytes_.size() - pos_) / element_size < n) {
    throw FormatError("element count exceeds file size");
  }
  return n;
}

std::string ReadFileBytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

void WriteFileAtomically(const std::filesystem::path& path,
                         std::string_view bytes) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) {
      out.close();
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw Error("write failed: " + path.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw Error("cannot rename into " + path.string() + ": " + ec.message());
  }
}

}  // namespace morphfst

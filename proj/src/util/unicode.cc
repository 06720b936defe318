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

#include "morphfst/unicode.h"

#include <unicode/normalizer2.h>
#include <unicode/unistr.h>

#include "morphfst/errors.h"

namespace morphfst {
namespace {

// Returns the scalar starting at text[*pos] and advances *pos, or throws.
char32_t NextScalar(std::string_view text, std::size_t* pos) {
  const std::size_t start = *pos;
  const auto lead = static_cast<unsigned char>(text[start]);
  if (lead < 0x80) {
    *pos = start + 1;
    return lead;
  }
  int extra;
  char32_t value;
  char32_t min_value;
  if ((lead & 0xE0) == 0xC0) {
    extra = 1;
    value = lead & 0x1F;
    min_value = 0x80;
  } else if ((lead & 0xF0) == 0xE0) {
    extra = 2;
    value = lead & 0x0F;
    min_value = 0x800;
  } else if ((lead & 0xF8) == 0xF0) {
    extra = 3;
    value = lead & 0x07;
    min_value = 0x10000;
  } else {
    throw InvalidUtf8(start);
  }
  if (start + extra >= text.size()) throw InvalidUtf8(start);
  for (int k = 1; k <= extra; ++k) {
    const auto c = static_cast<unsigned char>(text[start + k]);
    if ((c & 0xC0) != 0x80) throw InvalidUtf8(start);
    value = (value << 6) | (c & 0x3F);
  }
  if (value < min_value || value > 0x10FFFF ||
      (value >= 0xD800 && value <= 0xDFFF)) {
    throw InvalidUtf8(start);
  }
  *pos = start + 1 + extra;
  return value;
}

}  // namespace

std::vector<char32_t> DecodeUtf8(std::string_view text) {
  std::vector<char32_t> out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) out.push_back(NextScalar(text, &pos));
  return out;
}

void AppendUtf8(char32_t c, std::string* out) {
  if (c < 0x80) {
    out->push_back(static_cast<char>(c));
  } else if (c < 0x800) {
    out->push_back(static_cast<char>(0xC0 | (c >> 6)));
    out->push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else if (c < 0x10000) {
    out->push_back(static_cast<char>(0xE0 | (c >> 12)));
    out->push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else {
    out->push_back(static_cast<char>(0xF0 | (c >> 18)));
    out->push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (c & 0x3F)));
  }
}

std::string EncodeUtf8(char32_t scalar) {
  std::string out;
  AppendUtf8(scalar, &out);
  return out;
}

std::vector<std::string> SplitScalars(std::string_view text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t start = pos;
    NextScalar(text, &pos);
    out.emplace_back(text.substr(start, pos - start));
  }
  return out;
}

void ValidateUtf8(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size()) NextScalar(text, &pos);
}

std::string NormalizeNfc(std::string_view text) {
  ValidateUtf8(text);
  bool ascii = true;
  for (char c : text) {
    if (static_cast<unsigned char>(c) >= 0x80) {
      ascii = false;
      break;
    }
  }
  if (ascii) return std::string(text);

  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) throw Error("ICU NFC normalizer unavailable");
  const icu::UnicodeString source = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  const icu::UnicodeString normalized = nfc->normalize(source, status);
  if (U_FAILURE(status)) throw Error("NFC normalization failed");
  std::string out;
  normalized.toUTF8String(out);
  return out;
}

std::size_t ScalarLength(std::string_view text) {
  std::size_t n = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    NextScalar(text, &pos);
    ++n;
  }
  return n;
}

}  // namespace morphfst

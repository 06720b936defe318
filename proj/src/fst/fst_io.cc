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

#include "morphfst/fst_io.h"

#include <memory>
#include <vector>

#include "morphfst/binary_io.h"
#include "morphfst/errors.h"

namespace morphfst {

std::string SerializeTransducer(const Transducer& fst) {
  ByteWriter out;
  out.Bytes("MFST");
  out.U16(kFstFormatVersion);
  const SymbolTable& table = fst.symbol_table();
  out.U32(static_cast<std::uint32_t>(table.size()));
  for (const std::string& symbol : table.entries()) out.String(symbol);
  out.U32(static_cast<std::uint32_t>(fst.NumStates()));
  out.U32(fst.Start());
  out.U32(static_cast<std::uint32_t>(fst.Finals().size()));
  for (StateId f : fst.Finals()) out.U32(f);
  out.U32(static_cast<std::uint32_t>(fst.NumTransitions()));
  for (const Transition& t : fst.Transitions()) {
    out.U32(t.from);
    out.U32(t.label.input);
    out.U32(t.label.output);
    out.U32(t.to);
  }
  return out.Take();
}

Transducer DeserializeTransducer(std::string_view bytes) {
  ByteReader in(bytes);
  if (in.Bytes(4) != "MFST") throw FormatError("not a transducer file");
  const std::uint16_t version = in.U16();
  if (version != kFstFormatVersion) {
    throw FormatError("unsupported transducer format version " +
                      std::to_string(version));
  }
  auto table = std::make_shared<SymbolTable>();
  const std::uint32_t num_symbols = in.U32();
  if (num_symbols == 0) throw FormatError("symbol table is empty");
  for (std::uint32_t i = 0; i < num_symbols; ++i) {
    const std::string symbol = in.String();
    if (i == 0) {
      if (symbol != kEpsilonSymbol) throw FormatError("symbol 0 is not <>");
      continue;
    }
    if (table->Find(symbol)) throw FormatError("duplicate symbol " + symbol);
    try {
      table->Intern(symbol);
    } catch (const Error& e) {
      throw FormatError(e.what());
    }
  }
  const std::uint32_t num_states = in.U32();
  const std::uint32_t start = in.U32();
  std::vector<StateId> finals(in.Count(4));
  for (auto& f : finals) f = in.U32();
  std::vector<Transition> arcs(in.Count(16));
  for (auto& t : arcs) {
    t.from = in.U32();
    t.label.input = in.U32();
    t.label.output = in.U32();
    t.to = in.U32();
  }
  if (!in.AtEnd()) throw FormatError("trailing bytes after transducer");
  return Transducer::Build(num_states, start, std::move(finals),
                           std::move(arcs), std::move(table));
}

void WriteTransducerFile(const Transducer& fst,
                         const std::filesystem::path& path) {
  WriteFileAtomically(path, SerializeTransducer(fst));
}

Transducer ReadTransducerFile(const std::filesystem::path& path) {
  try {
    return DeserializeTransducer(ReadFileBytes(path));
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

}  // namespace morphfst

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

#include "morphfst/transducer.h"

#include <algorithm>
#include <utility>

#include "morphfst/errors.h"

namespace morphfst {

Transducer Transducer::Build(std::size_t num_states, StateId start,
                             std::vector<StateId> finals,
                             std::vector<Transition> transitions,
                             std::shared_ptr<const SymbolTable> symbols) {
  if (!symbols) throw Error("transducer requires a symbol table");
  if (start >= num_states) throw InvalidStateId(0, start);
  for (std::size_t i = 0; i < finals.size(); ++i) {
    if (finals[i] >= num_states) throw InvalidStateId(i, finals[i]);
  }
  const std::size_t alphabet = symbols->size();
  for (std::size_t i = 0; i < transitions.size(); ++i) {
    const Transition& t = transitions[i];
    if (t.from >= num_states) throw InvalidStateId(i, t.from);
    if (t.to >= num_states) throw InvalidStateId(i, t.to);
    if (t.label.input >= alphabet) throw InvalidSymbolId(i, t.label.input);
    if (t.label.output >= alphabet) throw InvalidSymbolId(i, t.label.output);
  }

  std::sort(finals.begin(), finals.end());
  finals.erase(std::unique(finals.begin(), finals.end()), finals.end());
  std::sort(transitions.begin(), transitions.end());
  transitions.erase(std::unique(transitions.begin(), transitions.end()),
                    transitions.end());

  Transducer fst;
  fst.num_states_ = num_states;
  fst.start_ = start;
  fst.is_final_.assign(num_states, 0);
  for (StateId f : finals) fst.is_final_[f] = 1;
  fst.finals_ = std::move(finals);
  fst.offsets_.assign(num_states + 1, 0);
  for (const Transition& t : transitions) ++fst.offsets_[t.from + 1];
  for (std::size_t s = 0; s < num_states; ++s) {
    fst.offsets_[s + 1] += fst.offsets_[s];
  }
  fst.transitions_ = std::move(transitions);
  fst.symbols_ = std::move(symbols);
  return fst;
}

Transducer Transducer::Empty(std::shared_ptr<const SymbolTable> symbols) {
  return Build(1, 0, {}, {}, std::move(symbols));
}

Transducer Transducer::EpsilonMachine(
    std::shared_ptr<const SymbolTable> symbols) {
  return Build(1, 0, {0}, {}, std::move(symbols));
}

Transducer Transducer::FromSymbols(std::span<const SymbolId> input,
                                   std::span<const SymbolId> output,
                                   std::shared_ptr<const SymbolTable> symbols) {
  const std::size_t length = std::max(input.size(), output.size());
  std::vector<Transition> arcs;
  arcs.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    Label label{i < input.size() ? input[i] : kEpsilon,
                i < output.size() ? output[i] : kEpsilon};
    arcs.push_back({static_cast<StateId>(i), label,
                    static_cast<StateId>(i + 1)});
  }
  return Build(length + 1, 0, {static_cast<StateId>(length)}, std::move(arcs),
               std::move(symbols));
}

}  // namespace morphfst

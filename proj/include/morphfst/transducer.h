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

#ifndef MORPHFST_TRANSDUCER_H_
#define MORPHFST_TRANSDUCER_H_

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "morphfst/symbol_table.h"

namespace morphfst {

using StateId = std::uint32_t;

struct Label {
  SymbolId input = kEpsilon;
  SymbolId output = kEpsilon;

  bool IsEpsilon() const { return input == kEpsilon && output == kEpsilon; }
  auto operator<=>(const Label&) const = default;
};

struct Transition {
  StateId from = 0;
  Label label;
  StateId to = 0;

  auto operator<=>(const Transition&) const = default;
};

// An immutable, unweighted finite-state transducer. The arc list is kept
// sorted by (from, input, output, to) with duplicates removed, so two
// transducers built from the same arc multiset are identical and iteration
// order is deterministic.
class Transducer {
 public:
  // Validates ids and returns the machine. Throws InvalidStateId or
  // InvalidSymbolId naming the offending transition (or final) index.
  static Transducer Build(std::size_t num_states, StateId start,
                          std::vector<StateId> finals,
                          std::vector<Transition> transitions,
                          std::shared_ptr<const SymbolTable> symbols);

  // One non-final state: the empty relation.
  static Transducer Empty(std::shared_ptr<const SymbolTable> symbols);
  // One final state: {("", "")}.
  static Transducer EpsilonMachine(std::shared_ptr<const SymbolTable> symbols);
  // A single path reading `input` and writing `output`, padded with epsilon
  // on the shorter side.
  static Transducer FromSymbols(std::span<const SymbolId> input,
                                std::span<const SymbolId> output,
                                std::shared_ptr<const SymbolTable> symbols);

  std::size_t NumStates() const { return num_states_; }
  std::size_t NumTransitions() const { return transitions_.size(); }
  StateId Start() const { return start_; }
  bool IsFinal(StateId s) const { return is_final_[s] != 0; }
  std::span<const StateId> Finals() const { return finals_; }
  std::span<const Transition> Transitions() const { return transitions_; }
  std::span<const Transition> Arcs(StateId s) const {
    return std::span<const Transition>(transitions_)
        .subspan(offsets_[s], offsets_[s + 1] - offsets_[s]);
  }

  const std::shared_ptr<const SymbolTable>& Symbols() const {
    return symbols_;
  }
  const SymbolTable& symbol_table() const { return *symbols_; }

  bool SameTable(const Transducer& other) const {
    return symbols_.get() == other.symbols_.get();
  }

 private:
  Transducer() = default;

  std::size_t num_states_ = 0;
  StateId start_ = 0;
  std::vector<StateId> finals_;
  std::vector<char> is_final_;
  std::vector<Transition> transitions_;
  std::vector<std::size_t> offsets_;
  std::shared_ptr<const SymbolTable> symbols_;
};

}  // namespace morphfst

#endif  // MORPHFST_TRANSDUCER_H_

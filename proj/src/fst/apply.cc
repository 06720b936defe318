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

#include "morphfst/apply.h"

#include <algorithm>
#include <deque>
#include <functional>
#include <tuple>
#include <unordered_set>
#include <vector>

#include "morphfst/errors.h"

namespace morphfst {
namespace {

// Marks states lying in a strongly connected component of the input-epsilon
// subgraph that contains an arc writing a non-epsilon output. Iterative
// Tarjan.
std::vector<char> ProductiveEpsilonCycleStates(const Transducer& fst) {
  const std::size_t n = fst.NumStates();
  constexpr std::size_t kUnvisited = SIZE_MAX;
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0), component(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<StateId> stack;
  std::size_t counter = 0, num_components = 0;

  struct Frame {
    StateId state;
    std::size_t next_arc;
  };
  for (StateId root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    std::vector<Frame> frames{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      Frame& frame = frames.back();
      const auto arcs = fst.Arcs(frame.state);
      if (frame.next_arc < arcs.size()) {
        const Transition& t = arcs[frame.next_arc++];
        if (t.label.input != kEpsilon) continue;
        if (index[t.to] == kUnvisited) {
          index[t.to] = low[t.to] = counter++;
          stack.push_back(t.to);
          on_stack[t.to] = 1;
          frames.push_back({t.to, 0});
        } else if (on_stack[t.to]) {
          low[frame.state] = std::min(low[frame.state], index[t.to]);
        }
        continue;
      }
      const StateId s = frame.state;
      frames.pop_back();
      if (!frames.empty()) {
        low[frames.back().state] = std::min(low[frames.back().state], low[s]);
      }
      if (low[s] == index[s]) {
        StateId member;
        do {
          member = stack.back();
          stack.pop_back();
          on_stack[member] = 0;
          component[member] = num_components;
        } while (member != s);
        ++num_components;
      }
    }
  }

  std::vector<char> productive_component(num_components, 0);
  for (const Transition& t : fst.Transitions()) {
    if (t.label.input == kEpsilon && t.label.output != kEpsilon &&
        component[t.from] == component[t.to]) {
      productive_component[component[t.from]] = 1;
    }
  }
  std::vector<char> productive(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    productive[s] = productive_component[component[s]];
  }
  return productive;
}

}  // namespace

StringPairSet Apply(const Transducer& fst, std::string_view input) {
  const SymbolTable& table = fst.symbol_table();
  const std::vector<SymbolId> ids = LookupLexicalString(input, table);
  const std::size_t len = ids.size();
  const std::size_t n = fst.NumStates();
  auto config = [len](StateId s, std::size_t pos) {
    return static_cast<std::size_t>(s) * (len + 1) + pos;
  };

  // Forward reachability over (state, position), remembering edges so the
  // backward pass can run on the same graph.
  const std::size_t num_configs = n * (len + 1);
  std::vector<char> reach(num_configs, 0);
  std::vector<std::vector<std::size_t>> reverse(num_configs);
  std::vector<std::pair<StateId, std::size_t>> queue{{fst.Start(), 0}};
  reach[config(fst.Start(), 0)] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto [s, pos] = queue[head];
    for (const Transition& t : fst.Arcs(s)) {
      std::size_t next_pos;
      if (t.label.input == kEpsilon) {
        next_pos = pos;
      } else if (pos < len && t.label.input == ids[pos]) {
        next_pos = pos + 1;
      } else {
        continue;
      }
      const std::size_t to = config(t.to, next_pos);
      reverse[to].push_back(config(s, pos));
      if (!reach[to]) {
        reach[to] = 1;
        queue.emplace_back(t.to, next_pos);
      }
    }
  }
  std::vector<char> useful(num_configs, 0);
  std::vector<std::size_t> stack;
  for (StateId f : fst.Finals()) {
    const std::size_t c = config(f, len);
    if (reach[c]) {
      useful[c] = 1;
      stack.push_back(c);
    }
  }
  while (!stack.empty()) {
    const std::size_t c = stack.back();
    stack.pop_back();
    for (std::size_t p : reverse[c]) {
      if (!useful[p]) {
        useful[p] = 1;
        stack.push_back(p);
      }
    }
  }

  StringPairSet result;
  if (!useful[config(fst.Start(), 0)]) return result;

  const std::vector<char> productive = ProductiveEpsilonCycleStates(fst);
  for (StateId s = 0; s < n; ++s) {
    if (!productive[s]) continue;
    for (std::size_t pos = 0; pos <= len; ++pos) {
      if (useful[config(s, pos)]) throw EpsilonCycle();
    }
  }

  // Among useful configurations every input-epsilon cycle writes nothing,
  // so (configuration, output) pairs are finite.
  struct Item {
    StateId state;
    std::size_t pos;
    std::string output;
  };
  struct ItemHash {
    std::size_t operator()(const std::pair<std::size_t, std::string>& k) const {
      return std::hash<std::string>()(k.second) * 31 + k.first;
    }
  };
  std::unordered_set<std::pair<std::size_t, std::string>, ItemHash> visited;
  std::vector<Item> work{{fst.Start(), 0, std::string()}};
  visited.insert({config(fst.Start(), 0), std::string()});
  while (!work.empty()) {
    Item item = std::move(work.back());
    work.pop_back();
    if (item.pos == len && fst.IsFinal(item.state)) {
      result.emplace(RenderSymbols(ids, table), item.output);
    }
    for (const Transition& t : fst.Arcs(item.state)) {
      std::size_t next_pos;
      if (t.label.input == kEpsilon) {
        next_pos = item.pos;
      } else if (item.pos < len && t.label.input == ids[item.pos]) {
        next_pos = item.pos + 1;
      } else {
        continue;
      }
      const std::size_t c = config(t.to, next_pos);
      if (!useful[c]) continue;
      std::string output = item.output;
      if (t.label.output != kEpsilon) output += table.Symbol(t.label.output);
      if (visited.insert({c, output}).second) {
        work.push_back({t.to, next_pos, std::move(output)});
      }
    }
  }
  return result;
}

StringPairSet EnumeratePairs(const Transducer& fst, std::size_t max_len) {
  const SymbolTable& table = fst.symbol_table();
  using Config = std::tuple<StateId, std::string, std::string>;
  std::set<Config> visited;
  std::vector<Config> layer{{fst.Start(), std::string(), std::string()}};
  visited.insert(layer.front());
  StringPairSet result;
  for (std::size_t depth = 0;; ++depth) {
    std::vector<Config> next;
    for (const auto& [s, in, out] : layer) {
      if (fst.IsFinal(s)) result.emplace(in, out);
      if (depth == max_len) continue;
      for (const Transition& t : fst.Arcs(s)) {
        Config c{t.to, in, out};
        if (t.label.input != kEpsilon) {
          std::get<1>(c) += table.Symbol(t.label.input);
        }
        if (t.label.output != kEpsilon) {
          std::get<2>(c) += table.Symbol(t.label.output);
        }
        if (visited.insert(c).second) next.push_back(std::move(c));
      }
    }
    if (next.empty()) break;
    layer = std::move(next);
  }
  return result;
}

}  // namespace morphfst

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

#include "morphfst/operations.h"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "morphfst/errors.h"

namespace morphfst {
namespace {

void CheckSameTable(const Transducer& a, const Transducer& b) {
  if (!a.SameTable(b)) throw SymbolTableMismatch();
}

// Appends the arcs of `m` shifted by `offset` states.
void CopyArcs(const Transducer& m, StateId offset,
              std::vector<Transition>* arcs) {
  for (const Transition& t : m.Transitions()) {
    arcs->push_back({t.from + offset, t.label, t.to + offset});
  }
}

constexpr Label kEpsilonLabel{kEpsilon, kEpsilon};

// Renumbers states breadth-first from the start, visiting arcs in label
// order. Unreachable states are dropped.
Transducer Canonicalize(const Transducer& a) {
  std::vector<StateId> order(a.NumStates(), UINT32_MAX);
  std::vector<StateId> queue{a.Start()};
  order[a.Start()] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const Transition& t : a.Arcs(queue[head])) {
      if (order[t.to] == UINT32_MAX) {
        order[t.to] = static_cast<StateId>(queue.size());
        queue.push_back(t.to);
      }
    }
  }
  std::vector<StateId> finals;
  std::vector<Transition> arcs;
  for (StateId s : queue) {
    if (a.IsFinal(s)) finals.push_back(order[s]);
    for (const Transition& t : a.Arcs(s)) {
      arcs.push_back({order[s], t.label, order[t.to]});
    }
  }
  return Transducer::Build(queue.size(), 0, std::move(finals),
                           std::move(arcs), a.Symbols());
}

}  // namespace

Transducer Union(const Transducer& a, const Transducer& b) {
  CheckSameTable(a, b);
  // State 0 is a fresh start with epsilon arcs into both operands.
  const auto a_off = StateId{1};
  const auto b_off = static_cast<StateId>(1 + a.NumStates());
  std::vector<Transition> arcs;
  arcs.reserve(a.NumTransitions() + b.NumTransitions() + 2);
  CopyArcs(a, a_off, &arcs);
  CopyArcs(b, b_off, &arcs);
  arcs.push_back({0, kEpsilonLabel, a.Start() + a_off});
  arcs.push_back({0, kEpsilonLabel, b.Start() + b_off});
  std::vector<StateId> finals;
  for (StateId f : a.Finals()) finals.push_back(f + a_off);
  for (StateId f : b.Finals()) finals.push_back(f + b_off);
  return Transducer::Build(1 + a.NumStates() + b.NumStates(), 0,
                           std::move(finals), std::move(arcs), a.Symbols());
}

Transducer Concat(const Transducer& a, const Transducer& b) {
  CheckSameTable(a, b);
  const auto b_off = static_cast<StateId>(a.NumStates());
  std::vector<Transition> arcs;
  arcs.reserve(a.NumTransitions() + b.NumTransitions() + a.Finals().size());
  CopyArcs(a, 0, &arcs);
  CopyArcs(b, b_off, &arcs);
  for (StateId f : a.Finals()) {
    arcs.push_back({f, kEpsilonLabel, b.Start() + b_off});
  }
  std::vector<StateId> finals;
  for (StateId f : b.Finals()) finals.push_back(f + b_off);
  return Transducer::Build(a.NumStates() + b.NumStates(), a.Start(),
                           std::move(finals), std::move(arcs), a.Symbols());
}

Transducer Closure(const Transducer& a, ClosureKind kind) {
  // State 0 is a fresh start; the operand follows at offset 1.
  std::vector<Transition> arcs;
  CopyArcs(a, 1, &arcs);
  arcs.push_back({0, kEpsilonLabel, a.Start() + 1});
  std::vector<StateId> finals;
  for (StateId f : a.Finals()) finals.push_back(f + 1);
  switch (kind) {
    case ClosureKind::kStar:
      for (StateId f : a.Finals()) arcs.push_back({f + 1, kEpsilonLabel, 0});
      finals.push_back(0);
      break;
    case ClosureKind::kPlus:
      for (StateId f : a.Finals()) {
        arcs.push_back({f + 1, kEpsilonLabel, a.Start() + 1});
      }
      break;
    case ClosureKind::kOptional:
      finals.push_back(0);
      break;
  }
  return Transducer::Build(a.NumStates() + 1, 0, std::move(finals),
                           std::move(arcs), a.Symbols());
}

Transducer Compose(const Transducer& a, const Transducer& b) {
  CheckSameTable(a, b);
  // Composite state (qa, qb, filter). Filter 0: free. Filter 1: a b-only
  // epsilon move was taken, so a-only moves are blocked until the next
  // matched move. This admits a-only moves before b-only moves between
  // matches, one canonical interleaving per alignment.
  struct Key {
    StateId qa;
    StateId qb;
    std::uint8_t filter;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return (static_cast<std::size_t>(k.qa) * 1000003u + k.qb) * 2u +
             k.filter;
    }
  };
  std::unordered_map<Key, StateId, KeyHash> ids;
  std::vector<Key> states;
  auto state_id = [&](Key k) {
    auto [it, inserted] =
        ids.try_emplace(k, static_cast<StateId>(states.size()));
    if (inserted) states.push_back(k);
    return it->second;
  };

  state_id({a.Start(), b.Start(), 0});
  std::vector<Transition> arcs;
  std::vector<StateId> finals;
  for (std::size_t head = 0; head < states.size(); ++head) {
    const Key cur = states[head];
    const auto from = static_cast<StateId>(head);
    if (a.IsFinal(cur.qa) && b.IsFinal(cur.qb)) finals.push_back(from);

    const auto b_arcs = b.Arcs(cur.qb);
    for (const Transition& ta : a.Arcs(cur.qa)) {
      if (ta.label.output == kEpsilon) {
        if (cur.filter == 0) {
          const StateId to = state_id({ta.to, cur.qb, 0});
          arcs.push_back({from, {ta.label.input, kEpsilon}, to});
        }
        continue;
      }
      auto range = std::equal_range(
          b_arcs.begin(), b_arcs.end(), ta.label.output,
          [](const auto& lhs, const auto& rhs) {
            if constexpr (std::is_same_v<std::decay_t<decltype(lhs)>,
                                         Transition>) {
              return lhs.label.input < rhs;
            } else {
              return lhs < rhs.label.input;
            }
          });
      for (auto it = range.first; it != range.second; ++it) {
        const StateId to = state_id({ta.to, it->to, 0});
        arcs.push_back({from, {ta.label.input, it->label.output}, to});
      }
    }
    for (const Transition& tb : b_arcs) {
      if (tb.label.input != kEpsilon) break;  // arcs sorted by input
      const StateId to = state_id({cur.qa, tb.to, 1});
      arcs.push_back({from, {kEpsilon, tb.label.output}, to});
    }
  }
  return Trim(Transducer::Build(states.size(), 0, std::move(finals),
                                std::move(arcs), a.Symbols()));
}

Transducer Invert(const Transducer& a) {
  std::vector<Transition> arcs;
  arcs.reserve(a.NumTransitions());
  for (const Transition& t : a.Transitions()) {
    arcs.push_back({t.from, {t.label.output, t.label.input}, t.to});
  }
  return Transducer::Build(a.NumStates(), a.Start(),
                           {a.Finals().begin(), a.Finals().end()},
                           std::move(arcs), a.Symbols());
}

Transducer Project(const Transducer& a, ProjectSide side) {
  std::vector<Transition> arcs;
  arcs.reserve(a.NumTransitions());
  for (const Transition& t : a.Transitions()) {
    const SymbolId s =
        side == ProjectSide::kInput ? t.label.input : t.label.output;
    arcs.push_back({t.from, {s, s}, t.to});
  }
  return Transducer::Build(a.NumStates(), a.Start(),
                           {a.Finals().begin(), a.Finals().end()},
                           std::move(arcs), a.Symbols());
}

Transducer Trim(const Transducer& a) {
  const std::size_t n = a.NumStates();
  std::vector<char> reach(n, 0);
  std::vector<StateId> stack{a.Start()};
  reach[a.Start()] = 1;
  while (!stack.empty()) {
    const StateId s = stack.back();
    stack.pop_back();
    for (const Transition& t : a.Arcs(s)) {
      if (!reach[t.to]) {
        reach[t.to] = 1;
        stack.push_back(t.to);
      }
    }
  }
  std::vector<std::vector<StateId>> reverse(n);
  for (const Transition& t : a.Transitions()) reverse[t.to].push_back(t.from);
  std::vector<char> coreach(n, 0);
  for (StateId f : a.Finals()) {
    coreach[f] = 1;
    stack.push_back(f);
  }
  while (!stack.empty()) {
    const StateId s = stack.back();
    stack.pop_back();
    for (StateId p : reverse[s]) {
      if (!coreach[p]) {
        coreach[p] = 1;
        stack.push_back(p);
      }
    }
  }
  if (!coreach[a.Start()]) return Transducer::Empty(a.Symbols());

  std::vector<StateId> remap(n, UINT32_MAX);
  StateId next = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (reach[s] && coreach[s]) remap[s] = next++;
  }
  std::vector<StateId> finals;
  for (StateId f : a.Finals()) {
    if (remap[f] != UINT32_MAX) finals.push_back(remap[f]);
  }
  std::vector<Transition> arcs;
  for (const Transition& t : a.Transitions()) {
    if (remap[t.from] != UINT32_MAX && remap[t.to] != UINT32_MAX) {
      arcs.push_back({remap[t.from], t.label, remap[t.to]});
    }
  }
  return Transducer::Build(next, remap[a.Start()], std::move(finals),
                           std::move(arcs), a.Symbols());
}

Transducer RemoveEpsilons(const Transducer& a) {
  const std::size_t n = a.NumStates();
  std::vector<Transition> arcs;
  std::vector<StateId> finals;
  std::vector<char> seen(n, 0);
  std::vector<StateId> closure;
  for (StateId q = 0; q < n; ++q) {
    // (eps, eps)-closure of q.
    closure.assign(1, q);
    std::fill(seen.begin(), seen.end(), 0);
    seen[q] = 1;
    for (std::size_t i = 0; i < closure.size(); ++i) {
      for (const Transition& t : a.Arcs(closure[i])) {
        if (t.label.IsEpsilon() && !seen[t.to]) {
          seen[t.to] = 1;
          closure.push_back(t.to);
        }
      }
    }
    bool final = false;
    for (StateId p : closure) {
      final = final || a.IsFinal(p);
      for (const Transition& t : a.Arcs(p)) {
        if (!t.label.IsEpsilon()) arcs.push_back({q, t.label, t.to});
      }
    }
    if (final) finals.push_back(q);
  }
  return Trim(Transducer::Build(n, a.Start(), std::move(finals),
                                std::move(arcs), a.Symbols()));
}

Transducer Determinize(const Transducer& input) {
  const Transducer a = RemoveEpsilons(input);
  std::map<std::vector<StateId>, StateId> ids;
  std::vector<std::vector<StateId>> subsets;
  auto subset_id = [&](std::vector<StateId> subset) {
    auto [it, inserted] =
        ids.try_emplace(subset, static_cast<StateId>(subsets.size()));
    if (inserted) subsets.push_back(std::move(subset));
    return it->second;
  };
  subset_id({a.Start()});

  std::vector<Transition> arcs;
  std::vector<StateId> finals;
  std::vector<std::pair<Label, StateId>> moves;
  for (std::size_t head = 0; head < subsets.size(); ++head) {
    const auto from = static_cast<StateId>(head);
    moves.clear();
    bool final = false;
    for (StateId q : subsets[head]) {
      final = final || a.IsFinal(q);
      for (const Transition& t : a.Arcs(q)) moves.emplace_back(t.label, t.to);
    }
    if (final) finals.push_back(from);
    std::sort(moves.begin(), moves.end());
    moves.erase(std::unique(moves.begin(), moves.end()), moves.end());
    for (std::size_t i = 0; i < moves.size();) {
      std::size_t j = i;
      std::vector<StateId> target;
      while (j < moves.size() && moves[j].first == moves[i].first) {
        target.push_back(moves[j].second);
        ++j;
      }
      const Label label = moves[i].first;
      const StateId to = subset_id(std::move(target));
      arcs.push_back({from, label, to});
      i = j;
    }
  }
  return Canonicalize(Transducer::Build(subsets.size(), 0, std::move(finals),
                                        std::move(arcs), a.Symbols()));
}

Transducer Minimize(const Transducer& input) {
  const Transducer a = Trim(Determinize(input));
  const std::size_t n = a.NumStates();

  // Moore-style refinement. On a trimmed deterministic machine a missing arc
  // means "goes to the dead state", so two states are equivalent iff they
  // agree on finality and, label by label, on the blocks of their targets.
  std::vector<StateId> block(n);
  for (std::size_t s = 0; s < n; ++s) block[s] = a.IsFinal(s) ? 1 : 0;
  std::size_t num_blocks = 0;
  std::vector<std::uint32_t> signature;
  while (true) {
    std::map<std::vector<std::uint32_t>, StateId> blocks;
    std::vector<StateId> next(n);
    for (std::size_t s = 0; s < n; ++s) {
      signature.clear();
      signature.push_back(block[s]);
      for (const Transition& t : a.Arcs(s)) {
        signature.push_back(t.label.input);
        signature.push_back(t.label.output);
        signature.push_back(block[t.to]);
      }
      auto [it, inserted] =
          blocks.try_emplace(signature, static_cast<StateId>(blocks.size()));
      next[s] = it->second;
    }
    block = std::move(next);
    if (blocks.size() == num_blocks) break;
    num_blocks = blocks.size();
  }

  std::vector<StateId> finals;
  std::vector<Transition> arcs;
  std::vector<char> emitted(num_blocks, 0);
  for (std::size_t s = 0; s < n; ++s) {
    const StateId b = block[s];
    if (emitted[b]) continue;
    emitted[b] = 1;
    if (a.IsFinal(s)) finals.push_back(b);
    for (const Transition& t : a.Arcs(s)) {
      arcs.push_back({b, t.label, block[t.to]});
    }
  }
  return Canonicalize(Transducer::Build(num_blocks, block[a.Start()],
                                        std::move(finals), std::move(arcs),
                                        a.Symbols()));
}

bool IsPairDeterministic(const Transducer& a) {
  for (std::size_t s = 0; s < a.NumStates(); ++s) {
    const auto arcs = a.Arcs(s);
    for (std::size_t i = 1; i < arcs.size(); ++i) {
      if (arcs[i].label == arcs[i - 1].label) return false;
    }
    for (const Transition& t : arcs) {
      if (t.label.IsEpsilon()) return false;
    }
  }
  return true;
}

bool HasEpsilonArcs(const Transducer& a) {
  return std::any_of(a.Transitions().begin(), a.Transitions().end(),
                     [](const Transition& t) { return t.label.IsEpsilon(); });
}

namespace {

// Kahn's algorithm; returns an empty vector if the machine has a cycle.
std::vector<StateId> TopologicalOrder(const Transducer& a) {
  std::vector<std::size_t> indegree(a.NumStates(), 0);
  for (const Transition& t : a.Transitions()) ++indegree[t.to];
  std::vector<StateId> order;
  for (StateId s = 0; s < a.NumStates(); ++s) {
    if (indegree[s] == 0) order.push_back(s);
  }
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (const Transition& t : a.Arcs(order[head])) {
      if (--indegree[t.to] == 0) order.push_back(t.to);
    }
  }
  if (order.size() != a.NumStates()) order.clear();
  return order;
}

}  // namespace

bool IsAcyclic(const Transducer& a) {
  return !TopologicalOrder(a).empty();
}

std::size_t LongestPathLength(const Transducer& a) {
  const std::vector<StateId> order = TopologicalOrder(a);
  if (order.empty()) throw Error("LongestPathLength requires an acyclic machine");
  std::vector<long> depth(a.NumStates(), -1);
  depth[a.Start()] = 0;
  std::size_t best = 0;
  for (StateId s : order) {
    if (depth[s] < 0) continue;
    best = std::max(best, static_cast<std::size_t>(depth[s]));
    for (const Transition& t : a.Arcs(s)) {
      depth[t.to] = std::max(depth[t.to], depth[s] + 1);
    }
  }
  return best;
}

}  // namespace morphfst

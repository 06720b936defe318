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

// Regular-relation algebra and normalization. Every function is pure: the
// operands are left untouched and a new machine is returned. Binary
// operations throw SymbolTableMismatch unless both operands point at the same
// SymbolTable object.

#ifndef MORPHFST_OPERATIONS_H_
#define MORPHFST_OPERATIONS_H_

#include "morphfst/transducer.h"

namespace morphfst {

enum class ClosureKind { kStar, kPlus, kOptional };
enum class ProjectSide { kInput, kOutput };

Transducer Union(const Transducer& a, const Transducer& b);
Transducer Concat(const Transducer& a, const Transducer& b);
Transducer Closure(const Transducer& a, ClosureKind kind);

// Relational composition. Epsilon outputs of `a` and epsilon inputs of `b`
// are interleaved through a two-state sequencing filter so that each
// alignment of the middle tape is produced by exactly one path.
Transducer Compose(const Transducer& a, const Transducer& b);

Transducer Invert(const Transducer& a);
Transducer Project(const Transducer& a, ProjectSide side);

// Drops unreachable and dead states. A machine with an empty relation comes
// back as Transducer::Empty.
Transducer Trim(const Transducer& a);

// Removes (eps, eps) arcs. One-sided epsilon labels are ordinary pair labels
// and are kept.
Transducer RemoveEpsilons(const Transducer& a);

// Subset construction over the pair alphabet: at most one arc per Label per
// state. Runs RemoveEpsilons first. States are numbered breadth-first.
Transducer Determinize(const Transducer& a);

// Determinizes, trims, and merges equivalent states by partition refinement.
// The result is the unique minimal pair-deterministic machine, numbered
// breadth-first from the start state.
Transducer Minimize(const Transducer& a);

// ---- structural properties ----

bool IsPairDeterministic(const Transducer& a);
bool HasEpsilonArcs(const Transducer& a);  // any (eps, eps) arc
bool IsAcyclic(const Transducer& a);
// Number of arcs on the longest path from the start state. Requires an
// acyclic machine; throws Error otherwise.
std::size_t LongestPathLength(const Transducer& a);

}  // namespace morphfst

#endif  // MORPHFST_OPERATIONS_H_

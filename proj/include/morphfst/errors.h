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

#ifndef MORPHFST_ERRORS_H_
#define MORPHFST_ERRORS_H_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace morphfst {

// Base class for every error raised by the library. Callers that only care
// about "something in the pipeline failed" catch this; tests and the CLI
// catch the concrete types below.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---- fst core ----

class InvalidStateId : public Error {
 public:
  InvalidStateId(std::size_t transition_index, std::uint32_t state)
      : Error("invalid state id " + std::to_string(state) +
              " (transition/final index " + std::to_string(transition_index) +
              ")"),
        index(transition_index),
        state(state) {}
  std::size_t index;
  std::uint32_t state;
};

class InvalidSymbolId : public Error {
 public:
  InvalidSymbolId(std::size_t transition_index, std::uint32_t symbol)
      : Error("invalid symbol id " + std::to_string(symbol) +
              " on transition " + std::to_string(transition_index)),
        index(transition_index),
        symbol(symbol) {}
  std::size_t index;
  std::uint32_t symbol;
};

class SymbolTableMismatch : public Error {
 public:
  SymbolTableMismatch()
      : Error("operands do not share one symbol table") {}
};

// Raised by Apply when the input contains a symbol the transducer's alphabet
// has never seen. Distinct from "in alphabet but rejected", which yields an
// empty result.
class UnknownSymbol : public Error {
 public:
  explicit UnknownSymbol(const std::string& symbol)
      : Error("unknown symbol '" + symbol + "'"), symbol(symbol) {}
  std::string symbol;
};

class EpsilonCycle : public Error {
 public:
  EpsilonCycle()
      : Error("output-producing input-epsilon cycle reachable on this input") {}
};

class FormatError : public Error {
 public:
  using Error::Error;
};

// ---- text ----

class InvalidUtf8 : public Error {
 public:
  explicit InvalidUtf8(std::size_t byte_offset)
      : Error("invalid UTF-8 at byte " + std::to_string(byte_offset)),
        position(byte_offset) {}
  std::size_t position;
};

class UnterminatedTag : public Error {
 public:
  explicit UnterminatedTag(const std::string& text)
      : Error("unterminated tag in '" + text + "'") {}
};

// ---- rule compiler ----

class SyntaxError : public Error {
 public:
  SyntaxError(int line, int col, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(col) + ": " +
              message),
        line(line),
        col(col),
        message(message) {}
  int line;
  int col;
  std::string message;
};

class UndefinedVariable : public Error {
 public:
  UndefinedVariable(const std::string& name, int line, int col)
      : Error(std::to_string(line) + ":" + std::to_string(col) +
              ": undefined variable $" + name + "$"),
        name(name) {}
  std::string name;
};

class EmptyFile : public Error {
 public:
  EmptyFile() : Error("rule file has no result expression") {}
};

class IncludeNotFound : public Error {
 public:
  explicit IncludeNotFound(const std::string& path)
      : Error("include not found: " + path), path(path) {}
  std::string path;
};

// ---- lexicon ----

class DuplicateRoot : public Error {
 public:
  DuplicateRoot(const std::string& pos_class, const std::string& root,
                int line)
      : Error("duplicate root '" + root + "' in class " + pos_class +
              " at line " + std::to_string(line)),
        root(root),
        line(line) {}
  std::string root;
  int line;
};

// ---- morph ----

class MalformedAnalysis : public Error {
 public:
  MalformedAnalysis(const std::string& text, int line = 0)
      : Error(line > 0 ? "malformed analysis at line " + std::to_string(line) +
                             ": '" + text + "'"
                       : "malformed analysis '" + text + "'"),
        line(line) {}
  int line;
};

// ---- tagger ----

class EmptyCorpus : public Error {
 public:
  EmptyCorpus() : Error("training corpus is empty") {}
};

class TagsetMismatch : public Error {
 public:
  explicit TagsetMismatch(const std::string& tag)
      : Error("tag '" + tag + "' is not in the model tagset"), tag(tag) {}
  std::string tag;
};

}  // namespace morphfst

#endif  // MORPHFST_ERRORS_H_

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

#include "morphfst/rule_parser.h"

#include <algorithm>
#include <set>
#include <vector>

#include "morphfst/errors.h"
#include "morphfst/symbol_table.h"
#include "morphfst/unicode.h"

namespace morphfst {
namespace {

enum class Tok {
  kSymbol,
  kVar,
  kEquals,
  kSemicolon,
  kNewline,
  kPipe,
  kCompose,
  kStar,
  kPlus,
  kQuestion,
  kLParen,
  kRParen,
  kColon,
  kCharClass,
  kInclude,
  kEnd,
};

struct Token {
  Tok type;
  std::string text;                // symbol, variable name, include path
  std::vector<std::string> chars;  // char class members
  int line;
  int col;
};

bool IsSpace(char32_t c) { return c == ' ' || c == '\t' || c == '\r'; }

// Characters with syntactic meaning outside tags; a literal needs '\'.
bool IsSpecial(char32_t c) {
  switch (c) {
    case '$': case '=': case ';': case '|': case '*': case '+': case '?':
    case '(': case ')': case '[': case ']': case ':': case '%': case '#':
    case '\\': case '<': case '>': case '"':
      return true;
    default:
      return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  }
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(DecodeUtf8(text)) {}

  std::vector<Token> Run() {
    std::vector<Token> out;
    while (true) {
      SkipBlanks();
      const int line = line_, col = col_;
      if (AtEnd()) {
        out.push_back({Tok::kEnd, "", {}, line, col});
        return out;
      }
      const char32_t c = Peek();
      auto simple = [&](Tok t) {
        Advance();
        out.push_back({t, "", {}, line, col});
      };
      switch (c) {
        case '\n': simple(Tok::kNewline); break;
        case '=': simple(Tok::kEquals); break;
        case ';': simple(Tok::kSemicolon); break;
        case '*': simple(Tok::kStar); break;
        case '+': simple(Tok::kPlus); break;
        case '?': simple(Tok::kQuestion); break;
        case '(': simple(Tok::kLParen); break;
        case ')': simple(Tok::kRParen); break;
        case ':': simple(Tok::kColon); break;
        case '|':
          Advance();
          if (!AtEnd() && Peek() == '|') {
            Advance();
            out.push_back({Tok::kCompose, "", {}, line, col});
          } else {
            out.push_back({Tok::kPipe, "", {}, line, col});
          }
          break;
        case '$': out.push_back(LexVariable(line, col)); break;
        case '<': out.push_back(LexTag(line, col)); break;
        case '[': out.push_back(LexCharClass(line, col)); break;
        case '#': out.push_back(LexInclude(line, col)); break;
        case '\\': {
          Advance();
          if (AtEnd() || Peek() == '\n') Fail(line, col, "dangling escape");
          out.push_back({Tok::kSymbol, EncodeUtf8(Advance()), {}, line, col});
          break;
        }
        case ']': case '>': case '"':
          Fail(line, col, "unexpected '" + EncodeUtf8(c) + "'");
        default:
          out.push_back({Tok::kSymbol, EncodeUtf8(Advance()), {}, line, col});
      }
    }
  }

 private:
  [[noreturn]] void Fail(int line, int col, const std::string& message) {
    throw SyntaxError(line, col, message);
  }

  bool AtEnd() const { return pos_ >= text_.size(); }
  char32_t Peek() const { return text_[pos_]; }
  char32_t Advance() {
    const char32_t c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void SkipBlanks() {
    while (!AtEnd()) {
      if (IsSpace(Peek())) {
        Advance();
      } else if (Peek() == '%') {
        while (!AtEnd() && Peek() != '\n') Advance();
      } else {
        return;
      }
    }
  }

  Token LexVariable(int line, int col) {
    Advance();  // '$'
    std::string name;
    while (!AtEnd() && Peek() != '$') {
      const char32_t c = Peek();
      if (c == '\n' || IsSpace(c)) Fail(line, col, "unterminated variable");
      AppendUtf8(Advance(), &name);
    }
    if (AtEnd()) Fail(line, col, "unterminated variable");
    Advance();  // closing '$'
    if (name.empty()) Fail(line, col, "empty variable name");
    return {Tok::kVar, name, {}, line, col};
  }

  Token LexTag(int line, int col) {
    std::string tag;
    AppendUtf8(Advance(), &tag);  // '<'
    while (!AtEnd() && Peek() != '>') {
      if (Peek() == '\n') Fail(line, col, "unterminated tag");
      AppendUtf8(Advance(), &tag);
    }
    if (AtEnd()) Fail(line, col, "unterminated tag");
    AppendUtf8(Advance(), &tag);  // '>'
    return {Tok::kSymbol, tag, {}, line, col};
  }

  // Reads one class member, honoring '\' escapes. Sets *escaped.
  char32_t ClassMember(int line, int col, bool* escaped) {
    *escaped = false;
    if (Peek() == '\\') {
      Advance();
      if (AtEnd() || Peek() == '\n') Fail(line, col, "dangling escape");
      *escaped = true;
    }
    return Advance();
  }

  Token LexCharClass(int line, int col) {
    Advance();  // '['
    std::set<char32_t> members;
    while (true) {
      while (!AtEnd() && IsSpace(Peek())) Advance();
      if (AtEnd() || Peek() == '\n') Fail(line, col, "unterminated '['");
      if (Peek() == ']') {
        Advance();
        break;
      }
      bool escaped;
      const char32_t first = ClassMember(line, col, &escaped);
      // Range "x-y", unless '-' is the last member.
      if (!AtEnd() && Peek() == '-' && pos_ + 1 < text_.size() &&
          text_[pos_ + 1] != ']') {
        Advance();  // '-'
        if (AtEnd() || Peek() == '\n') Fail(line, col, "unterminated range");
        const char32_t last = ClassMember(line, col, &escaped);
        if (last < first) Fail(line, col, "empty character range");
        if (last - first > 4096) Fail(line, col, "character range too large");
        // Scalars that NFC never produces (e.g. U+0958..U+095F) could not
        // match normalized input, so ranges leave them out.
        for (char32_t c = first; c <= last; ++c) {
          if (c >= 0xD800 && c <= 0xDFFF) continue;
          const std::string encoded = EncodeUtf8(c);
          if (NormalizeNfc(encoded) == encoded) members.insert(c);
        }
      } else {
        members.insert(first);
      }
    }
    if (members.empty()) Fail(line, col, "empty character class");
    Token tok{Tok::kCharClass, "", {}, line, col};
    for (char32_t c : members) tok.chars.push_back(EncodeUtf8(c));
    std::sort(tok.chars.begin(), tok.chars.end());
    return tok;
  }

  Token LexInclude(int line, int col) {
    static const std::u32string kKeyword = U"#include";
    for (char32_t k : kKeyword) {
      if (AtEnd() || Peek() != k) Fail(line, col, "expected #include");
      Advance();
    }
    while (!AtEnd() && IsSpace(Peek())) Advance();
    if (AtEnd() || Peek() != '"') Fail(line, col, "expected quoted path");
    Advance();
    std::string path;
    while (!AtEnd() && Peek() != '"') {
      if (Peek() == '\n') Fail(line, col, "unterminated path");
      AppendUtf8(Advance(), &path);
    }
    if (AtEnd()) Fail(line, col, "unterminated path");
    Advance();
    if (path.empty()) Fail(line, col, "empty include path");
    return {Tok::kInclude, path, {}, line, col};
  }

  std::vector<char32_t> text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  RuleFile ParseFile() {
    RuleFile file;
    bool have_result = false;
    while (true) {
      while (Is(Tok::kNewline) || Is(Tok::kSemicolon)) ++pos_;
      if (Is(Tok::kEnd)) break;
      if (Is(Tok::kVar) && tokens_[pos_ + 1].type == Tok::kEquals) {
        const Token& name = tokens_[pos_];
        if (defined_.count(name.text)) {
          throw SyntaxError(name.line, name.col,
                            "duplicate definition of $" + name.text + "$");
        }
        pos_ += 2;
        RuleAst body = ParseExpr();
        EndStatement();
        defined_.insert(name.text);
        file.definitions.push_back({name.text, std::move(body)});
      } else {
        file.result = ParseExpr();
        have_result = true;
        EndStatement();
      }
    }
    if (!have_result) throw EmptyFile();
    return file;
  }

 private:
  const Token& Cur() {
    if (depth_ > 0) {
      while (tokens_[pos_].type == Tok::kNewline) ++pos_;
    }
    return tokens_[pos_];
  }
  bool Is(Tok t) { return Cur().type == t; }
  void SkipNewlines() {
    while (tokens_[pos_].type == Tok::kNewline) ++pos_;
  }

  [[noreturn]] void Fail(const std::string& message) {
    const Token& t = Cur();
    throw SyntaxError(t.line, t.col, message);
  }

  void EndStatement() {
    if (Is(Tok::kSemicolon)) {
      ++pos_;
      return;
    }
    if (Is(Tok::kNewline)) {
      ++pos_;
      return;
    }
    if (Is(Tok::kEnd)) return;
    Fail("expected end of statement");
  }

  RuleAst ParseExpr() {
    RuleAst lhs = ParseAlt();
    while (Is(Tok::kCompose)) {
      ++pos_;
      SkipNewlines();
      RuleAst rhs = ParseAlt();
      lhs = RuleAst::Node(RuleKind::kCompose, {std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  RuleAst ParseAlt() {
    std::vector<RuleAst> alternatives;
    alternatives.push_back(ParseSeq());
    while (Is(Tok::kPipe)) {
      ++pos_;
      SkipNewlines();
      alternatives.push_back(ParseSeq());
    }
    if (alternatives.size() == 1) return std::move(alternatives.front());
    return RuleAst::Node(RuleKind::kUnion, std::move(alternatives));
  }

  bool StartsAtom() {
    switch (Cur().type) {
      case Tok::kSymbol: case Tok::kVar: case Tok::kCharClass:
      case Tok::kLParen: case Tok::kInclude:
        return true;
      default:
        return false;
    }
  }

  RuleAst ParseSeq() {
    if (!StartsAtom()) Fail("expected an expression");
    std::vector<RuleAst> items;
    while (StartsAtom()) items.push_back(ParsePostfix());
    if (items.size() == 1) return std::move(items.front());
    return RuleAst::Node(RuleKind::kConcat, std::move(items));
  }

  RuleAst ParsePostfix() {
    RuleAst node = ParseAtom();
    while (true) {
      RuleKind kind;
      if (Is(Tok::kStar)) {
        kind = RuleKind::kStar;
      } else if (Is(Tok::kPlus)) {
        kind = RuleKind::kPlus;
      } else if (Is(Tok::kQuestion)) {
        kind = RuleKind::kOptional;
      } else {
        return node;
      }
      ++pos_;
      std::vector<RuleAst> child;
      child.push_back(std::move(node));
      node = RuleAst::Node(kind, std::move(child));
    }
  }

  RuleAst ParseAtom() {
    const Token tok = Cur();
    switch (tok.type) {
      case Tok::kSymbol: {
        ++pos_;
        if (!Is(Tok::kColon)) return RuleAst::Literal(tok.text);
        ++pos_;
        if (!Is(Tok::kSymbol)) Fail("expected a symbol after ':'");
        const std::string out = Cur().text;
        ++pos_;
        if (tok.text == kEpsilonSymbol && out == kEpsilonSymbol) {
          throw SyntaxError(tok.line, tok.col, "<>:<> is not a valid pair");
        }
        return RuleAst::Pair(tok.text, out);
      }
      case Tok::kVar:
        ++pos_;
        if (!defined_.count(tok.text)) {
          throw UndefinedVariable(tok.text, tok.line, tok.col);
        }
        return RuleAst::VarRef(tok.text);
      case Tok::kCharClass: {
        ++pos_;
        RuleAst n;
        n.kind = RuleKind::kCharClass;
        n.chars = tok.chars;
        return n;
      }
      case Tok::kInclude: {
        ++pos_;
        RuleAst n;
        n.kind = RuleKind::kInclude;
        n.text = tok.text;
        return n;
      }
      case Tok::kLParen: {
        ++pos_;
        ++depth_;
        RuleAst inner = ParseExpr();
        if (!Is(Tok::kRParen)) Fail("expected ')'");
        --depth_;
        ++pos_;
        return inner;
      }
      default:
        Fail("expected an expression");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int depth_ = 0;
  std::set<std::string> defined_;
};

// ---- rendering ----

std::string RenderSymbol(const std::string& symbol) {
  if (IsTagSymbol(symbol)) return symbol;
  const std::vector<char32_t> scalars = DecodeUtf8(symbol);
  if (scalars.size() == 1 && IsSpecial(scalars[0])) return "\\" + symbol;
  return symbol;
}

std::string RenderClassMember(const std::string& member) {
  const std::vector<char32_t> scalars = DecodeUtf8(member);
  if (scalars.size() == 1) {
    const char32_t c = scalars[0];
    if (c == ']' || c == '[' || c == '-' || c == '\\' || IsSpace(c) ||
        c == '\n') {
      return "\\" + member;
    }
  }
  return member;
}

int Precedence(RuleKind kind) {
  switch (kind) {
    case RuleKind::kCompose: return 0;
    case RuleKind::kUnion: return 1;
    case RuleKind::kConcat: return 2;
    case RuleKind::kStar: case RuleKind::kPlus: case RuleKind::kOptional:
      return 3;
    default:
      return 4;
  }
}

std::string Render(const RuleAst& node, int min_precedence) {
  std::string out;
  switch (node.kind) {
    case RuleKind::kLiteral:
      out = RenderSymbol(node.text);
      break;
    case RuleKind::kPair:
      out = RenderSymbol(node.text) + ":" + RenderSymbol(node.output);
      break;
    case RuleKind::kConcat:
      for (std::size_t i = 0; i < node.children.size(); ++i) {
        if (i > 0) out += ' ';
        out += Render(node.children[i], 3);
      }
      break;
    case RuleKind::kUnion:
      for (std::size_t i = 0; i < node.children.size(); ++i) {
        if (i > 0) out += " | ";
        out += Render(node.children[i], 2);
      }
      break;
    case RuleKind::kCompose:
      out = Render(node.children[0], 0) + " || " + Render(node.children[1], 1);
      break;
    case RuleKind::kStar:
      out = Render(node.children[0], 4) + "*";
      break;
    case RuleKind::kPlus:
      out = Render(node.children[0], 4) + "+";
      break;
    case RuleKind::kOptional:
      out = Render(node.children[0], 4) + "?";
      break;
    case RuleKind::kCharClass:
      out = "[";
      for (const std::string& c : node.chars) out += RenderClassMember(c);
      out += "]";
      break;
    case RuleKind::kVarRef:
      out = "$" + node.text + "$";
      break;
    case RuleKind::kInclude:
      out = "#include \"" + node.text + "\"";
      break;
  }
  if (Precedence(node.kind) < min_precedence) return "(" + out + ")";
  return out;
}

}  // namespace

RuleFile ParseRules(std::string_view text) {
  const std::string normalized = NormalizeNfc(text);
  Lexer lexer(normalized);
  Parser parser(lexer.Run());
  return parser.ParseFile();
}

std::string RenderExpression(const RuleAst& node) { return Render(node, 0); }

std::string RenderRules(const RuleFile& file) {
  std::string out;
  for (const RuleDefinition& def : file.definitions) {
    out += "$" + def.name + "$ = " + RenderExpression(def.body) + " ;\n";
  }
  out += RenderExpression(file.result) + "\n";
  return out;
}

}  // namespace morphfst

// Copyright 2026 WDQA Authors. All Rights Reserved.
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

#include "wdqa/sparql/parser.hpp"

#include <cctype>
#include <sstream>

namespace wdqa::sparql {

namespace {

std::pair<std::size_t, std::size_t> LineCol(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

enum class TokKind {
  kEnd,
  kIdent,    // bare word, possibly a keyword
  kPName,    // prefix:LocalId
  kVar,      // ?name
  kString,   // "..." with optional @lang / ^^date
  kNumber,   // bare numeric literal
  kLBrace,
  kRBrace,
  kDot,
  kLParen,
  kRParen,
  kComma,
  kCmp,      // = < > <= >=
};

struct Token {
  TokKind kind = TokKind::kEnd;
  std::size_t offset = 0;
  std::string text;         // ident / cmp / number lexical / var name
  std::string pname_prefix; // kPName
  std::string pname_id;
  Literal literal;          // kString / kNumber
};

std::string UpperAscii(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

bool IsIdentStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool IsIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  [[noreturn]] void Fail(ParseError::Code code, std::size_t offset, std::string msg,
                         std::vector<std::string> expected = {}) const {
    auto [line, col] = LineCol(text_, offset);
    throw ParseError(code, offset, line, col, std::move(msg), std::move(expected));
  }

  Token Next() {
    SkipSpace();
    Token t;
    t.offset = pos_;
    if (pos_ >= text_.size()) return t;
    char c = text_[pos_];
    switch (c) {
      case '{': ++pos_; t.kind = TokKind::kLBrace; return t;
      case '}': ++pos_; t.kind = TokKind::kRBrace; return t;
      case '(': ++pos_; t.kind = TokKind::kLParen; return t;
      case ')': ++pos_; t.kind = TokKind::kRParen; return t;
      case ',': ++pos_; t.kind = TokKind::kComma; return t;
      case '=': ++pos_; t.kind = TokKind::kCmp; t.text = "="; return t;
      case '<':
      case '>':
        ++pos_;
        t.kind = TokKind::kCmp;
        t.text = std::string(1, c);
        if (pos_ < text_.size() && text_[pos_] == '=') {
          t.text += '=';
          ++pos_;
        }
        return t;
      case '/':
      case '|':
      case '*':
        Fail(ParseError::Code::kUnsupported, pos_,
             "property paths are not part of this SPARQL subset");
      case '?':
        return LexVariable(t);
      case '"':
        return LexString(t);
      case '.':
        // A dot followed by a digit would be a fraction; standalone dot
        // terminates a triple.
        ++pos_;
        t.kind = TokKind::kDot;
        return t;
      default:
        break;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '-' && pos_ + 1 < text_.size() &&
         std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
      return LexNumber(t);
    }
    if (IsIdentStart(c)) return LexWord(t);
    Fail(ParseError::Code::kSyntax, pos_, std::string("unexpected character '") + c + "'");
  }

 private:
  void SkipSpace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  Token LexVariable(Token t) {
    ++pos_;  // '?'
    std::size_t start = pos_;
    while (pos_ < text_.size() && IsIdentChar(text_[pos_])) ++pos_;
    if (pos_ == start) {
      Fail(ParseError::Code::kSyntax, t.offset, "empty variable name");
    }
    t.kind = TokKind::kVar;
    t.text = std::string(text_.substr(start, pos_ - start));
    return t;
  }

  Token LexString(Token t) {
    ++pos_;  // opening quote
    std::string lex;
    while (true) {
      if (pos_ >= text_.size()) {
        Fail(ParseError::Code::kSyntax, t.offset, "unterminated string literal");
      }
      char c = text_[pos_++];
      if (c == '"') break;
      if (c == '\\') {
        if (pos_ >= text_.size()) {
          Fail(ParseError::Code::kSyntax, t.offset, "unterminated string escape");
        }
        lex.push_back(text_[pos_++]);
      } else {
        lex.push_back(c);
      }
    }
    t.kind = TokKind::kString;
    t.literal.lexical = std::move(lex);
    if (pos_ < text_.size() && text_[pos_] == '@') {
      ++pos_;
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-')) {
        ++pos_;
      }
      if (pos_ == start) {
        Fail(ParseError::Code::kSyntax, pos_, "empty language tag");
      }
      t.literal.tag = LiteralTag::kLang;
      t.literal.lang = std::string(text_.substr(start, pos_ - start));
    } else if (pos_ + 1 < text_.size() && text_[pos_] == '^' && text_[pos_ + 1] == '^') {
      pos_ += 2;
      std::size_t start = pos_;
      while (pos_ < text_.size() && IsIdentChar(text_[pos_])) ++pos_;
      std::string dt(text_.substr(start, pos_ - start));
      if (dt != "date") {
        Fail(ParseError::Code::kSyntax, start, "unknown literal datatype '" + dt + "'",
             {"date"});
      }
      t.literal.tag = LiteralTag::kDate;
    }
    return t;
  }

  Token LexNumber(Token t) {
    std::size_t start = pos_;
    if (text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ + 1 < text_.size() && text_[pos_] == '.' &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    t.kind = TokKind::kNumber;
    t.text = std::string(text_.substr(start, pos_ - start));
    t.literal.lexical = t.text;
    t.literal.tag = LiteralTag::kNumeric;
    return t;
  }

  Token LexWord(Token t) {
    std::size_t start = pos_;
    while (pos_ < text_.size() && IsIdentChar(text_[pos_])) ++pos_;
    std::string word(text_.substr(start, pos_ - start));
    if (pos_ < text_.size() && text_[pos_] == ':') {
      ++pos_;
      std::size_t id_start = pos_;
      while (pos_ < text_.size() && IsIdentChar(text_[pos_])) ++pos_;
      std::string id(text_.substr(id_start, pos_ - id_start));
      if (!PrefixFromName(word)) {
        Fail(ParseError::Code::kUnknownPrefix, start, "unknown prefix '" + word + "'",
             {"wd", "wdt", "p", "ps", "pq"});
      }
      t.kind = TokKind::kPName;
      t.pname_prefix = std::move(word);
      t.pname_id = std::move(id);
      return t;
    }
    t.kind = TokKind::kIdent;
    t.text = std::move(word);
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { Advance(); }

  Query Parse() {
    Query q;
    std::string kw = KeywordAt(cur_);
    if (kw == "ASK") {
      Advance();
      q.form = QueryForm::kAsk;
      ExpectKeyword("WHERE");
      ParseGroup(q);
    } else if (kw == "SELECT") {
      Advance();
      q.form = QueryForm::kSelect;
      ParseProjection(q);
      ExpectKeyword("WHERE");
      ParseGroup(q);
      ParseModifiers(q);
    } else {
      Fail("expected query form", {"ASK", "SELECT"});
    }
    if (cur_.kind != TokKind::kEnd) Fail("trailing input after query", {"end of input"});
    return q;
  }

 private:
  void Advance() { cur_ = lexer_.Next(); }

  // Uppercased ident text when the token is a bare word, else "".
  static std::string KeywordAt(const Token& t) {
    return t.kind == TokKind::kIdent ? UpperAscii(t.text) : std::string();
  }

  bool AtKeyword(std::string_view kw) const { return KeywordAt(cur_) == kw; }

  [[noreturn]] void Fail(std::string msg, std::vector<std::string> expected = {}) const {
    lexer_.Fail(ParseError::Code::kSyntax, cur_.offset, std::move(msg), std::move(expected));
  }

  void ExpectKeyword(std::string_view kw) {
    if (!AtKeyword(kw)) Fail("expected keyword", {std::string(kw)});
    Advance();
  }

  void Expect(TokKind kind, std::string what) {
    if (cur_.kind != kind) Fail("expected " + what, {what});
    Advance();
  }

  Variable ParseVariable() {
    if (cur_.kind != TokKind::kVar) Fail("expected variable", {"?var"});
    Variable v{cur_.text};
    Advance();
    return v;
  }

  Iri MakeIri(const Token& t) {
    auto prefix = PrefixFromName(t.pname_prefix);
    // Lexer guarantees a known prefix.
    char want = (*prefix == Prefix::kWd) ? 'Q' : 'P';
    const std::string& id = t.pname_id;
    bool ok = id.size() >= 2 && id[0] == want;
    for (std::size_t i = 1; ok && i < id.size(); ++i) {
      ok = std::isdigit(static_cast<unsigned char>(id[i]));
    }
    if (!ok) {
      lexer_.Fail(ParseError::Code::kMalformedId, t.offset,
                  "malformed id '" + id + "' for prefix '" + t.pname_prefix + "'",
                  {std::string(1, want) + "[0-9]+"});
    }
    return Iri{*prefix, id};
  }

  Term ParseTerm() {
    switch (cur_.kind) {
      case TokKind::kPName: {
        Iri iri = MakeIri(cur_);
        Advance();
        return iri;
      }
      case TokKind::kVar:
        return ParseVariable();
      case TokKind::kString:
      case TokKind::kNumber: {
        Literal lit = cur_.literal;
        Advance();
        return lit;
      }
      default:
        Fail("expected term", {"iri", "?var", "literal"});
    }
  }

  void ParseProjection(Query& q) {
    if (AtKeyword("DISTINCT")) {
      Advance();
      q.distinct = true;
    }
    // (COUNT(?x) AS ?c) | COUNT(?x) | ?x ?y ...
    if (cur_.kind == TokKind::kLParen || AtKeyword("COUNT")) {
      bool wrapped = cur_.kind == TokKind::kLParen;
      if (wrapped) Advance();
      ExpectKeyword("COUNT");
      Expect(TokKind::kLParen, "'('");
      if (AtKeyword("DISTINCT")) {
        Advance();
        q.distinct = true;
      }
      q.projection.push_back(ParseVariable());
      q.count = true;
      Expect(TokKind::kRParen, "')'");
      if (AtKeyword("AS")) {
        Advance();
        ParseVariable();  // alias carries no structure; dropped
      }
      if (wrapped) Expect(TokKind::kRParen, "')'");
      return;
    }
    while (cur_.kind == TokKind::kVar) q.projection.push_back(ParseVariable());
    if (q.projection.empty()) Fail("expected projection", {"?var", "COUNT"});
  }

  void RejectUnsupportedKeyword() {
    std::string kw = KeywordAt(cur_);
    if (kw == "OPTIONAL" || kw == "UNION" || kw == "MINUS" || kw == "SELECT" ||
        kw == "GROUP" || kw == "HAVING" || kw == "SERVICE" || kw == "VALUES" ||
        kw == "BIND") {
      lexer_.Fail(ParseError::Code::kUnsupported, cur_.offset,
                  "'" + kw + "' is not part of this SPARQL subset");
    }
  }

  void ParseGroup(Query& q) {
    Expect(TokKind::kLBrace, "'{'");
    bool saw_item = false;
    while (cur_.kind != TokKind::kRBrace) {
      if (cur_.kind == TokKind::kEnd) Fail("unterminated group", {"}"});
      RejectUnsupportedKeyword();
      if (AtKeyword("FILTER")) {
        Advance();
        q.filters.push_back(ParseFilter());
      } else {
        TriplePattern p;
        p.subject = ParseTerm();
        p.predicate = ParseTerm();
        p.object = ParseTerm();
        q.patterns.push_back(std::move(p));
      }
      saw_item = true;
      if (cur_.kind == TokKind::kDot) Advance();
    }
    if (!saw_item) Fail("empty pattern group", {"triple pattern", "FILTER"});
    Advance();  // '}'
  }

  Comparator ParseComparator() {
    if (cur_.kind != TokKind::kCmp) Fail("expected comparator", {"=", "<", ">", "<=", ">="});
    std::string op = cur_.text;
    Advance();
    if (op == "=") return Comparator::kEq;
    if (op == "<") return Comparator::kLt;
    if (op == ">") return Comparator::kGt;
    if (op == "<=") return Comparator::kLe;
    return Comparator::kGe;
  }

  FilterExpr ParseFilter() {
    Expect(TokKind::kLParen, "'('");
    FilterExpr f;
    std::string kw = KeywordAt(cur_);
    if (kw == "CONTAINS" || kw == "STRSTARTS") {
      Advance();
      f.op = (kw == "CONTAINS") ? FilterOp::kContains : FilterOp::kStrStarts;
      Expect(TokKind::kLParen, "'('");
      f.args.push_back(ParseTerm());
      Expect(TokKind::kComma, "','");
      f.args.push_back(ParseTerm());
      Expect(TokKind::kRParen, "')'");
    } else if (kw == "LANG") {
      Advance();
      f.op = FilterOp::kLangEquals;
      Expect(TokKind::kLParen, "'('");
      f.args.push_back(ParseTerm());
      Expect(TokKind::kRParen, "')'");
      if (cur_.kind != TokKind::kCmp || cur_.text != "=") Fail("expected '='", {"="});
      Advance();
      f.args.push_back(ParseTerm());
    } else if (kw == "YEAR") {
      Advance();
      f.op = FilterOp::kYearCompare;
      Expect(TokKind::kLParen, "'('");
      f.args.push_back(ParseTerm());
      Expect(TokKind::kRParen, "')'");
      f.cmp = ParseComparator();
      f.args.push_back(ParseTerm());
    } else {
      f.op = FilterOp::kNumericCompare;
      f.args.push_back(ParseTerm());
      f.cmp = ParseComparator();
      f.args.push_back(ParseTerm());
    }
    Expect(TokKind::kRParen, "')'");
    return f;
  }

  void ParseModifiers(Query& q) {
    if (AtKeyword("ORDER")) {
      Advance();
      ExpectKeyword("BY");
      OrderBy ob{Variable{}, SortDir::kAscend};
      if (AtKeyword("ASC") || AtKeyword("DESC")) {
        ob.dir = AtKeyword("ASC") ? SortDir::kAscend : SortDir::kDescend;
        Advance();
        Expect(TokKind::kLParen, "'('");
        ob.var = ParseVariable();
        Expect(TokKind::kRParen, "')'");
      } else {
        ob.var = ParseVariable();
      }
      q.order_by = ob;
    }
    if (AtKeyword("LIMIT")) {
      Advance();
      if (cur_.kind != TokKind::kNumber) Fail("expected limit count", {"positive integer"});
      const std::string& lex = cur_.text;
      if (lex.find('.') != std::string::npos || lex[0] == '-') {
        Fail("limit must be a positive integer", {"positive integer"});
      }
      long n = std::stol(lex);
      if (n <= 0) Fail("limit must be a positive integer", {"positive integer"});
      q.limit = n;
      Advance();
    }
  }

  Lexer lexer_;
  Token cur_;
};

}  // namespace

ParseError::ParseError(Code code, std::size_t offset, std::size_t line, std::size_t col,
                       std::string message, std::vector<std::string> expected)
    : std::runtime_error(std::move(message)),
      code(code),
      offset(offset),
      line(line),
      col(col),
      expected(std::move(expected)) {}

const char* ParseError::CodeName() const {
  switch (code) {
    case Code::kSyntax: return "syntax-error";
    case Code::kUnknownPrefix: return "unknown-prefix";
    case Code::kMalformedId: return "malformed-id";
    case Code::kUnsupported: return "unsupported-construct";
  }
  return "parse-error";
}

std::string ParseError::Render() const {
  std::ostringstream os;
  os << line << ":" << col << ": " << CodeName() << ": " << what();
  if (!expected.empty()) {
    os << " (expected";
    for (const auto& e : expected) os << " " << e;
    os << ")";
  }
  return os.str();
}

Query ParseQuery(std::string_view text) { return Parser(text).Parse(); }

}  // namespace wdqa::sparql

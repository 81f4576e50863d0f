#include "qcent/presentation.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <set>
#include <sstream>
#include <utility>

#include "qcent/error.hpp"

namespace qcent {

Word Word::generator(std::size_t index, std::int64_t exponent) {
  if (exponent == 0) return Word{};
  return Word({Letter{index, exponent}});
}

std::int64_t Word::length() const {
  std::int64_t n = 0;
  for (const auto& l : letters_) n += std::llabs(l.exponent);
  return n;
}

Word Word::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l.exponent = -l.exponent;
  return Word(std::move(out));
}

Word Word::operator*(const Word& other) const {
  std::vector<Letter> out = letters_;
  out.insert(out.end(), other.letters_.begin(), other.letters_.end());
  return free_reduce(Word(std::move(out)));
}

Word Word::power(std::int64_t k) const {
  Word base = free_reduce(*this);
  if (k < 0) {
    base = base.inverse();
    k = -k;
  }
  if (base.letters_.size() == 1) return Word::generator(base.letters_[0].generator, base.letters_[0].exponent * k);
  Word out;
  for (std::int64_t i = 0; i < k; ++i) out = out * base;
  return out;
}

Word free_reduce(const Word& w) {
  std::vector<Letter> stack;
  for (const auto& l : w.letters()) {
    if (l.exponent == 0) continue;
    if (!stack.empty() && stack.back().generator == l.generator) {
      stack.back().exponent += l.exponent;
      if (stack.back().exponent == 0) stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(std::move(stack));
}

bool is_trivial_in_free(const Word& w) { return free_reduce(w).empty(); }

Word commutator(const Word& a, const Word& b) { return a.inverse() * b.inverse() * a * b; }

bool operator==(const Factor& a, const Factor& b) {
  return a.kind == b.kind && a.exponent == b.exponent && a.operands == b.operands &&
         (a.kind != Factor::Kind::generator || a.generator == b.generator);
}

bool operator==(const WordExpr& a, const WordExpr& b) { return a.factors == b.factors; }

Factor gen_factor(std::size_t generator, std::int64_t exponent) {
  Factor f;
  f.kind = Factor::Kind::generator;
  f.generator = generator;
  f.exponent = exponent;
  return f;
}

Factor commutator_factor(WordExpr a, WordExpr b, std::int64_t exponent) {
  Factor f;
  f.kind = Factor::Kind::commutator;
  f.operands.push_back(std::move(a));
  f.operands.push_back(std::move(b));
  f.exponent = exponent;
  return f;
}

Factor group_factor(WordExpr w, std::int64_t exponent) {
  Factor f;
  f.kind = Factor::Kind::group;
  f.operands.push_back(std::move(w));
  f.exponent = exponent;
  return f;
}

Word desugar(const WordExpr& expr) {
  Word out;
  for (const auto& f : expr.factors) {
    switch (f.kind) {
      case Factor::Kind::generator:
        out = out * Word::generator(f.generator, f.exponent);
        break;
      case Factor::Kind::commutator:
        out = out * commutator(desugar(f.operands.at(0)), desugar(f.operands.at(1))).power(f.exponent);
        break;
      case Factor::Kind::group:
        out = out * desugar(f.operands.at(0)).power(f.exponent);
        break;
    }
  }
  return out;
}

namespace {

void check_indices(const WordExpr& e, std::size_t n) {
  for (const auto& f : e.factors) {
    if (f.kind == Factor::Kind::generator && f.generator >= n)
      throw DomainError("relator references generator index " + std::to_string(f.generator) +
                        " but only " + std::to_string(n) + " generators exist");
    for (const auto& op : f.operands) check_indices(op, n);
  }
}

}  // namespace

bool is_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c))) return false;
  return true;
}

Presentation::Presentation(std::string name, std::vector<std::string> generator_names,
                           std::vector<WordExpr> relator_exprs)
    : name_(std::move(name)),
      generator_names_(std::move(generator_names)),
      relator_exprs_(std::move(relator_exprs)) {
  if (!is_identifier(name_)) throw DomainError("invalid group name '" + name_ + "'");
  if (generator_names_.empty()) throw DomainError("empty generator list");
  std::set<std::string> seen;
  for (const auto& g : generator_names_) {
    if (!is_identifier(g)) throw DomainError("invalid generator name '" + g + "'");
    if (!seen.insert(g).second) throw DomainError("duplicate generator " + g);
  }
  for (const auto& r : relator_exprs_) {
    check_indices(r, generator_names_.size());
    relators_.push_back(desugar(r));
  }
}

std::optional<std::size_t> Presentation::generator_index(std::string_view name) const {
  for (std::size_t i = 0; i < generator_names_.size(); ++i)
    if (generator_names_[i] == name) return i;
  return std::nullopt;
}

bool Presentation::operator==(const Presentation& other) const {
  return name_ == other.name_ && generator_names_ == other.generator_names_ &&
         relator_exprs_ == other.relator_exprs_;
}

Presentation free_presentation(std::string name, std::vector<std::string> generator_names) {
  return Presentation(std::move(name), std::move(generator_names), {});
}

// ---------------------------------------------------------------------------
// Text format

namespace {

struct Token {
  enum class Kind { ident, integer, symbol, end };
  Kind kind = Kind::end;
  std::string text;
  char symbol = 0;
  std::int64_t value = 0;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      Token t;
      t.line = line_;
      t.column = column_;
      if (pos_ >= text_.size()) {
        t.kind = Token::Kind::end;
        out.push_back(t);
        return out;
      }
      char c = text_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c))) {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) advance();
        t.kind = Token::Kind::ident;
        t.text = std::string(text_.substr(start, pos_ - start));
      } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                 (c == '-' && pos_ + 1 < text_.size() &&
                  std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
        std::size_t start = pos_;
        advance();
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) advance();
        t.kind = Token::Kind::integer;
        t.text = std::string(text_.substr(start, pos_ - start));
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), t.value);
        if (ec != std::errc{} || ptr != t.text.data() + t.text.size())
          throw ParseError("integer out of range '" + t.text + "'", t.line, t.column);
      } else if (std::string_view("{}:;,[]()^").find(c) != std::string_view::npos) {
        t.kind = Token::Kind::symbol;
        t.symbol = c;
        t.text = std::string(1, c);
        advance();
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'", line_, column_);
      }
      out.push_back(t);
    }
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Token::Kind::end:
      return "end of input";
    case Token::Kind::ident:
      return "identifier '" + t.text + "'";
    case Token::Kind::integer:
      return "integer " + t.text;
    case Token::Kind::symbol:
      return "'" + t.text + "'";
  }
  return "token";
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  std::vector<Presentation> file() {
    std::vector<Presentation> out;
    do {
      out.push_back(group());
    } while (peek().kind != Token::Kind::end);
    return out;
  }

  Word standalone_word(const std::vector<std::string>& names) {
    names_ = &names;
    WordExpr e;
    if (peek().kind != Token::Kind::end) e = word();
    if (peek().kind != Token::Kind::end) fail("expected end of word, found " + describe(peek()));
    return desugar(e);
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  Token next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().line, peek().column); }
  [[noreturn]] void fail_at(const Token& t, const std::string& msg) const {
    throw ParseError(msg, t.line, t.column);
  }

  bool is_symbol(char c) const { return peek().kind == Token::Kind::symbol && peek().symbol == c; }

  void expect_symbol(char c) {
    if (!is_symbol(c)) fail(std::string("expected '") + c + "', found " + describe(peek()));
    next();
  }

  void expect_keyword(const char* kw) {
    if (peek().kind != Token::Kind::ident || peek().text != kw)
      fail(std::string("expected '") + kw + "', found " + describe(peek()));
    next();
  }

  Token expect_ident() {
    if (peek().kind != Token::Kind::ident) fail("expected identifier, found " + describe(peek()));
    return next();
  }

  Presentation group() {
    expect_keyword("group");
    Token name = expect_ident();
    expect_symbol('{');
    expect_keyword("generators");
    expect_symbol(':');
    std::vector<std::string> gens;
    if (is_symbol(';')) fail("empty generator list");
    std::set<std::string> seen;
    for (;;) {
      Token g = expect_ident();
      if (!seen.insert(g.text).second) fail_at(g, "duplicate generator " + g.text);
      gens.push_back(g.text);
      if (!is_symbol(',')) break;
      next();
    }
    expect_symbol(';');
    expect_keyword("relators");
    expect_symbol(':');
    names_ = &gens;
    std::vector<WordExpr> rels;
    if (!is_symbol(';')) {
      for (;;) {
        rels.push_back(word());
        if (!is_symbol(',')) break;
        next();
      }
    }
    expect_symbol(';');
    expect_symbol('}');
    names_ = nullptr;
    return Presentation(name.text, std::move(gens), std::move(rels));
  }

  bool starts_factor() const {
    return peek().kind == Token::Kind::ident || is_symbol('[') || is_symbol('(');
  }

  WordExpr word() {
    WordExpr e;
    if (!starts_factor()) fail("expected word, found " + describe(peek()));
    while (starts_factor()) e.factors.push_back(factor());
    return e;
  }

  std::int64_t exponent() {
    if (!is_symbol('^')) return 1;
    next();
    if (peek().kind != Token::Kind::integer) fail("expected integer exponent, found " + describe(peek()));
    return next().value;
  }

  Factor factor() {
    if (peek().kind == Token::Kind::ident) {
      Token id = next();
      std::size_t index = 0;
      bool found = false;
      for (std::size_t i = 0; i < names_->size(); ++i)
        if ((*names_)[i] == id.text) {
          index = i;
          found = true;
        }
      if (!found) fail_at(id, "undeclared generator " + id.text);
      return gen_factor(index, exponent());
    }
    if (is_symbol('[')) {
      next();
      WordExpr a = word();
      expect_symbol(',');
      WordExpr b = word();
      expect_symbol(']');
      return commutator_factor(std::move(a), std::move(b), exponent());
    }
    expect_symbol('(');
    WordExpr w = word();
    expect_symbol(')');
    return group_factor(std::move(w), exponent());
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const std::vector<std::string>* names_ = nullptr;
};

}  // namespace

std::vector<Presentation> parse_presentations(std::string_view text) {
  Parser parser(Lexer(text).run());
  return parser.file();
}

Presentation parse_presentation(std::string_view text) {
  auto all = parse_presentations(text);
  if (all.size() != 1) throw DomainError("expected exactly one group, found " + std::to_string(all.size()));
  return std::move(all.front());
}

Word parse_word(std::string_view text, const std::vector<std::string>& generator_names) {
  Parser parser(Lexer(text).run());
  return parser.standalone_word(generator_names);
}

std::string to_string(const WordExpr& expr, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < expr.factors.size(); ++i) {
    const Factor& f = expr.factors[i];
    if (i > 0) out += ' ';
    switch (f.kind) {
      case Factor::Kind::generator:
        out += names.at(f.generator);
        break;
      case Factor::Kind::commutator:
        out += "[" + to_string(f.operands.at(0), names) + "," + to_string(f.operands.at(1), names) + "]";
        break;
      case Factor::Kind::group:
        out += "(" + to_string(f.operands.at(0), names) + ")";
        break;
    }
    if (f.exponent != 1) out += "^" + std::to_string(f.exponent);
  }
  return out;
}

std::string to_string(const Word& word, const std::vector<std::string>& names) {
  if (word.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < word.letters().size(); ++i) {
    const Letter& l = word.letters()[i];
    if (i > 0) out += ' ';
    out += names.at(l.generator);
    if (l.exponent != 1) out += "^" + std::to_string(l.exponent);
  }
  return out;
}

std::string to_string(const Presentation& pres) {
  std::ostringstream os;
  os << "group " << pres.name() << " {\n  generators: ";
  for (std::size_t i = 0; i < pres.generator_count(); ++i) {
    if (i > 0) os << ", ";
    os << pres.generator_names()[i];
  }
  os << ";\n  relators: ";
  for (std::size_t i = 0; i < pres.relator_exprs().size(); ++i) {
    if (i > 0) os << ", ";
    os << to_string(pres.relator_exprs()[i], pres.generator_names());
  }
  os << ";\n}\n";
  return os.str();
}

}  // namespace qcent

#include "s5/parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace s5 {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

enum class Tok {
  ident,
  negation,
  conjunction,
  disjunction,
  implication,
  equivalence,
  box,
  diamond,
  lparen,
  rparen,
  begin,
  end,
  semicolon,
  truth,
  falsity,
  eof,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  Lexer(std::string_view text, const ParseOptions& options) : text_(text), options_(options) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_blank();
      if (pos_ >= text_.size()) {
        out.push_back({Tok::eof, "", line_, column_});
        return out;
      }
      out.push_back(next());
    }
  }

 private:
  bool intohylo() const { return options_.format == SourceFormat::intohylo; }

  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void advance(std::size_t n = 1) {
    for (std::size_t i = 0; i < n && pos_ < text_.size(); ++i) {
      if (text_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
      ++pos_;
    }
  }

  bool starts_with(std::string_view s) const { return text_.substr(pos_, s.size()) == s; }

  void skip_blank() {
    while (pos_ < text_.size()) {
      char c = peek();
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (intohylo() && c == '%') {
        while (pos_ < text_.size() && peek() != '\n') advance();
      } else {
        return;
      }
    }
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_, column_);
  }

  Token make(Tok kind, std::size_t len, std::size_t line, std::size_t column) {
    Token t{kind, std::string(text_.substr(pos_, len)), line, column};
    advance(len);
    return t;
  }

  // "[r1]", "[1]", "<r1>", "<1>" in intohylo input; only index 1 is S5.
  std::optional<Token> indexed_modality(Tok kind, char close) {
    std::size_t i = 1;
    if (peek(i) == 'r' || peek(i) == 'R') ++i;
    std::size_t digits_start = i;
    while (std::isdigit(static_cast<unsigned char>(peek(i)))) ++i;
    if (i == digits_start || peek(i) != close) return std::nullopt;
    std::string index(text_.substr(pos_ + digits_start, i - digits_start));
    if (index != "1") {
      fail("modality index " + index + " is not supported (S5 is mono-modal)");
    }
    return make(kind, i + 1, line_, column_);
  }

  Token next() {
    const std::size_t line = line_;
    const std::size_t column = column_;
    char c = peek();

    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t len = 0;
      while (std::isalnum(static_cast<unsigned char>(peek(len))) || peek(len) == '_') ++len;
      std::string word(text_.substr(pos_, len));
      if (intohylo()) {
        if (word == "begin") return make(Tok::begin, len, line, column);
        if (word == "end") return make(Tok::end, len, line, column);
        if (word == "true") return make(Tok::truth, len, line, column);
        if (word == "false") return make(Tok::falsity, len, line, column);
      } else {
        if (word == "box") return make(Tok::box, len, line, column);
        if (word == "dia") return make(Tok::diamond, len, line, column);
        if (word == "true" || word == "false") {
          fail("constant '" + word + "' is not part of the native grammar");
        }
      }
      if (!options_.allow_reserved && is_reserved_name(word)) {
        fail("identifier '" + word + "' uses the reserved prefix '" +
             std::string(kReservedPrefix) + "'");
      }
      return make(Tok::ident, len, line, column);
    }

    switch (c) {
      case '~':
      case '!':
        return make(Tok::negation, 1, line, column);
      case '&':
        return make(Tok::conjunction, 1, line, column);
      case '|':
        return make(Tok::disjunction, 1, line, column);
      case '(':
        return make(Tok::lparen, 1, line, column);
      case ')':
        return make(Tok::rparen, 1, line, column);
      case ';':
        if (intohylo()) return make(Tok::semicolon, 1, line, column);
        break;
      case '-':
        if (starts_with("->")) return make(Tok::implication, 2, line, column);
        if (intohylo() && starts_with("-->")) return make(Tok::implication, 3, line, column);
        break;
      case '<':
        if (starts_with("<->")) return make(Tok::equivalence, 3, line, column);
        if (intohylo() && starts_with("<-->")) return make(Tok::equivalence, 4, line, column);
        if (starts_with("<>")) return make(Tok::diamond, 2, line, column);
        if (intohylo()) {
          if (auto t = indexed_modality(Tok::diamond, '>')) return *t;
        }
        break;
      case '[':
        if (starts_with("[]")) return make(Tok::box, 2, line, column);
        if (intohylo()) {
          if (auto t = indexed_modality(Tok::box, ']')) return *t;
        }
        break;
      default:
        break;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  const ParseOptions& options_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, const ParseOptions& options)
      : tokens_(std::move(tokens)), options_(options) {}

  Formula run() {
    Formula f = options_.format == SourceFormat::intohylo ? intohylo_document() : formula();
    expect(Tok::eof, "end of input");
    return f;
  }

 private:
  const Token& current() const { return tokens_[pos_]; }
  bool at(Tok kind) const { return current().kind == kind; }

  const Token& take() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, current().line, current().column);
  }

  void expect(Tok kind, const char* what) {
    if (!at(kind)) {
      fail(std::string("expected ") + what +
           (current().kind == Tok::eof ? ", found end of input"
                                       : ", found '" + current().text + "'"));
    }
    take();
  }

  Formula intohylo_document() {
    expect(Tok::begin, "'begin'");
    std::vector<Formula> parts;
    parts.push_back(formula());
    while (at(Tok::semicolon)) {
      take();
      if (at(Tok::end)) break;
      parts.push_back(formula());
    }
    expect(Tok::end, "'end'");
    return conj(std::move(parts));
  }

  Formula formula() {
    Formula lhs = implication();
    while (at(Tok::equivalence)) {
      take();
      lhs = iff(lhs, implication());
    }
    return lhs;
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (at(Tok::implication)) {
      take();
      return implies(lhs, implication());
    }
    return lhs;
  }

  Formula disjunction() {
    std::vector<Formula> parts{conjunction()};
    while (at(Tok::disjunction)) {
      take();
      parts.push_back(conjunction());
    }
    return disj(std::move(parts));
  }

  Formula conjunction() {
    std::vector<Formula> parts{unary()};
    while (at(Tok::conjunction)) {
      take();
      parts.push_back(unary());
    }
    return conj(std::move(parts));
  }

  Formula unary() {
    switch (current().kind) {
      case Tok::negation: take(); return neg(unary());
      case Tok::box: take(); return box(unary());
      case Tok::diamond: take(); return dia(unary());
      default: return primary();
    }
  }

  Formula primary() {
    switch (current().kind) {
      case Tok::ident: {
        const Token& t = take();
        if (is_reserved_name(t.text)) return Formula::atom(reserved_atom(t.text));
        return Formula::atom(t.text);
      }
      case Tok::truth: take(); return verum();
      case Tok::falsity: take(); return falsum();
      case Tok::lparen: {
        take();
        Formula inner = formula();
        expect(Tok::rparen, "')'");
        return inner;
      }
      case Tok::eof: fail("unexpected end of input");
      default: fail("unexpected '" + current().text + "'");
    }
  }

  static Atom reserved_atom(const std::string& name) {
    Atom a{name, AtomOrigin::fresh, 0};
    // "__n<k>" names come from the normaliser's generator.
    const std::string prefix = std::string(kReservedPrefix) + "n";
    if (name.rfind(prefix, 0) == 0 && name.size() > prefix.size()) {
      try {
        a.generation = static_cast<unsigned>(std::stoul(name.substr(prefix.size())));
      } catch (const std::exception&) {
        a.generation = 0;
      }
    }
    return a;
  }

  std::vector<Token> tokens_;
  const ParseOptions& options_;
  std::size_t pos_ = 0;
};

// Binding strength used by the renderer; higher binds tighter.
int precedence(const Formula& f) {
  switch (f.op()) {
    case Op::equivalence: return 1;
    case Op::implication: return 2;
    case Op::disjunction: return 3;
    case Op::conjunction: return 4;
    case Op::negation:
    case Op::box:
    case Op::diamond: return 5;
    case Op::atom: return 6;
  }
  return 0;
}

void render_into(const Formula& f, std::string& out);

void render_child(const Formula& child, bool parens, std::string& out) {
  if (parens) out += '(';
  render_into(child, out);
  if (parens) out += ')';
}

void render_into(const Formula& f, std::string& out) {
  const int prec = precedence(f);
  switch (f.op()) {
    case Op::atom:
      out += f.atom_value().name;
      return;
    case Op::negation:
      out += '~';
      render_child(f.child(), precedence(f.child()) < prec, out);
      return;
    case Op::box:
    case Op::diamond:
      out += f.op() == Op::box ? "box" : "dia";
      render_child(f.child(), true, out);
      return;
    case Op::conjunction:
    case Op::disjunction: {
      const char* sep = f.op() == Op::conjunction ? " & " : " | ";
      bool first = true;
      for (const auto& c : f.children()) {
        if (!first) out += sep;
        first = false;
        render_child(c, precedence(c) <= prec, out);
      }
      return;
    }
    case Op::implication:
      render_child(f.child(0), precedence(f.child(0)) <= prec, out);
      out += " -> ";
      render_child(f.child(1), precedence(f.child(1)) < prec, out);
      return;
    case Op::equivalence:
      render_child(f.child(0), precedence(f.child(0)) < prec, out);
      out += " <-> ";
      render_child(f.child(1), precedence(f.child(1)) <= prec, out);
      return;
  }
}

}  // namespace

Formula parse(std::string_view text, SourceFormat format) {
  return parse(text, ParseOptions{format, false});
}

Formula parse(std::string_view text, const ParseOptions& options) {
  Lexer lexer(text, options);
  Parser parser(lexer.run(), options);
  return parser.run();
}

SourceFormat format_for_path(const std::filesystem::path& path) {
  auto ext = path.extension().string();
  if (ext == ".intohylo" || ext == ".hylo") return SourceFormat::intohylo;
  return SourceFormat::native;
}

std::string render(const Formula& f) {
  std::string out;
  render_into(f, out);
  return out;
}

Formula desugar(const Formula& f) {
  switch (f.op()) {
    case Op::atom:
      return f;
    case Op::negation:
      return neg(desugar(f.child()));
    case Op::box:
      return box(desugar(f.child()));
    case Op::diamond:
      return dia(desugar(f.child()));
    case Op::conjunction:
    case Op::disjunction: {
      std::vector<Formula> parts;
      for (const auto& c : f.children()) parts.push_back(desugar(c));
      return f.op() == Op::conjunction ? conj(std::move(parts)) : disj(std::move(parts));
    }
    case Op::implication:
      return disj({neg(desugar(f.child(0))), desugar(f.child(1))});
    case Op::equivalence: {
      Formula a = desugar(f.child(0));
      Formula b = desugar(f.child(1));
      return conj({disj({neg(a), b}), disj({neg(b), a})});
    }
  }
  return f;
}

}  // namespace s5

#include "ccs/parser.hpp"

#include <cctype>
#include <vector>

namespace ccs {

SyntaxError::SyntaxError(const std::string& message, SourceSpan span)
    : Error(std::to_string(span.line) + ":" + std::to_string(span.column) + ": " + message),
      span_(span) {}

namespace {

enum class Tok {
  Name,      // lowercase identifier
  Constant,  // uppercase identifier
  CoName,    // 'name
  Zero,
  Tau,
  New,
  Dot,
  Plus,
  Bar,
  LParen,
  RParen,
  LBrace,
  RBrace,
  LBracket,
  RBracket,
  Comma,
  Arrow,
  Backslash,
  Equals,
  Semicolon,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    i += n;
    col += n;
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == '\n') {
      ++i;
      ++line;
      col = 1;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    SourceSpan span{line, col, 1};
    auto single = [&](Tok t) {
      out.push_back({t, std::string(1, c), span});
      advance(1);
    };
    switch (c) {
      case '.': single(Tok::Dot); continue;
      case '+': single(Tok::Plus); continue;
      case '|': single(Tok::Bar); continue;
      case '(': single(Tok::LParen); continue;
      case ')': single(Tok::RParen); continue;
      case '{': single(Tok::LBrace); continue;
      case '}': single(Tok::RBrace); continue;
      case '[': single(Tok::LBracket); continue;
      case ']': single(Tok::RBracket); continue;
      case ',': single(Tok::Comma); continue;
      case '\\': single(Tok::Backslash); continue;
      case '=': single(Tok::Equals); continue;
      case ';': single(Tok::Semicolon); continue;
      default: break;
    }
    if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      span.length = 2;
      out.push_back({Tok::Arrow, "->", span});
      advance(2);
      continue;
    }
    if (c == '0' && (i + 1 >= src.size() || !ident_char(src[i + 1]))) {
      single(Tok::Zero);
      continue;
    }
    if (c == '\'') {
      std::size_t j = i + 1;
      if (j >= src.size() || !std::islower(static_cast<unsigned char>(src[j]))) {
        throw SyntaxError("expected a name after '", span);
      }
      while (j < src.size() && ident_char(src[j])) ++j;
      std::string name(src.substr(i + 1, j - i - 1));
      if (name == "tau" || name == "new") {
        throw SyntaxError("'" + name + "' cannot be complemented", span);
      }
      span.length = j - i;
      out.push_back({Tok::CoName, std::move(name), span});
      advance(j - i);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && ident_char(src[j])) ++j;
      std::string word(src.substr(i, j - i));
      span.length = j - i;
      Tok kind = std::isupper(static_cast<unsigned char>(c)) ? Tok::Constant : Tok::Name;
      if (word == "tau") kind = Tok::Tau;
      if (word == "new") kind = Tok::New;
      out.push_back({kind, std::move(word), span});
      advance(j - i);
      continue;
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", span);
  }
  // End of input is reported just past the last token.
  SourceSpan end{1, 1, 0};
  if (!out.empty()) {
    end = out.back().span;
    end.column += end.length;
    end.length = 0;
  }
  out.push_back({Tok::End, "", end});
  return out;
}

class Parser {
public:
  explicit Parser(std::string_view src) : toks_(tokenize(src)) {}

  Process term_to_end() {
    Process p = sum();
    expect(Tok::End, "end of input");
    return p;
  }

  Action action_to_end() {
    Action u = action();
    expect(Tok::End, "end of input");
    return u;
  }

  Environment workspace() {
    Environment env;
    while (peek().kind != Tok::End) {
      const Token& t = peek();
      if (t.kind == Tok::Name && t.text == "alphabet") {
        ++pos_;
        if (peek().kind != Tok::Semicolon) {
          for (;;) {
            env.declare_label(LabelId(expect(Tok::Name, "label name").text));
            if (!accept(Tok::Comma)) break;
          }
        }
        expect(Tok::Semicolon, "';'");
      } else if (t.kind == Tok::Name && t.text == "agent") {
        ++pos_;
        std::string name = expect(Tok::Constant, "agent name").text;
        expect(Tok::Equals, "'='");
        Process body = sum();
        expect(Tok::Semicolon, "';'");
        env.define(name, std::move(body));
      } else {
        fail("expected 'alphabet' or 'agent'");
      }
    }
    for (const auto& [name, body] : env.definitions()) {
      for (const auto& l : mentioned_labels(body)) env.declare_label(l);
    }
    return env;
  }

private:
  const Token& peek() const { return toks_[pos_]; }

  bool accept(Tok k) {
    if (peek().kind == k) {
      ++pos_;
      return true;
    }
    return false;
  }

  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k) fail(std::string("expected ") + what);
    return toks_[pos_++];
  }

  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw SyntaxError(msg + ", found " + found, t.span);
  }

  Process sum() {
    Process p = par();
    while (accept(Tok::Plus)) p = Process::sum(std::move(p), par());
    return p;
  }

  Process par() {
    Process p = restr();
    while (accept(Tok::Bar)) p = Process::par(std::move(p), restr());
    return p;
  }

  LabelSet label_set() {
    expect(Tok::LBrace, "'{'");
    LabelSet out;
    if (peek().kind != Tok::RBrace) {
      for (;;) {
        out.insert(LabelId(expect(Tok::Name, "label name").text));
        if (!accept(Tok::Comma)) break;
      }
    }
    expect(Tok::RBrace, "'}'");
    return out;
  }

  Process restr() {
    if (accept(Tok::New)) {
      LabelSet hidden = label_set();
      return Process::restr(std::move(hidden), restr());
    }
    if (peek().kind == Tok::LParen && toks_[pos_ + 1].kind == Tok::Backslash) {
      pos_ += 2;
      LabelSet hidden = label_set();
      expect(Tok::RParen, "')'");
      return Process::restr(std::move(hidden), restr());
    }
    return relab();
  }

  Process relab() {
    Process p = prefix();
    while (accept(Tok::LBracket)) {
      Relabeling rf;
      if (peek().kind != Tok::RBracket) {
        for (;;) {
          const Token& from = expect(Tok::Name, "label name");
          expect(Tok::Arrow, "'->'");
          const Token& to = expect(Tok::Name, "label name");
          if (!rf.map.emplace(LabelId(from.text), LabelId(to.text)).second) {
            throw SyntaxError("label '" + from.text + "' relabelled twice", from.span);
          }
          if (!accept(Tok::Comma)) break;
        }
      }
      expect(Tok::RBracket, "']'");
      p = Process::relab(std::move(p), std::move(rf));
    }
    return p;
  }

  Action action() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Tau: ++pos_; return Action::tau();
      case Tok::Name: ++pos_; return Action::name(t.text);
      case Tok::CoName: ++pos_; return Action::coname(t.text);
      default: fail("expected an action");
    }
  }

  Process prefix() {
    switch (peek().kind) {
      case Tok::Tau:
      case Tok::Name:
      case Tok::CoName: {
        Action u = action();
        expect(Tok::Dot, "'.' after action");
        return Process::prefix(std::move(u), prefix());
      }
      default:
        return atom();
    }
  }

  Process atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Zero: ++pos_; return Process::nil();
      case Tok::Constant: ++pos_; return Process::constant(t.text);
      case Tok::LParen: {
        ++pos_;
        Process p = sum();
        expect(Tok::RParen, "')'");
        return p;
      }
      default: fail("expected a process term");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// Binding strength of each operator; a subterm is parenthesised when its
// own level is below what the enclosing slot accepts.
int level(const Process& p) {
  switch (p.kind()) {
    case TermKind::Sum: return 0;
    case TermKind::Par: return 1;
    case TermKind::Restr: return 2;
    case TermKind::Relab: return 3;
    case TermKind::Prefix: return 4;
    case TermKind::Nil:
    case TermKind::Const: return 5;
  }
  return 5;
}

void print(const Process& p, int min_level, std::string& out) {
  bool parens = level(p) < min_level;
  if (parens) out += '(';
  switch (p.kind()) {
    case TermKind::Nil:
      out += '0';
      break;
    case TermKind::Const:
      out += p.name();
      break;
    case TermKind::Prefix:
      out += print_action(p.action());
      out += '.';
      print(p.body(), 4, out);
      break;
    case TermKind::Sum:
      print(p.left(), 0, out);
      out += " + ";
      print(p.right(), 1, out);
      break;
    case TermKind::Par:
      print(p.left(), 1, out);
      out += " | ";
      print(p.right(), 2, out);
      break;
    case TermKind::Restr: {
      out += "new {";
      bool first = true;
      for (const auto& l : p.hidden()) {
        if (!first) out += ", ";
        out += l.str();
        first = false;
      }
      out += "} ";
      print(p.body(), 2, out);
      break;
    }
    case TermKind::Relab:
      print(p.body(), 3, out);
      out += print_relabeling(p.relabeling());
      break;
  }
  if (parens) out += ')';
}

}  // namespace

Process parse_term(std::string_view src) { return Parser(src).term_to_end(); }

Action parse_action(std::string_view src) { return Parser(src).action_to_end(); }

Environment parse_workspace(std::string_view src) { return Parser(src).workspace(); }

std::string print_label(const Label& l) {
  return (l.polarity == Polarity::CoName ? "'" : "") + l.base.str();
}

std::string print_action(const Action& u) {
  return u.is_tau() ? "tau" : print_label(u.label());
}

std::string print_relabeling(const Relabeling& rf) {
  std::string out = "[";
  bool first = true;
  for (const auto& [from, to] : rf.map) {
    if (!first) out += ", ";
    out += from.str() + "->" + to.str();
    first = false;
  }
  return out + "]";
}

std::string print_term(const Process& p) {
  std::string out;
  print(p, 0, out);
  return out;
}

std::string print_workspace(const Environment& env) {
  std::string out;
  if (!env.alphabet().empty()) {
    out += "alphabet ";
    for (std::size_t i = 0; i < env.alphabet().size(); ++i) {
      if (i) out += ", ";
      out += env.alphabet()[i].str();
    }
    out += ";\n";
  }
  for (const auto& [name, body] : env.definitions()) {
    out += "agent " + name + " = " + print_term(body) + ";\n";
  }
  return out;
}

}  // namespace ccs

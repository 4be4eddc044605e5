#include "syzcx/parser.hpp"

#include <cctype>
#include <optional>
#include <set>

#include "syzcx/error.hpp"

namespace syzcx {

namespace {

struct Token {
  enum class Kind { ident, symbol, end };
  Kind kind;
  std::string text;
  int column;
};

[[noreturn]] void fail(const std::string& code, int line, int column, const std::string& message) {
  std::string where = "line " + std::to_string(line);
  if (column > 0) where += ", column " + std::to_string(column);
  throw Error(ErrorKind::parse, code, where + ": " + message);
}

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> tokenize(std::string_view line, int lineno) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    int col = static_cast<int>(i) + 1;
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (ident_char(c)) {
      std::size_t j = i;
      while (j < line.size() && ident_char(line[j])) ++j;
      out.push_back({Token::Kind::ident, std::string(line.substr(i, j - i)), col});
      i = j;
      continue;
    }
    if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
      out.push_back({Token::Kind::symbol, "->", col});
      i += 2;
      continue;
    }
    if (std::string_view(":.=+*()").find(c) != std::string_view::npos) {
      out.push_back({Token::Kind::symbol, std::string(1, c), col});
      ++i;
      continue;
    }
    fail("syntax_error", lineno, col, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Token::Kind::end, "", static_cast<int>(line.size()) + 1});
  return out;
}

class Cursor {
 public:
  Cursor(std::vector<Token> toks, int line) : toks_(std::move(toks)), line_(line) {}

  const Token& peek() const { return toks_[pos_]; }
  bool at_symbol(const char* s) const { return peek().kind == Token::Kind::symbol && peek().text == s; }

  std::string ident(const char* what) {
    const Token& t = peek();
    if (t.kind != Token::Kind::ident) fail("syntax_error", line_, t.column, std::string("expected ") + what);
    ++pos_;
    return t.text;
  }
  void symbol(const char* s) {
    if (!at_symbol(s)) fail("syntax_error", line_, peek().column, std::string("expected '") + s + "'");
    ++pos_;
  }
  void finish() {
    if (peek().kind != Token::Kind::end) fail("syntax_error", line_, peek().column, "unexpected trailing input");
  }
  int column() const { return peek().column; }
  /// id(.id)*
  std::vector<std::pair<std::string, int>> dotted(const char* what) {
    std::vector<std::pair<std::string, int>> parts;
    int col = column();
    parts.emplace_back(ident(what), col);
    while (at_symbol(".")) {
      ++pos_;
      col = column();
      parts.emplace_back(ident(what), col);
    }
    return parts;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int line_;
};

struct RawArrow {
  std::string id, src, tgt;
  int line, col_src, col_tgt;
};
struct RawPath {
  std::vector<std::pair<std::string, int>> parts;
  int line;
};
struct RawTerm {
  ModuleTerm::Kind kind;
  long mult;
  std::string vertex;
  int vertex_col;
  RawPath path;
};
struct RawModule {
  std::string name;
  std::vector<RawTerm> terms;
  int line;
};

Path resolve_path(const Quiver& q, const RawPath& raw) {
  std::vector<int> arrows;
  for (const auto& [id, col] : raw.parts) {
    auto a = q.find_arrow(id);
    if (!a) fail("unknown_reference", raw.line, col, "unknown arrow '" + id + "'");
    arrows.push_back(*a);
  }
  auto p = make_path(q, arrows);
  if (!p) fail("non_composable", raw.line, raw.parts.front().second, "arrows do not compose into a path");
  return *p;
}

}  // namespace

const ModuleDef* AlgebraSpec::find_module(const std::string& n) const {
  for (const auto& m : modules)
    if (m.name == n) return &m;
  return nullptr;
}

AlgebraSpec parse_algebra(std::string_view text) {
  AlgebraSpec spec;
  std::vector<std::pair<std::string, int>> vertices;
  std::vector<RawArrow> arrows;
  std::vector<RawPath> relations;
  std::vector<RawModule> modules;
  bool named = false;

  int lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++lineno;
    start = end + 1;

    Cursor cur(tokenize(line, lineno), lineno);
    if (cur.peek().kind == Token::Kind::end) {
      if (end == text.size()) break;
      continue;
    }
    int kw_col = cur.column();
    std::string kw = cur.ident("a keyword");
    if (kw == "algebra") {
      if (named) fail("syntax_error", lineno, kw_col, "algebra name given twice");
      spec.name = cur.ident("an algebra name");
      named = true;
    } else if (kw == "vertex") {
      int col = cur.column();
      vertices.emplace_back(cur.ident("a vertex identifier"), lineno);
      (void)col;
    } else if (kw == "arrow") {
      RawArrow a;
      a.line = lineno;
      a.id = cur.ident("an arrow identifier");
      cur.symbol(":");
      a.col_src = cur.column();
      a.src = cur.ident("a source vertex");
      cur.symbol("->");
      a.col_tgt = cur.column();
      a.tgt = cur.ident("a target vertex");
      arrows.push_back(a);
    } else if (kw == "relation") {
      relations.push_back({cur.dotted("an arrow identifier"), lineno});
    } else if (kw == "module") {
      RawModule m;
      m.line = lineno;
      m.name = cur.ident("a module name");
      cur.symbol("=");
      for (;;) {
        RawTerm t{ModuleTerm::Kind::simple, 1, "", 0, {{}, lineno}};
        int col = cur.column();
        std::string head = cur.ident("a module term");
        if (cur.at_symbol("*")) {
          bool digits = !head.empty();
          for (char ch : head) digits = digits && std::isdigit(static_cast<unsigned char>(ch));
          if (!digits || head.size() > 9) fail("syntax_error", lineno, col, "multiplicity must be a positive integer");
          t.mult = std::stol(head);
          if (t.mult < 1) fail("syntax_error", lineno, col, "multiplicity must be a positive integer");
          cur.symbol("*");
          col = cur.column();
          head = cur.ident("a module term");
        }
        cur.symbol("(");
        if (head == "S" || head == "P") {
          t.kind = head == "S" ? ModuleTerm::Kind::simple : ModuleTerm::Kind::projective;
          t.vertex_col = cur.column();
          t.vertex = cur.ident("a vertex identifier");
        } else if (head == "M") {
          t.kind = ModuleTerm::Kind::path;
          t.path.parts = cur.dotted("an arrow identifier");
        } else {
          fail("syntax_error", lineno, col, "module terms are S(v), P(v) or M(path)");
        }
        cur.symbol(")");
        m.terms.push_back(std::move(t));
        if (!cur.at_symbol("+")) break;
        cur.symbol("+");
      }
      modules.push_back(std::move(m));
    } else {
      fail("syntax_error", lineno, kw_col, "unknown keyword '" + kw + "'");
    }
    cur.finish();
    if (end == text.size()) break;
  }

  spec.quiver = Quiver();
  for (const auto& [id, line] : vertices) {
    if (spec.quiver.find_vertex(id)) fail("duplicate_identifier", line, 0, "vertex '" + id + "' declared twice");
    spec.quiver.add_vertex(id);
  }
  for (const auto& a : arrows) {
    if (spec.quiver.find_arrow(a.id)) fail("duplicate_identifier", a.line, 0, "arrow '" + a.id + "' declared twice");
    auto s = spec.quiver.find_vertex(a.src);
    if (!s) fail("unknown_reference", a.line, a.col_src, "unknown vertex '" + a.src + "'");
    auto t = spec.quiver.find_vertex(a.tgt);
    if (!t) fail("unknown_reference", a.line, a.col_tgt, "unknown vertex '" + a.tgt + "'");
    spec.quiver.add_arrow(a.id, *s, *t);
  }
  for (const auto& r : relations) {
    spec.relations.push_back(resolve_path(spec.quiver, r));
    spec.relation_lines.push_back(r.line);
  }
  std::set<std::string> module_names;
  for (const auto& m : modules) {
    if (!module_names.insert(m.name).second)
      fail("duplicate_identifier", m.line, 0, "module '" + m.name + "' defined twice");
    ModuleDef def{m.name, {}, m.line};
    for (const auto& t : m.terms) {
      ModuleTerm term;
      term.kind = t.kind;
      term.multiplicity = t.mult;
      term.line = m.line;
      if (t.kind == ModuleTerm::Kind::path) {
        term.path = resolve_path(spec.quiver, t.path);
      } else {
        auto v = spec.quiver.find_vertex(t.vertex);
        if (!v) fail("unknown_reference", m.line, t.vertex_col, "unknown vertex '" + t.vertex + "'");
        term.vertex = *v;
      }
      def.terms.push_back(std::move(term));
    }
    spec.modules.push_back(std::move(def));
  }
  return spec;
}

MonomialAlgebra validate_admissible(const AlgebraSpec& spec) {
  return MonomialAlgebra(spec.quiver, spec.relations);
}

Path parse_path_literal(const Quiver& q, const std::string& literal) {
  Cursor cur(tokenize(literal, 1), 1);
  if (cur.peek().kind == Token::Kind::ident && cur.peek().text.size() > 1 && cur.peek().text[0] == 'e') {
    // a trivial path "e<vertex>" when no arrow of that name exists
    std::string id = cur.peek().text;
    if (!q.find_arrow(id)) {
      auto v = q.find_vertex(id.substr(1));
      if (v) {
        cur.ident("a path");
        cur.finish();
        return Path::trivial(*v);
      }
    }
  }
  RawPath raw{cur.dotted("an arrow identifier"), 1};
  cur.finish();
  return resolve_path(q, raw);
}

}  // namespace syzcx

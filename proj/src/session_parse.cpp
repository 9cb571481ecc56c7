#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "llab/error.hpp"
#include "llab/session.hpp"

namespace llab::session {

namespace {

enum class Tok { Ident, Int, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  Pos pos;
  std::size_t begin = 0;  // byte offsets, for adjacency of hyphenated words
  std::size_t end = 0;
};

[[noreturn]] void fail(ErrorCode code, const Pos& p, const std::string& msg) {
  throw Error(code, "line " + std::to_string(p.line) + ", column " + std::to_string(p.col) + ": " + msg);
}

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t nbytes) {
    for (std::size_t k = 0; k < nbytes; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else if ((static_cast<unsigned char>(s[i]) & 0xC0) != 0x80) {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    Pos here{line, col};
    if (std::isspace(c)) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < s.size() && s[i] != '\n') advance(1);
      continue;
    }
    Token t;
    t.pos = here;
    t.begin = i;
    if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      t.kind = Tok::Ident;
      t.text = std::string(s.substr(i, j - i));
      advance(j - i);
    } else if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      t.kind = Tok::Int;
      t.text = std::string(s.substr(i, j - i));
      advance(j - i);
    } else if (s.substr(i, 3) == "\xE2\x88\x92") {  // U+2212 minus sign
      t.kind = Tok::Punct;
      t.text = "-";
      advance(3);
    } else if (std::string_view(";=[](),+-*^/").find(static_cast<char>(c)) != std::string_view::npos) {
      t.kind = Tok::Punct;
      t.text = std::string(1, static_cast<char>(c));
      advance(1);
    } else {
      fail(ErrorCode::SyntaxError, here, "unexpected character");
    }
    t.end = i;
    out.push_back(std::move(t));
  }
  Token end;
  end.pos = Pos{line, col};
  end.begin = end.end = s.size();
  out.push_back(end);
  return out;
}

enum class Kind { Ideal, Sequence, Matrix };

struct Arity {
  std::vector<std::string> roles;
  std::set<std::string> bare;     // value-less flags
  std::set<std::string> valued;  // flags followed by one token
};

const std::map<std::string, Arity>& verbs() {
  static const std::map<std::string, Arity> table = {
      {"gb", {{"A"}, {}, {}}},
      {"colon", {{"A", "B"}, {}, {}}},
      {"link", {{"J", "p"}, {"cm"}, {}}},
      {"reduction-number", {{"J", "I"}, {}, {"rmax"}}},
      {"northcott", {{"u", "phi"}, {}, {}}},
      {"verify-p1c1", {{"J", "I"}, {"gorenstein", "cm"}, {}}},
      {"verify-type", {{"J", "I"}, {}, {"s"}}},
      {"verify-thm21", {{"p", "z"}, {"prime", "cm", "gorenstein"}, {"case"}}},
      {"verify-cm3", {{"p", "z"}, {"prime", "cm", "gorenstein"}, {"case"}}},
      {"profile", {{"I"}, {}, {}}},
      {"rees", {{"I"}, {}, {}}},
  };
  return table;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : t_(std::move(toks)) {}

  SessionAST run() {
    SessionAST ast;
    while (peek().kind != Tok::End) ast.statements.push_back(statement());
    return ast;
  }

 private:
  const Token& peek(std::size_t k = 0) const { return t_[std::min(i_ + k, t_.size() - 1)]; }
  Token next() { return t_[std::min(i_++, t_.size() - 1)]; }

  bool is(const char* punct, std::size_t k = 0) const {
    return peek(k).kind == Tok::Punct && peek(k).text == punct;
  }
  bool is_word(const char* w) const { return peek().kind == Tok::Ident && peek().text == w; }

  void expect(const char* punct) {
    if (!is(punct)) fail(ErrorCode::SyntaxError, peek().pos, std::string("expected '") + punct + "'" + found());
    next();
  }
  std::string found() const {
    if (peek().kind == Tok::End) return ", found end of input";
    return ", found '" + peek().text + "'";
  }
  std::string ident(const char* what) {
    if (peek().kind != Tok::Ident) fail(ErrorCode::SyntaxError, peek().pos, std::string("expected ") + what + found());
    return next().text;
  }
  unsigned long integer(const char* what, unsigned long max) {
    if (peek().kind != Tok::Int) fail(ErrorCode::SyntaxError, peek().pos, std::string("expected ") + what + found());
    Token tk = next();
    if (tk.text.size() > 12 || std::stoul(tk.text) > max)
      fail(ErrorCode::SyntaxError, tk.pos, std::string(what) + " too large");
    return std::stoul(tk.text);
  }

  // Joins `a-b` written without spaces into one word.
  std::string word() {
    std::string w = ident("a statement");
    while (is("-") && peek().begin == t_[i_ - 1].end && peek(1).kind == Tok::Ident && peek(1).begin == peek().end) {
      next();
      w += "-" + next().text;
    }
    return w;
  }

  Statement statement() {
    Statement st;
    st.pos = peek().pos;
    const std::string w = word();
    if (w == "ring") {
      RingDecl d = ring_decl();
      st.ring = d.name;
      st.node = std::move(d);
    } else if (w == "use") {
      Pos p = peek().pos;
      UseDecl u{ident("a ring name")};
      if (!rings_.count(u.name)) fail(ErrorCode::UndeclaredName, p, "no ring named '" + u.name + "'");
      current_ = u.name;
      st.ring = u.name;
      st.node = u;
    } else if (w == "ideal" || w == "sequence" || w == "matrix") {
      st.ring = need_ring(st.pos);
      Pos p = peek().pos;
      std::string name = ident("a name");
      declare(name, p, w == "ideal" ? Kind::Ideal : w == "sequence" ? Kind::Sequence : Kind::Matrix);
      expect("=");
      if (w == "ideal") {
        st.node = IdealDecl{name, poly_list()};
      } else if (w == "sequence") {
        SeqDecl s{name, poly_list(), false};
        if (is_word("regular")) {
          next();
          s.regular = true;
        }
        st.node = std::move(s);
      } else {
        st.node = MatDecl{name, matrix()};
      }
    } else {
      st.ring = need_ring(st.pos);
      st.node = command(w, st.pos);
    }
    expect(";");
    return st;
  }

  std::string need_ring(const Pos& p) {
    if (current_.empty()) fail(ErrorCode::UndeclaredName, p, "no ring in scope");
    return current_;
  }

  void declare(const std::string& name, const Pos& p, Kind k) {
    auto& scope = names_[current_];
    if (scope.count(name)) fail(ErrorCode::DuplicateName, p, "'" + name + "' is already declared in ring " + current_);
    scope[name] = k;
  }

  RingDecl ring_decl() {
    RingDecl d;
    Pos np = peek().pos;
    d.name = ident("a ring name");
    if (rings_.count(d.name)) fail(ErrorCode::DuplicateName, np, "ring '" + d.name + "' is already declared");
    expect("=");
    Pos fp = peek().pos;
    const std::string field = ident("QQ or GF(p)");
    if (field == "GF") {
      expect("(");
      d.characteristic = integer("a prime", 2147483647ul);
      expect(")");
    } else if (field != "QQ") {
      fail(ErrorCode::SyntaxError, fp, "unknown field '" + field + "'");
    }
    expect("[");
    std::set<std::string> seen;
    do {
      Pos vp = peek().pos;
      std::string v = ident("a variable name");
      if (!seen.insert(v).second) fail(ErrorCode::DuplicateName, vp, "variable '" + v + "' repeated");
      d.vars.push_back(v);
    } while (is(",") && (next(), true));
    expect("]");
    while (peek().kind == Tok::Ident) {
      Pos op = peek().pos;
      std::string o = next().text;
      if (o == "degrevlex" || o == "lex" || o == "block") {
        if (d.order) fail(ErrorCode::SyntaxError, op, "monomial order given twice");
        d.order = o;
        if (o == "block") {
          expect("(");
          do {
            Pos vp = peek().pos;
            std::string v = ident("a variable name");
            if (!seen.count(v)) fail(ErrorCode::UndeclaredName, vp, "'" + v + "' is not a variable of " + d.name);
            d.block_vars.push_back(v);
          } while (is(",") && (next(), true));
          expect(")");
        }
      } else if (o == "weights") {
        if (d.weights) fail(ErrorCode::SyntaxError, op, "weights given twice");
        expect("(");
        std::vector<long> w;
        do {
          Pos wp = peek().pos;
          long x = static_cast<long>(integer("a weight", 1000000));
          if (x <= 0) fail(ErrorCode::SyntaxError, wp, "weights must be positive");
          w.push_back(x);
        } while (is(",") && (next(), true));
        expect(")");
        if (w.size() != d.vars.size())
          fail(ErrorCode::SyntaxError, op,
               std::to_string(w.size()) + " weights for " + std::to_string(d.vars.size()) + " variables");
        d.weights = std::move(w);
      } else {
        fail(ErrorCode::SyntaxError, op, "unexpected '" + o + "' in ring declaration");
      }
    }
    rings_[d.name] = d.vars;
    current_ = d.name;
    if (is("/")) {
      next();
      d.relations = poly_list();
    }
    return d;
  }

  Command command(const std::string& w, const Pos& p) {
    Command c;
    c.verb = w;
    if (w == "verify") c.verb = "verify-" + ident("what to verify (p1c1, type, thm21, cm3)");
    auto it = verbs().find(c.verb);
    if (it == verbs().end()) fail(ErrorCode::SyntaxError, p, "unknown command '" + c.verb + "'");
    const Arity& a = it->second;
    for (std::size_t k = 0; k < a.roles.size(); ++k) c.args.push_back(argument(a.roles[k]));
    while (peek().kind == Tok::Ident) {
      Pos fp = peek().pos;
      std::string f = next().text;
      if (a.bare.count(f)) {
        c.flags.emplace_back(f, "");
      } else if (a.valued.count(f)) {
        if (peek().kind != Tok::Int && peek().kind != Tok::Ident)
          fail(ErrorCode::SyntaxError, peek().pos, "expected a value for '" + f + "'" + found());
        Pos vp = peek().pos;
        std::string v = next().text;
        if (f == "case" && v != "auto" && v != "a" && v != "b")
          fail(ErrorCode::SyntaxError, vp, "case must be auto, a or b");
        if (f != "case" && (v.empty() || !std::isdigit(static_cast<unsigned char>(v[0]))))
          fail(ErrorCode::SyntaxError, vp, "'" + f + "' takes an integer");
        if (f != "case" && (v.size() > 9))
          fail(ErrorCode::SyntaxError, vp, "'" + f + "' value too large");
        c.flags.emplace_back(f, v);
      } else {
        fail(ErrorCode::SyntaxError, fp, "unknown option '" + f + "' for " + c.verb);
      }
    }
    return c;
  }

  Arg argument(const std::string& role) {
    Arg a;
    if (is("(")) {
      a.kind = Arg::Kind::List;
      a.list = poly_list();
    } else if (is("[")) {
      a.kind = Arg::Kind::Matrix;
      a.rows = matrix();
    } else if (peek().kind == Tok::Ident) {
      Pos p = peek().pos;
      a.name = next().text;
      if (!names_[current_].count(a.name))
        fail(ErrorCode::UndeclaredName, p, "'" + a.name + "' is not declared in ring " + current_);
    } else {
      fail(ErrorCode::SyntaxError, peek().pos, "expected argument " + role + found());
    }
    return a;
  }

  ExprList poly_list() {
    expect("(");
    ExprList out;
    if (is(")")) {
      next();
      return out;
    }
    out.push_back(expr());
    while (is(",")) {
      next();
      out.push_back(expr());
    }
    expect(")");
    return out;
  }

  std::vector<ExprList> matrix() {
    expect("[");
    std::vector<ExprList> rows;
    do {
      Pos rp = peek().pos;
      expect("[");
      ExprList row;
      row.push_back(expr());
      while (is(",")) {
        next();
        row.push_back(expr());
      }
      expect("]");
      if (!rows.empty() && rows.front().size() != row.size()) fail(ErrorCode::SyntaxError, rp, "ragged matrix");
      rows.push_back(std::move(row));
    } while (is(",") && (next(), true));
    expect("]");
    return rows;
  }

  Expr expr() {
    Expr e = term();
    while (is("+") || is("-")) {
      Pos p = peek().pos;
      Expr::Kind k = next().text == "+" ? Expr::Kind::Add : Expr::Kind::Sub;
      Expr rhs = term();
      e = Expr{k, {}, {}, 0, {std::move(e), std::move(rhs)}, p};
    }
    return e;
  }

  bool starts_factor() const {
    return peek().kind == Tok::Int || peek().kind == Tok::Ident || is("(");
  }

  Expr term() {
    Expr e = unary();
    for (;;) {
      Pos p = peek().pos;
      if (is("*")) {
        next();
      } else if (!starts_factor()) {
        break;
      }
      Expr rhs = unary();
      e = Expr{Expr::Kind::Mul, {}, {}, 0, {std::move(e), std::move(rhs)}, p};
    }
    return e;
  }

  Expr unary() {
    if (is("-")) {
      Pos p = next().pos;
      Expr inner = unary();
      return Expr{Expr::Kind::Neg, {}, {}, 0, {std::move(inner)}, p};
    }
    return power();
  }

  Expr power() {
    Expr base = atom();
    if (!is("^")) return base;
    Pos p = next().pos;
    unsigned k = static_cast<unsigned>(integer("an exponent", 100000));
    return Expr{Expr::Kind::Pow, {}, {}, k, {std::move(base)}, p};
  }

  Expr atom() {
    const Token& tk = peek();
    if (tk.kind == Tok::Int) {
      Token n = next();
      if (is("/")) {
        next();
        if (peek().kind != Tok::Int) fail(ErrorCode::SyntaxError, peek().pos, "expected a denominator" + found());
        Token d = next();
        if (d.text.find_first_not_of('0') == std::string::npos) fail(ErrorCode::SyntaxError, d.pos, "zero denominator");
        return Expr{Expr::Kind::Rational, n.text, d.text, 0, {}, n.pos};
      }
      return Expr{Expr::Kind::Int, n.text, {}, 0, {}, n.pos};
    }
    if (tk.kind == Tok::Ident) {
      Token v = next();
      const auto& vars = rings_[current_];
      if (std::find(vars.begin(), vars.end(), v.text) == vars.end())
        fail(ErrorCode::UndeclaredName, v.pos, "'" + v.text + "' is not a variable of ring " + current_);
      return Expr{Expr::Kind::Var, v.text, {}, 0, {}, v.pos};
    }
    if (is("(")) {
      next();
      Expr e = expr();
      expect(")");
      return e;
    }
    fail(ErrorCode::SyntaxError, tk.pos, "expected a polynomial" + found());
  }

  std::vector<Token> t_;
  std::size_t i_ = 0;
  std::string current_;
  std::map<std::string, std::vector<std::string>> rings_;
  std::map<std::string, std::map<std::string, Kind>> names_;
};

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Mul: return 2;
    case Expr::Kind::Neg: return 3;
    case Expr::Kind::Pow:
    case Expr::Kind::Rational: return 4;
    default: return 5;
  }
}

std::string wrap(const Expr& e, bool parens) { return parens ? "(" + render_expr(e) + ")" : render_expr(e); }

std::string render_list(const ExprList& l) {
  std::string s = "(";
  for (std::size_t i = 0; i < l.size(); ++i) s += (i ? ", " : "") + render_expr(l[i]);
  return s + ")";
}

std::string render_rows(const std::vector<ExprList>& rows) {
  std::string s = "[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < rows[i].size(); ++j) s += (j ? ", " : "") + render_expr(rows[i][j]);
    s += "]";
  }
  return s + "]";
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
  return s;
}

}  // namespace

SessionAST parse_session(std::string_view text) { return Parser(lex(text)).run(); }

std::string render_expr(const Expr& e) {
  const int p = precedence(e);
  switch (e.kind) {
    case Expr::Kind::Int: return e.text;
    case Expr::Kind::Rational: return e.text + "/" + e.den;
    case Expr::Kind::Var: return e.text;
    case Expr::Kind::Neg: return "-" + wrap(e.args[0], precedence(e.args[0]) < p);
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
    case Expr::Kind::Mul: {
      const char* op = e.kind == Expr::Kind::Add ? " + " : e.kind == Expr::Kind::Sub ? " - " : "*";
      return wrap(e.args[0], precedence(e.args[0]) < p) + op + wrap(e.args[1], precedence(e.args[1]) <= p);
    }
    case Expr::Kind::Pow: return wrap(e.args[0], precedence(e.args[0]) <= p) + "^" + std::to_string(e.exponent);
  }
  return {};
}

std::string render_statement(const Statement& st) {
  return std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, RingDecl>) {
          std::string s = "ring " + n.name + " = ";
          s += n.characteristic ? "GF(" + std::to_string(n.characteristic) + ")" : "QQ";
          s += "[" + join(n.vars) + "]";
          if (n.order) s += " " + *n.order + (*n.order == "block" ? "(" + join(n.block_vars) + ")" : "");
          if (n.weights) {
            std::vector<std::string> w;
            for (long x : *n.weights) w.push_back(std::to_string(x));
            s += " weights(" + join(w) + ")";
          }
          if (n.relations) s += " / " + render_list(*n.relations);
          return s + ";";
        } else if constexpr (std::is_same_v<T, IdealDecl>) {
          return "ideal " + n.name + " = " + render_list(n.gens) + ";";
        } else if constexpr (std::is_same_v<T, SeqDecl>) {
          return "sequence " + n.name + " = " + render_list(n.elems) + (n.regular ? " regular;" : ";");
        } else if constexpr (std::is_same_v<T, MatDecl>) {
          return "matrix " + n.name + " = " + render_rows(n.rows) + ";";
        } else if constexpr (std::is_same_v<T, UseDecl>) {
          return "use " + n.name + ";";
        } else {
          std::string s = n.verb.rfind("verify-", 0) == 0 ? "verify " + n.verb.substr(7) : n.verb;
          for (const auto& a : n.args) {
            if (a.kind == Arg::Kind::Name)
              s += " " + a.name;
            else if (a.kind == Arg::Kind::List)
              s += " " + render_list(a.list);
            else
              s += " " + render_rows(a.rows);
          }
          for (const auto& [f, v] : n.flags) s += " " + f + (v.empty() ? "" : " " + v);
          return s + ";";
        }
      },
      st.node);
}

std::string render_session(const SessionAST& ast) {
  std::string out;
  for (const auto& st : ast.statements) out += render_statement(st) + "\n";
  return out;
}

}  // namespace llab::session

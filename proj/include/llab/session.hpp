#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "llab/linkage.hpp"
#include "llab/settings.hpp"

namespace llab::session {

inline constexpr const char* kVersion = "1.0.0";

// Source position. Compares equal to every other position so that ASTs
// parsed from different texts compare structurally.
struct Pos {
  int line = 0;
  int col = 0;
  bool operator==(const Pos&) const { return true; }
};

struct Expr {
  enum class Kind { Int, Rational, Var, Neg, Add, Sub, Mul, Pow };
  Kind kind = Kind::Int;
  std::string text;        // digits for Int, numerator for Rational, name for Var
  std::string den;         // Rational only
  unsigned exponent = 0;   // Pow only
  std::vector<Expr> args;  // operands
  Pos pos;

  bool operator==(const Expr&) const = default;
};

using ExprList = std::vector<Expr>;

struct RingDecl {
  std::string name;
  unsigned long characteristic = 0;  // 0 for QQ
  std::vector<std::string> vars;
  std::optional<std::string> order;       // degrevlex | lex | block
  std::vector<std::string> block_vars;    // block only
  std::optional<std::vector<long>> weights;
  std::optional<ExprList> relations;
  bool operator==(const RingDecl&) const = default;
};

struct IdealDecl {
  std::string name;
  ExprList gens;
  bool operator==(const IdealDecl&) const = default;
};

struct SeqDecl {
  std::string name;
  ExprList elems;
  bool regular = false;
  bool operator==(const SeqDecl&) const = default;
};

struct MatDecl {
  std::string name;
  std::vector<ExprList> rows;
  bool operator==(const MatDecl&) const = default;
};

struct UseDecl {
  std::string name;
  bool operator==(const UseDecl&) const = default;
};

// A command argument: a declared name, an inline polynomial list, or an
// inline matrix.
struct Arg {
  enum class Kind { Name, List, Matrix };
  Kind kind = Kind::Name;
  std::string name;
  ExprList list;
  std::vector<ExprList> rows;
  bool operator==(const Arg&) const = default;
};

struct Command {
  std::string verb;  // gb, colon, link, reduction-number, northcott, verify-*, profile, rees
  std::vector<Arg> args;
  std::vector<std::pair<std::string, std::string>> flags;  // value empty for bare words
  bool operator==(const Command&) const = default;
};

struct Statement {
  std::variant<RingDecl, IdealDecl, SeqDecl, MatDecl, UseDecl, Command> node;
  std::string ring;  // ring in scope
  Pos pos;
  bool operator==(const Statement&) const = default;
};

struct SessionAST {
  std::vector<Statement> statements;
  bool operator==(const SessionAST&) const = default;
};

SessionAST parse_session(std::string_view text);
std::string render_session(const SessionAST& ast);
std::string render_statement(const Statement& st);
std::string render_expr(const Expr& e);

struct RunOptions {
  Limits limits;
  bool parallel = false;
  bool timing = false;
};

struct Report {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  std::map<std::string, bool> declarations;
  nlohmann::json result = nlohmann::json::object();
  std::optional<VerificationReport> verification;
  std::optional<LengthReport> lengths;
  std::vector<std::string> notes;
  std::string status = "ok";  // ok | error | VerificationReport statuses
  std::optional<std::pair<std::string, std::string>> error;  // kind, detail
  std::optional<double> ms;
};

std::vector<Report> run_session(const SessionAST& ast, const RunOptions& opts);
bool all_ok(const std::vector<Report>& reports);

enum class Format { Text, Json };
std::string emit_report(const std::vector<Report>& reports, Format format);
nlohmann::json to_json(const std::vector<Report>& reports);

}  // namespace llab::session

#include <chrono>
#include <future>
#include <map>

#include "llab/error.hpp"
#include "llab/koszul.hpp"
#include "llab/rees.hpp"
#include "llab/resolution.hpp"
#include "llab/session.hpp"

namespace llab::session {

namespace {

using nlohmann::json;
using Value = std::variant<Ideal, PolySequence, PolyMatrix>;

struct Env {
  std::map<std::string, RingPtr> rings;
  std::map<std::string, std::map<std::string, Value>> values;  // per ring
  std::map<std::string, std::map<std::string, std::string>> failed;
};

Polynomial eval(const Expr& e, const RingPtr& r) {
  switch (e.kind) {
    case Expr::Kind::Int: return r->constant(r->field().from_rational(mpq_class(e.text)));
    case Expr::Kind::Rational: {
      mpq_class q(e.text + "/" + e.den);
      q.canonicalize();
      return r->constant(r->field().from_rational(q));
    }
    case Expr::Kind::Var: return r->variable(*r->index_of(e.text));
    case Expr::Kind::Neg: return -eval(e.args[0], r);
    case Expr::Kind::Add: return eval(e.args[0], r) + eval(e.args[1], r);
    case Expr::Kind::Sub: return eval(e.args[0], r) - eval(e.args[1], r);
    case Expr::Kind::Mul: return eval(e.args[0], r) * eval(e.args[1], r);
    case Expr::Kind::Pow: return eval(e.args[0], r).pow(e.exponent);
  }
  return r->zero();
}

std::vector<Polynomial> eval_list(const ExprList& l, const RingPtr& r) {
  std::vector<Polynomial> out;
  for (const auto& e : l) out.push_back(eval(e, r));
  return out;
}

PolyMatrix eval_rows(const std::vector<ExprList>& rows, const RingPtr& r) {
  std::vector<std::vector<Polynomial>> m;
  for (const auto& row : rows) m.push_back(eval_list(row, r));
  return PolyMatrix(r, std::move(m));
}

RingPtr build_ring(const RingDecl& d) {
  Field f = d.characteristic ? Field::prime(static_cast<std::uint32_t>(d.characteristic)) : Field::rationals();
  std::vector<std::int64_t> w;
  if (d.weights) w.assign(d.weights->begin(), d.weights->end());
  MonomialOrder order = MonomialOrder::degrevlex();
  if (d.order == "lex") {
    order = MonomialOrder::lex();
  } else if (d.order == "block") {
    std::vector<bool> mask(d.vars.size(), false);
    for (const auto& v : d.block_vars)
      mask[static_cast<std::size_t>(std::find(d.vars.begin(), d.vars.end(), v) - d.vars.begin())] = true;
    order = MonomialOrder::block(std::move(mask));
  }
  RingPtr r = Ring::create(f, d.vars, std::move(w), std::move(order));
  if (d.relations) r = r->with_relations(eval_list(*d.relations, r));
  return r;
}

json strings(const std::vector<Polynomial>& v) {
  json a = json::array();
  for (const auto& p : v) a.push_back(p.str());
  return a;
}

json ideal_json(const Ideal& i) {
  return json{{"generators", strings(i.tidy_generators())}, {"gb", strings(i.gb().elements())}};
}

json check_json(const Check& c) {
  json j{{"desc", c.desc}, {"mode", to_string(c.mode)}, {"detail", c.detail}};
  j["pass"] = c.pass ? json(*c.pass) : json(nullptr);
  return j;
}

json profile_json(const ResolutionData& rd) {
  json shifts = json::array();
  for (const auto& s : rd.shifts) shifts.push_back(s);
  return json{{"betti", rd.betti}, {"shifts", shifts}, {"pd", rd.pd},
              {"depth", rd.depth}, {"dim", rd.dim},   {"cohen_macaulay", rd.is_cm},
              {"type", rd.is_cm ? json(rd.cm_type) : json(nullptr)}, {"ambient_vars", rd.ambient_vars}};
}

// Resolved command argument plus its rendering for the report.
class Args {
 public:
  Args(const Env& env, const Statement& st, const Command& c, Report& rep)
      : env_(env), c_(c), rep_(rep), name_(st.ring) {
    auto it = env.rings.find(st.ring);
    if (it == env.rings.end()) throw Error(ErrorCode::UndeclaredName, "ring " + st.ring + " is unavailable");
    ring_ = it->second;
    rep.inputs["ring"] = ring_->str();
  }

  const RingPtr& ring() const { return ring_; }

  Value value(std::size_t k, const std::string& role) {
    const Arg& a = c_.args.at(k);
    Value v;
    if (a.kind == Arg::Kind::Name) {
      auto scope = env_.values.find(name_);
      if (scope == env_.values.end() || !scope->second.count(a.name)) {
        auto f = env_.failed.find(name_);
        std::string why = f != env_.failed.end() && f->second.count(a.name) ? f->second.at(a.name) : "not declared";
        throw Error(ErrorCode::UndeclaredName, "'" + a.name + "' is unavailable: " + why);
      }
      v = scope->second.at(a.name);
    } else if (a.kind == Arg::Kind::List) {
      v = PolySequence{eval_list(a.list, ring_), std::nullopt};
    } else {
      v = eval_rows(a.rows, ring_);
    }
    record(role, v);
    return v;
  }

  Ideal ideal(std::size_t k, const std::string& role) {
    const Value v = value(k, role);
    if (auto* i = std::get_if<Ideal>(&v)) return *i;
    if (auto* s = std::get_if<PolySequence>(&v)) return Ideal(ring_, s->elements);
    throw Error(ErrorCode::InvalidArgument, role + " must be an ideal, not a matrix");
  }

  PolySequence sequence(std::size_t k, const std::string& role) {
    const Value v = value(k, role);
    if (auto* s = std::get_if<PolySequence>(&v)) return *s;
    if (auto* i = std::get_if<Ideal>(&v)) return PolySequence{i->generators(), std::nullopt};
    throw Error(ErrorCode::InvalidArgument, role + " must be a sequence, not a matrix");
  }

  PolyMatrix matrix(std::size_t k, const std::string& role) {
    const Value v = value(k, role);
    if (auto* m = std::get_if<PolyMatrix>(&v)) return *m;
    throw Error(ErrorCode::InvalidArgument, role + " must be a matrix");
  }

  bool flag(const std::string& f) const {
    for (const auto& [k, v] : c_.flags)
      if (k == f) return true;
    return false;
  }
  std::optional<std::string> option(const std::string& f) const {
    for (const auto& [k, v] : c_.flags)
      if (k == f) return v;
    return std::nullopt;
  }

 private:
  void record(const std::string& role, const Value& v) {
    if (auto* i = std::get_if<Ideal>(&v)) {
      rep_.inputs[role] = strings(i->generators());
    } else if (auto* s = std::get_if<PolySequence>(&v)) {
      rep_.inputs[role] = strings(s->elements);
    } else {
      const auto& m = std::get<PolyMatrix>(v);
      json rows = json::array();
      for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(row);
      }
      rep_.inputs[role] = rows;
    }
  }

  const Env& env_;
  const Command& c_;
  Report& rep_;
  std::string name_;
  RingPtr ring_;
};

void attach(Report& rep, VerificationReport v) {
  rep.declarations = v.declarations;
  rep.status = to_string(v.status);
  if (v.lengths) rep.lengths = v.lengths;
  for (const auto& n : v.notes) rep.notes.push_back(n);
  rep.verification = std::move(v);
}

Declarations declarations(const Args& a) {
  Declarations d;
  d.prime = a.flag("prime");
  d.ambient_cm = a.flag("cm");
  d.localization_gorenstein = a.flag("gorenstein");
  if (auto c = a.option("case"); c && *c != "auto") d.case_override = (*c)[0];
  return d;
}

void execute(const Env& env, const Statement& st, const Command& c, Report& rep) {
  Args a(env, st, c, rep);
  const std::string& v = c.verb;
  if (v == "gb") {
    Ideal i = a.ideal(0, "A");
    rep.result["gb"] = strings(i.gb().elements());
  } else if (v == "colon") {
    Ideal x = a.ideal(0, "A");
    Ideal y = a.ideal(1, "B");
    rep.result["ideal"] = ideal_json(colon(x, y));
  } else if (v == "link") {
    Ideal j = a.ideal(0, "J");
    Ideal p = a.ideal(1, "p");
    rep.declarations = {{"ambient_cm", a.flag("cm")}};
    Ideal i = link(j, p, a.flag("cm"));
    rep.result["ideal"] = ideal_json(i);
    rep.result["generators"] = strings(i.generators());
  } else if (v == "reduction-number") {
    Ideal j = a.ideal(0, "J");
    Ideal i = a.ideal(1, "I");
    long rmax = limits().r_max;
    if (auto o = a.option("rmax")) rmax = std::stol(*o);
    std::optional<long> r = reduction_number(j, i, rmax);
    rep.result["r_max"] = rmax;
    rep.result["reduction_number"] = r ? json(*r) : json(nullptr);
    if (!r) rep.notes.push_back("no reduction number up to r_max = " + std::to_string(rmax));
  } else if (v == "northcott") {
    PolySequence u = a.sequence(0, "u");
    PolyMatrix phi = a.matrix(1, "phi");
    NorthcottResult n = northcott(u, phi);
    rep.result["N"] = ideal_json(n.n);
    rep.result["v"] = strings(n.v.elements);
    rep.result["det"] = n.det.str();
    rep.result["whole_ring"] = n.whole_ring;
    attach(rep, std::move(n.checks));
  } else if (v == "verify-p1c1") {
    Ideal j = a.ideal(0, "J");
    Ideal i = a.ideal(1, "I");
    P1C1Result res = verify_p1c1(j, i, a.flag("gorenstein"), a.flag("cm"));
    attach(rep, std::move(res.report));
  } else if (v == "verify-type") {
    Ideal j = a.ideal(0, "J");
    Ideal i = a.ideal(1, "I");
    std::size_t s = 0;
    if (auto o = a.option("s")) {
      s = std::stoul(*o);
    } else if (auto t = ring_type(a.ring())) {
      s = *t;
      rep.notes.push_back("type s = " + std::to_string(s) + " from the resolution of R");
    } else {
      throw Error(ErrorCode::PreconditionViolated, "the type of R is not computable here; pass s N");
    }
    VerificationReport r = verify_type_remark(j, i, s);
    r.declarations["s_given"] = a.option("s").has_value();
    attach(rep, std::move(r));
  } else if (v == "verify-thm21" || v == "verify-cm3") {
    Ideal p = a.ideal(0, "p");
    PolySequence z = a.sequence(1, "z");
    Declarations d = declarations(a);
    attach(rep, v == "verify-thm21" ? verify_theorem_2_1(p, z, d) : verify_cm_section3(p, z, d));
  } else if (v == "profile") {
    rep.result = profile_json(homological_profile(a.ideal(0, "I")));
  } else if (v == "rees") {
    ReesPresentation rp = rees_defining_ideal(a.ideal(0, "I"));
    rep.result["ring"] = rp.ring->str();
    rep.result["generators"] = strings(rp.generators);
    rep.result["L"] = strings(Ideal(rp.ring, rp.rees.tidy_generators()).generators());
    rep.result["gr"] = strings(assoc_graded_presentation(rp).tidy_generators());
    rep.result["specialization"] = specialization_holds(rp);
    for (const auto& n : rp.notes) rep.notes.push_back(n);
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown command " + v);
  }
}

void run_one(const Env& env, const Statement& st, Report& rep, bool timing) {
  const auto start = std::chrono::steady_clock::now();
  try {
    execute(env, st, std::get<Command>(st.node), rep);
  } catch (const Error& e) {
    rep.status = "error";
    rep.error = {std::string(to_string(e.code())), e.detail()};
  } catch (const std::exception& e) {
    rep.status = "error";
    rep.error = {"InternalError", e.what()};
  }
  if (timing)
    rep.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

Report declaration_failure(const Statement& st, const Error& e) {
  Report rep;
  rep.command = render_statement(st);
  rep.status = "error";
  rep.error = {std::string(to_string(e.code())), e.detail()};
  return rep;
}

}  // namespace

std::vector<Report> run_session(const SessionAST& ast, const RunOptions& opts) {
  set_limits(opts.limits);
  Env env;
  std::vector<Report> reports;
  std::vector<std::pair<std::size_t, const Statement*>> jobs;

  for (const auto& st : ast.statements) {
    if (const auto* c = std::get_if<Command>(&st.node)) {
      (void)c;
      Report rep;
      rep.command = render_statement(st);
      jobs.emplace_back(reports.size(), &st);
      reports.push_back(std::move(rep));
      continue;
    }
    std::string name;
    try {
      std::visit(
          [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, RingDecl>) {
              name = n.name;
              env.rings[n.name] = build_ring(n);
            } else if constexpr (std::is_same_v<T, IdealDecl>) {
              name = n.name;
              const RingPtr& r = env.rings.at(st.ring);
              env.values[st.ring][n.name] = Ideal(r, eval_list(n.gens, r));
            } else if constexpr (std::is_same_v<T, SeqDecl>) {
              name = n.name;
              const RingPtr& r = env.rings.at(st.ring);
              PolySequence s{eval_list(n.elems, r), std::nullopt};
              if (n.regular) s.declared_regular = true;
              env.values[st.ring][n.name] = std::move(s);
            } else if constexpr (std::is_same_v<T, MatDecl>) {
              name = n.name;
              env.values[st.ring][n.name] = eval_rows(n.rows, env.rings.at(st.ring));
            }
          },
          st.node);
    } catch (const Error& e) {
      env.failed[st.ring][name] = e.what();
      reports.push_back(declaration_failure(st, e));
    } catch (const std::out_of_range&) {
      // The ring itself failed to build; its failure is already reported.
      env.failed[st.ring][name] = "ring " + st.ring + " is unavailable";
      reports.push_back(declaration_failure(st, Error(ErrorCode::UndeclaredName, "ring " + st.ring + " is unavailable")));
    }
  }

  if (!opts.parallel) {
    for (auto& [k, st] : jobs) run_one(env, *st, reports[k], opts.timing);
    return reports;
  }
  // Each command only reads the environment and writes its own report.
  std::vector<std::future<void>> running;
  for (auto& [k, st] : jobs) {
    Report* slot = &reports[k];
    const Statement* s = st;
    running.push_back(std::async(std::launch::async, [&env, s, slot, &opts] { run_one(env, *s, *slot, opts.timing); }));
  }
  for (auto& f : running) f.get();
  return reports;
}

bool all_ok(const std::vector<Report>& reports) {
  for (const auto& r : reports)
    if (r.status != "ok" && r.status != "verified") return false;
  return true;
}

json to_json(const std::vector<Report>& reports) {
  json out{{"version", kVersion}, {"reports", json::array()}};
  for (const auto& r : reports) {
    json j;
    j["command"] = r.command;
    j["inputs"] = r.inputs;
    j["declarations"] = r.declarations;
    j["hypotheses"] = json::array();
    j["conclusions"] = json::array();
    if (r.verification) {
      for (const auto& c : r.verification->hypotheses) j["hypotheses"].push_back(check_json(c));
      for (const auto& c : r.verification->conclusions) j["conclusions"].push_back(check_json(c));
    }
    if (r.lengths) {
      const LengthReport& l = *r.lengths;
      j["lengths"] = json{{"d", l.d},
                          {"g", l.g},
                          {"r", l.r},
                          {"s", l.s ? json(*l.s) : json(nullptr)},
                          {"lambda_I_over_J", l.lambda_I_over_J},
                          {"lambda_I2_over_JI", l.lambda_I2_over_JI},
                          {"lambda_R_over_I", l.lambda_R_over_I},
                          {"lambda_I_over_I2", l.lambda_I_over_I2},
                          {"lambda_H1", l.lambda_H1},
                          {"lambda_delta", l.lambda_delta},
                          {"eq1_balanced", l.eq1_balanced},
                          {"eq4_balanced", l.eq4_balanced ? json(*l.eq4_balanced) : json(nullptr)},
                          {"sequence_balanced", l.sequence_balanced()},
                          {"delta_nonzero", l.delta_nonzero}};
    } else {
      j["lengths"] = nullptr;
    }
    j["status"] = r.status;
    j["ms"] = r.ms ? json(*r.ms) : json(nullptr);
    j["result"] = r.result;
    j["notes"] = r.notes;
    j["error"] = r.error ? json{{"kind", r.error->first}, {"detail", r.error->second}} : json(nullptr);
    out["reports"].push_back(std::move(j));
  }
  return out;
}

}  // namespace llab::session

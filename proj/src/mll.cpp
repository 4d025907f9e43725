#include "pwfcalc/mll.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <random>
#include <sstream>

namespace pwfcalc {

Formula Formula::one() { return Formula(std::make_shared<const Node>(Node{Kind::one, {}, {}})); }
Formula Formula::var(std::string name) {
  return Formula(std::make_shared<const Node>(Node{Kind::var, std::move(name), {}}));
}
Formula Formula::perp(Formula a) { return Formula(std::make_shared<const Node>(Node{Kind::perp, {}, {std::move(a)}})); }
Formula Formula::tensor(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(Node{Kind::tensor, {}, {std::move(a), std::move(b)}}));
}
Formula Formula::join(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(Node{Kind::join, {}, {std::move(a), std::move(b)}}));
}
Formula Formula::exists(std::string x, Formula body) {
  return Formula(std::make_shared<const Node>(Node{Kind::exists, std::move(x), {std::move(body)}}));
}

namespace {

using Env = std::vector<std::pair<std::string, std::string>>;

long bound_at(const Env& env, const std::string& x, bool second) {
  for (long i = static_cast<long>(env.size()) - 1; i >= 0; --i)
    if ((second ? env[i].second : env[i].first) == x) return i;
  return -1;
}

bool alpha_eq(const Formula& a, const Formula& b, Env& env) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::one: return true;
    case Formula::Kind::var: {
      long i = bound_at(env, a.name(), false), j = bound_at(env, b.name(), true);
      return i == j && (i >= 0 || a.name() == b.name());
    }
    case Formula::Kind::perp: return alpha_eq(a.body(), b.body(), env);
    case Formula::Kind::tensor:
    case Formula::Kind::join: return alpha_eq(a.left(), b.left(), env) && alpha_eq(a.right(), b.right(), env);
    case Formula::Kind::exists: {
      env.push_back({a.name(), b.name()});
      bool r = alpha_eq(a.body(), b.body(), env);
      env.pop_back();
      return r;
    }
  }
  return false;
}

void collect_free(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::one: return;
    case Formula::Kind::var:
      if (!bound.count(f.name())) out.insert(f.name());
      return;
    case Formula::Kind::perp: collect_free(f.body(), bound, out); return;
    case Formula::Kind::tensor:
    case Formula::Kind::join:
      collect_free(f.left(), bound, out);
      collect_free(f.right(), bound, out);
      return;
    case Formula::Kind::exists: {
      bool added = bound.insert(f.name()).second;
      collect_free(f.body(), bound, out);
      if (added) bound.erase(f.name());
      return;
    }
  }
}

}  // namespace

bool operator==(const Formula& a, const Formula& b) {
  Env env;
  return alpha_eq(a, b, env);
}

std::set<std::string> free_vars(const Formula& f) {
  std::set<std::string> bound, out;
  collect_free(f, bound, out);
  return out;
}

Formula substitute(const Formula& a, const std::string& x, const Formula& b) {
  switch (a.kind()) {
    case Formula::Kind::one: return a;
    case Formula::Kind::var: return a.name() == x ? b : a;
    case Formula::Kind::perp: return Formula::perp(substitute(a.body(), x, b));
    case Formula::Kind::tensor: return Formula::tensor(substitute(a.left(), x, b), substitute(a.right(), x, b));
    case Formula::Kind::join: return Formula::join(substitute(a.left(), x, b), substitute(a.right(), x, b));
    case Formula::Kind::exists: {
      if (a.name() == x) return a;
      auto fb = free_vars(b);
      if (!fb.count(a.name())) return Formula::exists(a.name(), substitute(a.body(), x, b));
      auto taken = free_vars(a.body());
      taken.insert(fb.begin(), fb.end());
      taken.insert(x);
      std::string y = a.name();
      while (taken.count(y)) y += "'";
      return Formula::exists(y, substitute(substitute(a.body(), a.name(), Formula::var(y)), x, b));
    }
  }
  return a;
}

namespace {

int level(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::exists: return 0;
    case Formula::Kind::join: return 1;
    case Formula::Kind::tensor: return 2;
    default: return 3;
  }
}

std::string print(const Formula& f, int ctx) {
  std::string s;
  switch (f.kind()) {
    case Formula::Kind::one: s = "1"; break;
    case Formula::Kind::var: s = f.name(); break;
    case Formula::Kind::perp: s = print(f.body(), 3) + "^"; break;
    case Formula::Kind::tensor: s = print(f.left(), 2) + " * " + print(f.right(), 3); break;
    case Formula::Kind::join: s = print(f.left(), 1) + " v " + print(f.right(), 2); break;
    case Formula::Kind::exists: s = "ex " + f.name() + ". " + print(f.body(), 0); break;
  }
  return level(f) < ctx ? "(" + s + ")" : s;
}

bool is_reserved(const std::string& id) { return id == "v" || id == "ex"; }

Formula parse_atom(Cursor& c);

Formula parse_postfix(Cursor& c) {
  Formula f = parse_atom(c);
  while (c.accept("^")) f = Formula::perp(f);
  return f;
}

Formula parse_tensor(Cursor& c) {
  Formula f = parse_postfix(c);
  while (c.accept("*")) f = Formula::tensor(f, parse_postfix(c));
  return f;
}

Formula parse_atom(Cursor& c) {
  if (c.accept("(")) {
    Formula f = parse_formula(c);
    c.expect(")");
    return f;
  }
  if (c.accept_keyword("ex")) {
    std::string x = c.identifier();
    if (is_reserved(x)) c.fail("reserved word used as a variable");
    c.expect(".");
    return Formula::exists(x, parse_formula(c));
  }
  if (c.peek() == '1') {
    c.advance();
    return Formula::one();
  }
  if (!std::isalpha(static_cast<unsigned char>(c.peek()))) c.fail("expected a formula");
  std::size_t at = c.pos();
  std::string id = c.identifier();
  if (is_reserved(id)) {
    c.reset(at);
    c.fail("expected a formula");
  }
  return Formula::var(id);
}

}  // namespace

std::string to_string(const Formula& f) { return print(f, 0); }

Formula parse_formula(Cursor& c) {
  Formula f = parse_tensor(c);
  while (c.accept_keyword("v")) f = Formula::join(f, parse_tensor(c));
  return f;
}

Formula parse_formula(std::string_view text) {
  Cursor c(text);
  Formula f = parse_formula(c);
  c.expect_end();
  return f;
}

std::string to_string(const Sequent& s) {
  std::string out = "|-";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : " ") + to_string(s[i]);
  return out;
}

Proof Proof::ax(Formula a) { return Proof(std::make_shared<const Node>(Node{Rule::ax, {}, {std::move(a)}, {}, {}})); }
Proof Proof::ex(std::vector<std::size_t> perm, Proof p) {
  return Proof(std::make_shared<const Node>(Node{Rule::ex, {std::move(p)}, {}, std::move(perm), {}}));
}
Proof Proof::sub(Proof p, Formula b) {
  return Proof(std::make_shared<const Node>(Node{Rule::sub, {std::move(p)}, {std::move(b)}, {}, {}}));
}
Proof Proof::cut(Proof p, Proof q, Formula a) {
  return Proof(std::make_shared<const Node>(Node{Rule::cut, {std::move(p), std::move(q)}, {std::move(a)}, {}, {}}));
}
Proof Proof::one() { return Proof(std::make_shared<const Node>(Node{Rule::one, {}, {}, {}, {}})); }
Proof Proof::tensor(Proof p, Proof q) {
  return Proof(std::make_shared<const Node>(Node{Rule::tensor, {std::move(p), std::move(q)}, {}, {}, {}}));
}
Proof Proof::exists(Proof p, std::string x, Formula a, Formula b) {
  return Proof(
      std::make_shared<const Node>(Node{Rule::exists, {std::move(p)}, {std::move(a), std::move(b)}, {}, std::move(x)}));
}

const char* to_string(Proof::Rule r) {
  switch (r) {
    case Proof::Rule::ax: return "ax";
    case Proof::Rule::ex: return "ex";
    case Proof::Rule::sub: return "sub";
    case Proof::Rule::cut: return "cut";
    case Proof::Rule::one: return "one";
    case Proof::Rule::tensor: return "tensor";
    case Proof::Rule::exists: return "exists";
  }
  return "?";
}

std::string to_string(const Proof& p) {
  auto f = [](const Formula& x) { return x.kind() == Formula::Kind::var || x.kind() == Formula::Kind::one
                                             ? to_string(x)
                                             : "(" + to_string(x) + ")"; };
  const auto& ps = p.premises();
  switch (p.rule()) {
    case Proof::Rule::ax: return "(ax " + f(p.formulas()[0]) + ")";
    case Proof::Rule::ex: {
      std::string perm;
      for (auto i : p.perm()) perm += (perm.empty() ? "" : " ") + std::to_string(i);
      return "(ex (" + perm + ") " + to_string(ps[0]) + ")";
    }
    case Proof::Rule::sub: return "(sub " + to_string(ps[0]) + " " + f(p.formulas()[0]) + ")";
    case Proof::Rule::cut: return "(cut " + to_string(ps[0]) + " " + to_string(ps[1]) + " " + f(p.formulas()[0]) + ")";
    case Proof::Rule::one: return "(one)";
    case Proof::Rule::tensor: return "(tensor " + to_string(ps[0]) + " " + to_string(ps[1]) + ")";
    case Proof::Rule::exists:
      return "(exists " + to_string(ps[0]) + " " + p.var() + " " + f(p.formulas()[0]) + " " + f(p.formulas()[1]) + ")";
  }
  return "?";
}

namespace {

// A formula argument inside a proof: one postfix-level formula or a parenthesized one.
Formula proof_formula(Cursor& c) { return parse_postfix(c); }

}  // namespace

Proof parse_proof(Cursor& c) {
  c.expect("(");
  std::string rule = c.identifier();
  Proof out = Proof::one();
  if (rule == "ax") {
    out = Proof::ax(proof_formula(c));
  } else if (rule == "ex") {
    c.expect("(");
    std::vector<std::size_t> perm;
    while (!c.accept(")")) perm.push_back(c.natural());
    out = Proof::ex(std::move(perm), parse_proof(c));
  } else if (rule == "sub") {
    Proof p = parse_proof(c);
    out = Proof::sub(p, proof_formula(c));
  } else if (rule == "cut") {
    Proof p = parse_proof(c);
    Proof q = parse_proof(c);
    out = Proof::cut(p, q, proof_formula(c));
  } else if (rule == "one") {
    out = Proof::one();
  } else if (rule == "tensor") {
    Proof p = parse_proof(c);
    out = Proof::tensor(p, parse_proof(c));
  } else if (rule == "exists") {
    Proof p = parse_proof(c);
    std::string x = c.identifier();
    Formula a = proof_formula(c);
    out = Proof::exists(p, x, a, proof_formula(c));
  } else {
    c.fail("unknown rule '" + rule + "'");
  }
  c.expect(")");
  return out;
}

Proof parse_proof(std::string_view text) {
  std::string cleaned;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    cleaned += line + "\n";
  }
  Cursor c(cleaned);
  Proof p = parse_proof(c);
  c.expect_end();
  return p;
}

Proof load_proof(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::invalid_argument, "cannot read proof file " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_proof(buf.str());
}

namespace {

[[noreturn]] void mismatch(const std::string& path, Proof::Rule r, const std::string& msg) {
  throw Error(ErrorKind::rule_mismatch, "node " + path + " (" + to_string(r) + "): " + msg);
}

Sequent check_at(const Proof& p, const std::string& path) {
  auto premise = [&](std::size_t i) { return check_at(p.premises()[i], path + "." + std::to_string(i + 1)); };
  switch (p.rule()) {
    case Proof::Rule::ax: return {Formula::perp(p.formulas()[0]), p.formulas()[0]};
    case Proof::Rule::one: return {Formula::one()};
    case Proof::Rule::ex: {
      Sequent s = premise(0);
      const auto& perm = p.perm();
      std::vector<bool> used(s.size(), false);
      if (perm.size() != s.size())
        mismatch(path, p.rule(), "expected a permutation of " + std::to_string(s.size()) + " positions");
      Sequent out;
      for (auto i : perm) {
        if (i < 1 || i > s.size() || used[i - 1])
          mismatch(path, p.rule(), "expected a permutation of 1.." + std::to_string(s.size()));
        used[i - 1] = true;
        out.push_back(s[i - 1]);
      }
      return out;
    }
    case Proof::Rule::sub: {
      Sequent s = premise(0);
      if (s.empty()) mismatch(path, p.rule(), "expected a premise |- G, A");
      s.back() = Formula::join(s.back(), p.formulas()[0]);
      return s;
    }
    case Proof::Rule::cut: {
      Sequent l = premise(0), r = premise(1);
      const Formula& a = p.formulas()[0];
      if (l.empty() || !(l.back() == a))
        mismatch(path, p.rule(), "expected the left premise to end with " + to_string(a) + ", got " + to_string(l));
      if (r.empty() || !(r.front() == Formula::perp(a)))
        mismatch(path, p.rule(),
                 "expected the right premise to start with " + to_string(Formula::perp(a)) + ", got " + to_string(r));
      l.pop_back();
      l.insert(l.end(), r.begin() + 1, r.end());
      return l;
    }
    case Proof::Rule::tensor: {
      Sequent l = premise(0), r = premise(1);
      if (l.empty() || r.empty()) mismatch(path, p.rule(), "expected premises |- G, A and |- B, D");
      Formula a = l.back();
      l.pop_back();
      l.push_back(Formula::tensor(a, r.front()));
      l.insert(l.end(), r.begin() + 1, r.end());
      return l;
    }
    case Proof::Rule::exists: {
      Sequent s = premise(0);
      const Formula &a = p.formulas()[0], &b = p.formulas()[1];
      Formula expect = substitute(a, p.var(), b);
      if (s.empty() || !(s.back() == expect))
        mismatch(path, p.rule(), "expected the premise to end with " + to_string(expect) + ", got " + to_string(s));
      s.back() = Formula::exists(p.var(), a);
      return s;
    }
  }
  mismatch(path, p.rule(), "unknown rule");
}

}  // namespace

Sequent check_proof(const Proof& p) { return check_at(p, "root"); }

Elem interpret(const Formula& f, const Algebra& a, const Assignment& assign) {
  switch (f.kind()) {
    case Formula::Kind::one: return a.unit();
    case Formula::Kind::var: {
      auto it = assign.find(f.name());
      if (it == assign.end()) throw Error(ErrorKind::unbound_variable, f.name());
      return it->second;
    }
    case Formula::Kind::perp: return a.perp(interpret(f.body(), a, assign));
    case Formula::Kind::tensor: return a.tensor(interpret(f.left(), a, assign), interpret(f.right(), a, assign));
    case Formula::Kind::join: return a.join(interpret(f.left(), a, assign), interpret(f.right(), a, assign));
    case Formula::Kind::exists: {
      Assignment local = assign;
      std::vector<Elem> values;
      for (Elem e = 0; e < a.size(); ++e) {
        local[f.name()] = e;
        values.push_back(interpret(f.body(), a, local));
      }
      return a.join_all(values);
    }
  }
  return a.unit();
}

Elem interpret(const Sequent& s, const Algebra& a, const Assignment& assign) {
  if (s.empty()) return a.perp(a.unit());
  Elem acc = interpret(s.back(), a, assign);
  for (std::size_t i = s.size() - 1; i-- > 0;) acc = a.parr(interpret(s[i], a, assign), acc);
  return acc;
}

namespace {

void collect_nodes(const Proof& p, const std::string& path, std::vector<std::pair<std::string, Proof>>& out) {
  out.push_back({path, p});
  for (std::size_t i = 0; i < p.premises().size(); ++i)
    collect_nodes(p.premises()[i], path + "." + std::to_string(i + 1), out);
}

}  // namespace

Report check_soundness(const Proof& p, const FinModel& m, const SoundnessOptions& opts) {
  Report r;
  r.title = "soundness";
  check_proof(p);
  Algebra a(m);
  std::vector<std::pair<std::string, Proof>> nodes;
  collect_nodes(p, "root", nodes);
  std::vector<std::pair<std::string, Sequent>> conclusions;
  std::set<std::string> vars;
  for (const auto& [path, q] : nodes) {
    Sequent s = check_proof(q);
    for (const auto& f : s) {
      auto fv = free_vars(f);
      vars.insert(fv.begin(), fv.end());
    }
    conclusions.push_back({path, s});
  }
  std::vector<std::string> vs(vars.begin(), vars.end());

  std::size_t total = 1;
  bool exhaustive = true;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (total > opts.exhaustive_limit / a.size()) {
      exhaustive = false;
      break;
    }
    total *= a.size();
  }
  std::vector<Assignment> assigns;
  if (exhaustive) {
    for (std::size_t k = 0; k < total; ++k) {
      Assignment as;
      std::size_t code = k;
      for (const auto& v : vs) {
        as[v] = code % a.size();
        code /= a.size();
      }
      assigns.push_back(std::move(as));
    }
  } else {
    std::mt19937 rng(11);
    std::uniform_int_distribution<Elem> pick(0, a.size() - 1);
    for (std::size_t k = 0; k < opts.samples; ++k) {
      Assignment as;
      for (const auto& v : vs) as[v] = pick(rng);
      assigns.push_back(std::move(as));
    }
  }
  r.notes.push_back(std::to_string(assigns.size()) + (exhaustive ? " assignments (all)" : " sampled assignments"));

  for (const auto& [path, s] : conclusions) {
    bool ok = true;
    std::string witness;
    for (const auto& as : assigns) {
      Elem v = interpret(s, a, as);
      if (!a.in_sep(v)) {
        ok = false;
        for (const auto& [k, e] : as) witness += k + "=" + m.name(e) + " ";
        witness += "value " + m.name(v);
        break;
      }
    }
    r.add(path + " " + to_string(s), ok, witness);
  }
  return r;
}

RealizerExpr RealizerExpr::constant(std::string label) {
  return RealizerExpr(std::make_shared<const Node>(Node{Kind::constant, std::move(label), {}}));
}
RealizerExpr RealizerExpr::unit() { return RealizerExpr(std::make_shared<const Node>(Node{Kind::unit, {}, {}})); }
RealizerExpr RealizerExpr::star1(RealizerExpr a, RealizerExpr b) {
  return RealizerExpr(std::make_shared<const Node>(Node{Kind::star1, {}, {std::move(a), std::move(b)}}));
}
RealizerExpr RealizerExpr::par(RealizerExpr a, RealizerExpr b) {
  return RealizerExpr(std::make_shared<const Node>(Node{Kind::par, {}, {std::move(a), std::move(b)}}));
}

std::string to_string(const RealizerExpr& e) {
  switch (e.kind()) {
    case RealizerExpr::Kind::constant: return e.label();
    case RealizerExpr::Kind::unit: return "UNIT";
    case RealizerExpr::Kind::star1: return "(" + to_string(e.left()) + " *1 " + to_string(e.right()) + ")";
    case RealizerExpr::Kind::par: return "(" + to_string(e.left()) + " | " + to_string(e.right()) + ")";
  }
  return "?";
}

namespace {

using R = RealizerExpr;

R compose(const R& s, const R& t) { return R::star1(R::star1(R::constant("COMP"), s), t); }
R in_context(const R& r) { return R::star1(R::constant("CTX"), r); }

// Swap of positions i and i+1 in a k-formula sequent read as a right-nested parr.
R transposition(std::size_t i, std::size_t k) {
  R base = i + 2 == k ? R::constant("COMM")
                      : compose(compose(R::constant("ASSOC_L"), in_context(R::constant("COMM"))), R::constant("ASSOC_R"));
  for (std::size_t j = 0; j < i; ++j) base = in_context(base);
  return base;
}

R permutation(const std::vector<std::size_t>& perm) {
  // Bubble sort from the premise order to the conclusion order, one adjacent swap at a time.
  std::vector<std::size_t> cur(perm.size());
  for (std::size_t i = 0; i < cur.size(); ++i) cur[i] = i + 1;
  std::optional<R> chain;
  for (std::size_t target = 0; target < perm.size(); ++target) {
    std::size_t at = static_cast<std::size_t>(std::find(cur.begin(), cur.end(), perm[target]) - cur.begin());
    while (at > target) {
      std::swap(cur[at - 1], cur[at]);
      R t = transposition(at - 1, perm.size());
      chain = chain ? compose(*chain, t) : t;
      --at;
    }
  }
  return chain ? *chain : R::constant("ID");
}

}  // namespace

RealizerExpr extract_realizer(const Proof& p) {
  check_proof(p);
  const auto& ps = p.premises();
  switch (p.rule()) {
    case Proof::Rule::ax: return R::constant("ID");
    case Proof::Rule::one: return R::unit();
    case Proof::Rule::ex: return R::star1(permutation(p.perm()), extract_realizer(ps[0]));
    case Proof::Rule::sub:
    case Proof::Rule::exists: return R::star1(R::constant("ID"), extract_realizer(ps[0]));
    case Proof::Rule::cut: return R::star1(R::star1(R::constant("COMP"), extract_realizer(ps[0])), extract_realizer(ps[1]));
    case Proof::Rule::tensor:
      return R::star1(R::star1(compose(R::constant("ASSOC_R"), R::constant("CTX")), extract_realizer(ps[0])),
                      extract_realizer(ps[1]));
  }
  return R::unit();
}

Pwf evaluate(const RealizerExpr& e) {
  switch (e.kind()) {
    case RealizerExpr::Kind::constant: return {Process::nil(), catalog_entry(e.label()).fusion()};
    case RealizerExpr::Kind::unit: return unit();
    case RealizerExpr::Kind::star1: return star(1, evaluate(e.left()), evaluate(e.right()));
    case RealizerExpr::Kind::par: return par(evaluate(e.left()), evaluate(e.right()));
  }
  return unit();
}

}  // namespace pwfcalc

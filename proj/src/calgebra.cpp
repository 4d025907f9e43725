#include "pwfcalc/calgebra.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace pwfcalc {

Elem FinModel::index(const std::string& name) const {
  auto it = std::find(carrier.begin(), carrier.end(), name);
  if (it == carrier.end()) throw Error(ErrorKind::parse, "unknown element '" + name + "'");
  return static_cast<Elem>(it - carrier.begin());
}

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::string cleaned = line;
  for (char& ch : cleaned)
    if (ch == ',') ch = ' ';
  std::istringstream in(cleaned);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

[[noreturn]] void bad_line(std::size_t lineno, const std::string& msg) {
  throw Error(ErrorKind::parse, "model line " + std::to_string(lineno) + ": " + msg);
}

Name to_name(const std::string& t, std::size_t lineno) {
  try {
    std::size_t used = 0;
    auto v = std::stoull(t, &used);
    if (used != t.size()) bad_line(lineno, "expected a name, got '" + t + "'");
    return v;
  } catch (const std::logic_error&) {
    bad_line(lineno, "expected a name, got '" + t + "'");
  }
}

// Reflexive-transitive closure of the given pairs.
std::vector<std::vector<bool>> closure(std::size_t n, const std::vector<std::pair<Elem, Elem>>& pairs) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (Elem i = 0; i < n; ++i) leq[i][i] = true;
  for (auto [a, b] : pairs) leq[a][b] = true;
  for (Elem k = 0; k < n; ++k)
    for (Elem i = 0; i < n; ++i)
      if (leq[i][k])
        for (Elem j = 0; j < n; ++j)
          if (leq[k][j]) leq[i][j] = true;
  return leq;
}

}  // namespace

FinModel parse_model(std::string_view text) {
  FinModel m;
  std::istringstream in{std::string(text)};
  std::string section;
  std::vector<std::pair<Elem, Elem>> leq_pairs;
  bool have_leq = false, have_unit = false, have_sep = false;
  std::map<std::string, std::vector<std::pair<std::size_t, std::vector<std::string>>>> rows;

  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto toks = tokens(line);
    if (toks.empty()) continue;
    if (toks.size() == 1 && toks[0].front() == '[' && toks[0].back() == ']') {
      section = toks[0].substr(1, toks[0].size() - 2);
      static const std::set<std::string> known{"carrier", "leq",    "join", "tensor", "perp",
                                               "unit",    "par",    "window", "M", "separator"};
      if (!known.count(section)) bad_line(lineno, "unknown section [" + section + "]");
      if (section == "leq") have_leq = true;
      if (section == "separator") have_sep = true;
      continue;
    }
    if (section.empty()) bad_line(lineno, "content before the first section");
    if (section == "carrier") {
      for (const auto& t : toks) {
        if (std::find(m.carrier.begin(), m.carrier.end(), t) != m.carrier.end())
          bad_line(lineno, "duplicate element '" + t + "'");
        m.carrier.push_back(t);
      }
    } else {
      rows[section].push_back({lineno, toks});
    }
  }
  const std::size_t n = m.size();
  if (n == 0) throw Error(ErrorKind::parse, "model has an empty carrier");

  auto elem = [&](const std::string& t, std::size_t lineno) {
    auto it = std::find(m.carrier.begin(), m.carrier.end(), t);
    if (it == m.carrier.end()) bad_line(lineno, "unknown element '" + t + "'");
    return static_cast<Elem>(it - m.carrier.begin());
  };
  auto binary = [&](const std::string& sec) {
    Table t(n, std::vector<Elem>(n, n));
    for (const auto& [ln, toks] : rows[sec]) {
      if (toks.size() != 4 || toks[2] != "->") bad_line(ln, "expected 'a b -> c'");
      t[elem(toks[0], ln)][elem(toks[1], ln)] = elem(toks[3], ln);
    }
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        if (t[a][b] == n)
          throw Error(ErrorKind::parse, "[" + sec + "] misses the entry " + m.carrier[a] + " " + m.carrier[b]);
    return t;
  };

  for (const auto& [ln, toks] : rows["leq"]) {
    if (toks.size() != 3 || toks[1] != "<=") bad_line(ln, "expected 'a <= b'");
    leq_pairs.push_back({elem(toks[0], ln), elem(toks[2], ln)});
  }
  if (rows.count("join")) m.join_table = binary("join");
  if (!have_leq && !m.join_table) throw Error(ErrorKind::parse, "model needs [leq] or [join]");
  if (have_leq) {
    m.leq = closure(n, leq_pairs);
  } else {
    m.leq.assign(n, std::vector<bool>(n, false));
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) m.leq[a][b] = (*m.join_table)[a][b] == b;
  }

  if (!rows.count("tensor")) throw Error(ErrorKind::parse, "model needs [tensor]");
  m.tensor = binary("tensor");

  m.perp.assign(n, n);
  for (const auto& [ln, toks] : rows["perp"]) {
    std::vector<std::string> t = toks;
    if (t.size() == 3 && t[1] == "->") t.erase(t.begin() + 1);
    if (t.size() != 2) bad_line(ln, "expected 'a -> b'");
    m.perp[elem(t[0], ln)] = elem(t[1], ln);
  }
  for (Elem a = 0; a < n; ++a)
    if (m.perp[a] == n) throw Error(ErrorKind::parse, "[perp] misses " + m.carrier[a]);

  for (const auto& [ln, toks] : rows["unit"]) {
    if (toks.size() != 1 || have_unit) bad_line(ln, "[unit] takes one element");
    m.unit = elem(toks[0], ln);
    have_unit = true;
  }
  if (!have_unit) throw Error(ErrorKind::parse, "model needs [unit]");

  if (rows.count("par")) m.par = binary("par");

  for (const auto& [ln, toks] : rows["window"])
    for (const auto& t : toks) m.window.push_back(to_name(t, ln));
  for (const auto& [ln, toks] : rows["M"]) {
    if (toks.size() != 4 || toks[2] != "->") bad_line(ln, "expected 'a x -> elem'");
    m.m_table[{to_name(toks[0], ln), to_name(toks[1], ln)}] = elem(toks[3], ln);
  }

  m.separator.assign(n, false);
  if (!have_sep) throw Error(ErrorKind::parse, "model needs [separator]");
  for (const auto& [ln, toks] : rows["separator"])
    for (const auto& t : toks) m.separator[elem(t, ln)] = true;
  return m;
}

FinModel load_model(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::invalid_argument, "cannot read model file " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_model(buf.str());
}

Algebra::Algebra(const FinModel& m) : m_(m) {
  const std::size_t n = m_.size();
  auto lub = [&](const std::vector<Elem>& xs) -> std::optional<Elem> {
    std::vector<Elem> ubs;
    for (Elem u = 0; u < n; ++u)
      if (std::all_of(xs.begin(), xs.end(), [&](Elem x) { return m_.leq[x][u]; })) ubs.push_back(u);
    for (Elem u : ubs)
      if (std::all_of(ubs.begin(), ubs.end(), [&](Elem v) { return m_.leq[u][v]; })) return u;
    return std::nullopt;
  };
  auto bot = lub({});
  if (!bot) throw Error(ErrorKind::invalid_argument, "order has no least element");
  bottom_ = *bot;
  join_.assign(n, std::vector<Elem>(n, 0));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      auto j = lub({a, b});
      if (!j) throw Error(ErrorKind::invalid_argument, m_.name(a) + " and " + m_.name(b) + " have no join");
      join_[a][b] = *j;
    }
  std::vector<Elem> all(n);
  for (Elem a = 0; a < n; ++a) all[a] = a;
  top_ = join_all(all);
  // Meets as joins of lower bounds.
  meet_.assign(n, std::vector<Elem>(n, 0));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      std::vector<Elem> lbs;
      for (Elem x = 0; x < n; ++x)
        if (m_.leq[x][a] && m_.leq[x][b]) lbs.push_back(x);
      meet_[a][b] = join_all(lbs);
    }
}

Elem Algebra::join_all(const std::vector<Elem>& xs) const {
  Elem acc = bottom_;
  for (Elem x : xs) acc = join(acc, x);
  return acc;
}

Elem Algebra::meet_all(const std::vector<Elem>& xs) const {
  Elem acc = top_;
  for (Elem x : xs) acc = meet(acc, x);
  return acc;
}

Elem Algebra::app(Elem a, Elem b) const {
  std::vector<Elem> cs;
  for (Elem c = 0; c < size(); ++c)
    if (leq(a, lolli(b, c))) cs.push_back(c);
  return meet_all(cs);
}

Elem Algebra::tri(Elem b, Elem c) const {
  std::vector<Elem> xs;
  for (Elem x = 0; x < size(); ++x)
    if (leq(par(x, b), c)) xs.push_back(x);
  return join_all(xs);
}

std::vector<Elem> Algebra::combinators() const {
  const std::size_t n = size();
  std::vector<Elem> s3, s4, s5, s6, s7;
  for (Elem a = 0; a < n; ++a) {
    s6.push_back(lolli(a, tensor(unit(), a)));
    s7.push_back(lolli(tensor(unit(), a), a));
    for (Elem b = 0; b < n; ++b) {
      s3.push_back(lolli(tensor(a, b), tensor(b, a)));
      for (Elem c = 0; c < n; ++c) {
        s4.push_back(lolli(lolli(a, b), lolli(lolli(b, c), lolli(a, c))));
        s5.push_back(lolli(tensor(tensor(a, b), c), tensor(a, tensor(b, c))));
      }
    }
  }
  return {meet_all(s3), meet_all(s4), meet_all(s5), meet_all(s6), meet_all(s7)};
}

std::optional<Elem> Algebra::m(Name a, Name x) const {
  auto it = m_.m_table.find({a, x});
  if (it == m_.m_table.end()) return std::nullopt;
  return it->second;
}

namespace {

// Records the first counterexample of a universally quantified property.
class Quantified {
public:
  explicit Quantified(std::string name) : name_(std::move(name)) {}
  template <class F>
  void expect(bool holds, F&& witness) {
    if (!holds && pass_) {
      pass_ = false;
      witness_ = witness();
    }
  }
  void add_to(Report& r) const { r.add(name_, pass_, witness_); }

private:
  std::string name_;
  bool pass_ = true;
  std::string witness_;
};

std::string names(const FinModel& m, std::initializer_list<std::pair<const char*, Elem>> xs) {
  std::string out;
  for (const auto& [k, v] : xs) out += (out.empty() ? "" : " ") + std::string(k) + "=" + m.name(v);
  return out;
}

// Order and table axioms; returns the algebra when the order is a lattice.
std::optional<Algebra> structure_checks(const FinModel& m, Report& r) {
  const std::size_t n = m.size();
  Quantified antisym("order antisymmetric");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      antisym.expect(!(a != b && m.leq[a][b] && m.leq[b][a]), [&] { return names(m, {{"a", a}, {"b", b}}); });
  antisym.add_to(r);

  std::optional<Algebra> alg;
  try {
    alg.emplace(m);
    r.add("complete lattice", true);
  } catch (const Error& e) {
    r.add("complete lattice", false, e.what());
    return std::nullopt;
  }
  const Algebra& A = *alg;

  if (m.join_table) {
    Quantified consistent("join table matches order");
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        consistent.expect((*m.join_table)[a][b] == A.join(a, b), [&] { return names(m, {{"a", a}, {"b", b}}); });
    consistent.add_to(r);
  }

  Quantified mono("tensor monotone"), anti("perp antitone"), involutive("perp involutive");
  Quantified dist_l("tensor distributes over joins (left)"), dist_r("tensor distributes over joins (right)");
  Quantified demorgan("de Morgan");
  for (Elem a = 0; a < n; ++a) {
    involutive.expect(A.perp(A.perp(a)) == a, [&] { return names(m, {{"a", a}}); });
    dist_l.expect(A.tensor(a, A.bottom()) == A.bottom(), [&] { return names(m, {{"a", a}}) + " B=empty"; });
    dist_r.expect(A.tensor(A.bottom(), a) == A.bottom(), [&] { return names(m, {{"a", a}}) + " B=empty"; });
    for (Elem b = 0; b < n; ++b) {
      if (A.leq(a, b)) {
        anti.expect(A.leq(A.perp(b), A.perp(a)), [&] { return names(m, {{"a", a}, {"b", b}}); });
        for (Elem c = 0; c < n; ++c)
          mono.expect(A.leq(A.tensor(a, c), A.tensor(b, c)) && A.leq(A.tensor(c, a), A.tensor(c, b)),
                      [&] { return names(m, {{"a", a}, {"b", b}, {"c", c}}); });
      }
      demorgan.expect(A.perp(A.join(a, b)) == A.meet(A.perp(a), A.perp(b)),
                      [&] { return names(m, {{"b1", a}, {"b2", b}}); });
      for (Elem c = 0; c < n; ++c) {
        dist_l.expect(A.tensor(a, A.join(b, c)) == A.join(A.tensor(a, b), A.tensor(a, c)),
                      [&] { return names(m, {{"a", a}, {"b1", b}, {"b2", c}}); });
        dist_r.expect(A.tensor(A.join(b, c), a) == A.join(A.tensor(b, a), A.tensor(c, a)),
                      [&] { return names(m, {{"a", a}, {"b1", b}, {"b2", c}}); });
      }
    }
  }
  // Binary and empty joins determine all joins of a finite lattice.
  demorgan.expect(A.perp(A.bottom()) == A.top(), [] { return std::string("B=empty"); });
  for (const auto* q : {&mono, &anti, &dist_l, &dist_r, &demorgan, &involutive}) q->add_to(r);
  return alg;
}

void separator_checks(const Algebra& A, Report& r) {
  const FinModel& m = A.model();
  const std::size_t n = A.size();
  auto comb = A.combinators();
  std::string values;
  for (std::size_t i = 0; i < comb.size(); ++i)
    values += (i ? " " : "") + std::string("S") + std::to_string(i + 3) + "=" + m.name(comb[i]);
  r.notes.push_back("combinators: " + values);
  for (std::size_t i = 0; i < comb.size(); ++i)
    r.add("ax: S" + std::to_string(i + 3) + " in separator", A.in_sep(comb[i]), m.name(comb[i]));
  r.add("unit: 1 in separator", A.in_sep(A.unit()), m.name(A.unit()));

  Quantified upc("upc"), mp("mp"), ctx("ctx"), ctr("ctr");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (A.leq(a, b) && A.in_sep(a)) upc.expect(A.in_sep(b), [&] { return names(m, {{"a", a}, {"b", b}}); });
      Elem ab = A.lolli(a, b);
      if (!A.in_sep(ab)) continue;
      if (A.in_sep(a)) mp.expect(A.in_sep(b), [&] { return names(m, {{"a", a}, {"b", b}}); });
      ctr.expect(A.in_sep(A.lolli(A.perp(b), A.perp(a))), [&] { return names(m, {{"a", a}, {"b", b}}); });
      for (Elem c = 0; c < n; ++c)
        ctx.expect(A.in_sep(A.lolli(A.tensor(a, c), A.tensor(b, c))),
                   [&] { return names(m, {{"a", a}, {"b", b}, {"c", c}}); });
    }
  for (const auto* q : {&upc, &mp, &ctx, &ctr}) q->add_to(r);
}

void parallel_checks(const Algebra& A, Report& r) {
  const FinModel& m = A.model();
  if (!A.has_par()) {
    r.add("parallel composition present", false, "no [par] table");
    return;
  }
  const std::size_t n = A.size();
  Quantified comm("par commutative"), assoc("par associative"), unit("par unit"), compat("par below joins");
  for (Elem a = 0; a < n; ++a) {
    unit.expect(A.par(a, A.unit()) == a && A.par(A.unit(), a) == a, [&] { return names(m, {{"a", a}}); });
    compat.expect(A.leq(A.par(A.bottom(), a), A.bottom()), [&] { return names(m, {{"a", a}}) + " B=empty"; });
    for (Elem b = 0; b < n; ++b) {
      comm.expect(A.par(a, b) == A.par(b, a), [&] { return names(m, {{"a", a}, {"b", b}}); });
      for (Elem c = 0; c < n; ++c) {
        assoc.expect(A.par(A.par(a, b), c) == A.par(a, A.par(b, c)),
                     [&] { return names(m, {{"a", a}, {"b", b}, {"c", c}}); });
        compat.expect(A.leq(A.par(A.join(b, c), a), A.join(A.par(b, a), A.par(c, a))),
                      [&] { return names(m, {{"a", a}, {"b1", b}, {"b2", c}}); });
      }
    }
  }
  for (const auto* q : {&comm, &assoc, &unit, &compat}) q->add_to(r);
}

Report header(const FinModel& m, const std::string& title) {
  Report r;
  r.title = title;
  r.notes.push_back("carrier size " + std::to_string(m.size()));
  return r;
}

}  // namespace

Report check_cs(const FinModel& m) {
  Report r = header(m, "conjunctive structure");
  structure_checks(m, r);
  return r;
}

Report check_ca(const FinModel& m) {
  Report r = header(m, "conjunctive algebra");
  if (auto A = structure_checks(m, r)) separator_checks(*A, r);
  return r;
}

Report check_cpa(const FinModel& m) {
  Report r = header(m, "conjunctive parallel algebra");
  if (auto A = structure_checks(m, r)) {
    separator_checks(*A, r);
    parallel_checks(*A, r);
  }
  return r;
}

std::optional<std::vector<HyValues>> hy_combinators(const Algebra& A) {
  const auto& w = A.model().window;
  if (!A.has_par() || w.empty()) return std::nullopt;
  for (Name a : w)
    for (Name x : w)
      if (!A.m(a, x)) return std::nullopt;
  auto M = [&](Name a, Name x) { return *A.m(a, x); };
  auto over_window = [&](const std::function<Elem(Name)>& f) {
    std::vector<Elem> xs;
    for (Name x : w) xs.push_back(f(x));
    return A.meet_all(xs);
  };
  auto F = [&](Name a, Name b) { return over_window([&](Name x) { return A.tri(M(a, x), M(b, x)); }); };
  std::vector<HyValues> out;
  for (Name a : w) out.push_back({"K", {a}, over_window([&](Name x) { return A.tri(M(a, x), A.unit()); })});
  for (Name a : w)
    for (Name b : w) out.push_back({"F", {a, b}, F(a, b)});
  for (Name a : w)
    for (Name b : w) out.push_back({"Bl", {a, b}, over_window([&](Name x) { return A.tri(M(a, x), F(x, b)); })});
  for (Name a : w)
    for (Name b : w) out.push_back({"Br", {a, b}, over_window([&](Name x) { return A.tri(M(a, x), F(b, x)); })});
  for (Name a : w)
    for (Name b : w)
      for (Name c : w) {
        out.push_back({"D", {a, b, c}, over_window([&](Name x) { return A.tri(M(a, x), A.par(M(b, x), M(c, x))); })});
        out.push_back({"S", {a, b, c}, over_window([&](Name x) { return A.tri(M(a, x), F(b, c)); })});
      }
  return out;
}

Report check_ccpa(const FinModel& m) {
  Report r = header(m, "combinatory conjunctive parallel algebra");
  r.notes.push_back("M and the meets over names range over the window only");
  auto A = structure_checks(m, r);
  if (!A) return r;
  separator_checks(*A, r);
  parallel_checks(*A, r);
  if (!A->has_par()) return r;

  const auto& w = m.window;
  bool total = !w.empty();
  std::string missing;
  for (Name a : w)
    for (Name x : w)
      if (!A->m(a, x) && total) {
        total = false;
        missing = "M(" + std::to_string(a) + "," + std::to_string(x) + ") undefined";
      }
  r.add("M defined on the window", total, w.empty() ? "empty window" : missing);
  if (!total) return r;

  Quantified inj("M injective on the window");
  std::map<Elem, std::pair<Name, Name>> seen;
  for (Name a : w)
    for (Name x : w) {
      Elem e = *A->m(a, x);
      auto [it, fresh] = seen.emplace(e, std::make_pair(a, x));
      inj.expect(fresh, [&, it = it] {
        return "M(" + std::to_string(it->second.first) + "," + std::to_string(it->second.second) + ") = M(" +
               std::to_string(a) + "," + std::to_string(x) + ") = " + m.name(e);
      });
    }
  inj.add_to(r);

  auto hy = *hy_combinators(*A);
  auto show = [&](const HyValues& h) {
    std::string s = h.label + "(";
    for (std::size_t i = 0; i < h.params.size(); ++i) s += (i ? "," : "") + std::to_string(h.params[i]);
    return s + ")=" + m.name(h.value);
  };
  Quantified members("Honda-Yoshida combinators in separator");
  for (const auto& h : hy) members.expect(A->in_sep(h.value), [&] { return show(h); });
  members.add_to(r);

  auto find = [&](const std::string& label, std::vector<Name> ps) {
    for (const auto& h : hy)
      if (h.label == label && h.params == ps) return h.value;
    throw Error(ErrorKind::invalid_argument, "missing combinator " + label);
  };
  auto M = [&](Name a, Name x) { return *A->m(a, x); };
  Quantified reductions("Honda-Yoshida reduction inequalities");
  for (Name a : w)
    for (Name x : w) {
      auto at = [&](const std::string& what) {
        return what + " a=" + std::to_string(a) + " x=" + std::to_string(x);
      };
      reductions.expect(A->leq(A->par(find("K", {a}), M(a, x)), A->unit()), [&] { return at("K"); });
      for (Name b : w) {
        reductions.expect(A->leq(A->par(find("F", {a, b}), M(a, x)), M(b, x)), [&] { return at("F"); });
        reductions.expect(A->leq(A->par(find("Bl", {a, b}), M(a, x)), find("F", {x, b})), [&] { return at("Bl"); });
        reductions.expect(A->leq(A->par(find("Br", {a, b}), M(a, x)), find("F", {b, x})), [&] { return at("Br"); });
        for (Name c : w) {
          reductions.expect(A->leq(A->par(find("D", {a, b, c}), M(a, x)), A->par(M(b, x), M(c, x))),
                            [&] { return at("D"); });
          reductions.expect(A->leq(A->par(find("S", {a, b, c}), M(a, x)), find("F", {b, c})),
                            [&] { return at("S"); });
        }
      }
    }
  reductions.add_to(r);
  return r;
}

Report check_derived_props(const FinModel& m) {
  Report r = header(m, "derived properties");
  auto alg = structure_checks(m, r);
  if (!alg) return r;
  const Algebra& A = *alg;
  const std::size_t n = A.size();

  Quantified dual("de Morgan dual"), lolli_meet("lolli distributes over meets"), join_lolli("join on the left of lolli");
  Quantified parr_mono("parr monotone"), lolli_var("lolli antitone left, monotone right"), app_mono("app monotone");
  Quantified adj("app adjoint to lolli"), counit("(a -o b) * a <= b"), unit_adj("a <= b -o (a * b)");
  Quantified sep_app("separator closed under app"), lolli_parr("a -o b = a^ parr b"), identity("a -o a in separator");
  Quantified upcast("g parr a <= g parr (a join b)"), swap("(a*b)^ -o (b*a)^ in separator");
  Quantified semi("(a parr b)*c -o a parr (b*c) in separator"), tensor_rule("tensor rule in separator");
  Quantified cut_rule("cut rule in separator"), perm("parr permutations in separator");
  Quantified tri_adj("par adjoint to |>"), exists_mono("exists monotone");

  for (Elem a = 0; a < n; ++a) {
    identity.expect(A.in_sep(A.lolli(a, a)), [&] { return names(m, {{"a", a}}); });
    for (Elem b = 0; b < n; ++b) {
      dual.expect(A.perp(A.meet(a, b)) == A.join(A.perp(a), A.perp(b)), [&] { return names(m, {{"b1", a}, {"b2", b}}); });
      lolli_parr.expect(A.lolli(a, b) == A.parr(A.perp(a), b), [&] { return names(m, {{"a", a}, {"b", b}}); });
      counit.expect(A.leq(A.app(A.lolli(a, b), a), b), [&] { return names(m, {{"a", a}, {"b", b}}); });
      unit_adj.expect(A.leq(a, A.lolli(b, A.app(a, b))), [&] { return names(m, {{"a", a}, {"b", b}}); });
      swap.expect(A.in_sep(A.lolli(A.perp(A.tensor(a, b)), A.perp(A.tensor(b, a)))),
                  [&] { return names(m, {{"a", a}, {"b", b}}); });
      if (A.in_sep(a) && A.in_sep(b))
        sep_app.expect(A.in_sep(A.app(a, b)), [&] { return names(m, {{"a", a}, {"b", b}}); });
      for (Elem c = 0; c < n; ++c) {
        lolli_meet.expect(A.lolli(a, A.meet(b, c)) == A.meet(A.lolli(a, b), A.lolli(a, c)),
                          [&] { return names(m, {{"a", a}, {"b1", b}, {"b2", c}}); });
        join_lolli.expect(A.lolli(A.join(b, c), a) == A.meet(A.lolli(b, a), A.lolli(c, a)),
                          [&] { return names(m, {{"a", a}, {"b1", b}, {"b2", c}}); });
        adj.expect(A.leq(A.app(a, b), c) == A.leq(a, A.lolli(b, c)),
                   [&] { return names(m, {{"a", a}, {"b", b}, {"c", c}}); });
        upcast.expect(A.leq(A.parr(a, b), A.parr(a, A.join(b, c))),
                      [&] { return names(m, {{"g", a}, {"a", b}, {"b", c}}); });
        semi.expect(A.in_sep(A.lolli(A.tensor(A.parr(a, b), c), A.parr(a, A.tensor(b, c)))),
                    [&] { return names(m, {{"a", a}, {"b", b}, {"c", c}}); });
        cut_rule.expect(A.in_sep(A.lolli(A.parr(a, b), A.lolli(A.parr(A.perp(b), c), A.parr(a, c)))),
                        [&] { return names(m, {{"g", a}, {"a", b}, {"d", c}}); });
        std::vector<Elem> vals{a, b, c};
        std::vector<std::size_t> pos{0, 1, 2};
        do {
          Elem permuted = A.parr(vals[pos[0]], A.parr(vals[pos[1]], vals[pos[2]]));
          perm.expect(A.in_sep(A.lolli(A.parr(a, A.parr(b, c)), permuted)),
                      [&] { return names(m, {{"a1", a}, {"a2", b}, {"a3", c}}); });
        } while (std::next_permutation(pos.begin(), pos.end()));
        if (A.has_par())
          tri_adj.expect(A.leq(A.par(a, b), c) == A.leq(a, A.tri(b, c)),
                         [&] { return names(m, {{"a", a}, {"b", b}, {"c", c}}); });
        for (Elem d = 0; d < n; ++d)
          tensor_rule.expect(
              A.in_sep(A.lolli(A.tensor(A.parr(a, b), A.parr(c, d)), A.parr(a, A.parr(A.tensor(b, c), d)))),
              [&] { return names(m, {{"g", a}, {"a", b}, {"b", c}, {"d", d}}); });
      }
      if (A.leq(a, b))
        for (Elem c = 0; c < n; ++c) {
          parr_mono.expect(A.leq(A.parr(a, c), A.parr(b, c)) && A.leq(A.parr(c, a), A.parr(c, b)),
                           [&] { return names(m, {{"a", a}, {"b", b}, {"c", c}}); });
          lolli_var.expect(A.leq(A.lolli(b, c), A.lolli(a, c)) && A.leq(A.lolli(c, a), A.lolli(c, b)),
                           [&] { return names(m, {{"a", a}, {"b", b}, {"c", c}}); });
          app_mono.expect(A.leq(A.app(a, c), A.app(b, c)) && A.leq(A.app(c, a), A.app(c, b)),
                          [&] { return names(m, {{"a", a}, {"b", b}, {"c", c}}); });
        }
    }
  }
  // x |-> x meet c lies pointwise below the identity, so its exists must too.
  for (Elem c = 0; c < n; ++c) {
    std::vector<Elem> f, g;
    for (Elem x = 0; x < n; ++x) {
      f.push_back(A.meet(x, c));
      g.push_back(x);
    }
    exists_mono.expect(A.leq(A.join_all(f), A.join_all(g)), [&] { return names(m, {{"c", c}}); });
  }

  for (const auto* q : {&dual, &lolli_meet, &join_lolli, &parr_mono, &lolli_var, &app_mono, &adj, &counit, &unit_adj,
                        &sep_app, &lolli_parr, &identity, &upcast, &swap, &semi, &tensor_rule, &cut_rule, &perm,
                        &exists_mono})
    q->add_to(r);
  if (A.has_par()) tri_adj.add_to(r);
  return r;
}

HomResult hom_compose(const FinModel& m, Elem s, Elem t, Elem a, Elem b, Elem c) {
  Algebra A(m);
  if (!A.in_sep(s) || !A.leq(s, A.lolli(a, b)))
    throw Error(ErrorKind::invalid_argument, "s=" + m.name(s) + " is not in Hom(" + m.name(a) + "," + m.name(b) + ")");
  if (!A.in_sep(t) || !A.leq(t, A.lolli(b, c)))
    throw Error(ErrorKind::invalid_argument, "t=" + m.name(t) + " is not in Hom(" + m.name(b) + "," + m.name(c) + ")");
  Elem s4 = A.combinators()[1];
  Elem v = A.app(A.app(s4, s), t);
  return {v, A.in_sep(v) && A.leq(v, A.lolli(a, c))};
}

}  // namespace pwfcalc

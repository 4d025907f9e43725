#include "pwfcalc/process.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>

namespace pwfcalc {

struct Process::Node {
  Kind kind;
  Process left, right;
  Name subject = 0;
  Polarity pol = Polarity::up;
  std::vector<Name> bound;
  Process body;
  Name binder = 0;
};

Process::Process() = default;

Process Process::par(Process l, Process r) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::par;
  n->left = std::move(l);
  n->right = std::move(r);
  return Process(std::move(n));
}

Process Process::par_all(const std::vector<Process>& ps) {
  if (ps.empty()) return nil();
  Process acc = ps.front();
  for (std::size_t i = 1; i < ps.size(); ++i) acc = par(acc, ps[i]);
  return acc;
}

Process Process::act(Name subject, Polarity pol, std::vector<Name> bound, Process body) {
  std::vector<Name> sorted = bound;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorKind::invalid_argument, "bound vector has a repeated name");
  auto n = std::make_shared<Node>();
  n->kind = Kind::act;
  n->subject = subject;
  n->pol = pol;
  n->bound = std::move(bound);
  n->body = std::move(body);
  return Process(std::move(n));
}

Process Process::nu(Name x, Process body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::nu;
  n->binder = x;
  n->body = std::move(body);
  return Process(std::move(n));
}

Process Process::nu_all(const std::vector<Name>& xs, Process body) {
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) body = nu(*it, std::move(body));
  return body;
}

Process::Kind Process::kind() const { return n_ ? n_->kind : Kind::nil; }
const Process& Process::left() const { return n_->left; }
const Process& Process::right() const { return n_->right; }
Name Process::subject() const { return n_->subject; }
Polarity Process::polarity() const { return n_->pol; }
const std::vector<Name>& Process::bound() const { return n_->bound; }
const Process& Process::body() const { return n_->body; }
Name Process::binder() const { return n_->binder; }

std::set<Name> free_names(const Process& p) {
  switch (p.kind()) {
    case Process::Kind::nil: return {};
    case Process::Kind::par: {
      auto l = free_names(p.left());
      auto r = free_names(p.right());
      l.insert(r.begin(), r.end());
      return l;
    }
    case Process::Kind::act: {
      auto b = free_names(p.body());
      for (Name x : p.bound()) b.erase(x);
      b.insert(p.subject());
      return b;
    }
    case Process::Kind::nu: {
      auto b = free_names(p.body());
      b.erase(p.binder());
      return b;
    }
  }
  return {};
}

std::set<Name> all_names(const Process& p) {
  switch (p.kind()) {
    case Process::Kind::nil: return {};
    case Process::Kind::par: {
      auto l = all_names(p.left());
      auto r = all_names(p.right());
      l.insert(r.begin(), r.end());
      return l;
    }
    case Process::Kind::act: {
      auto b = all_names(p.body());
      b.insert(p.bound().begin(), p.bound().end());
      b.insert(p.subject());
      return b;
    }
    case Process::Kind::nu: {
      auto b = all_names(p.body());
      b.insert(p.binder());
      return b;
    }
  }
  return {};
}

std::size_t action_count(const Process& p) {
  switch (p.kind()) {
    case Process::Kind::nil: return 0;
    case Process::Kind::par: return action_count(p.left()) + action_count(p.right());
    case Process::Kind::act: return 1 + action_count(p.body());
    case Process::Kind::nu: return action_count(p.body());
  }
  return 0;
}

namespace {

// Substitution under binders xs: sigma away from xs, with the renamings ren on top.
Substitution under_binders(const Substitution& sigma, const std::vector<Name>& xs, const std::map<Name, Name>& ren) {
  Substitution inner = restrict_away(sigma, NameSet::of(std::set<Name>(xs.begin(), xs.end())));
  if (ren.empty()) return inner;
  std::map<Name, Name> m = inner.finite();
  for (const auto& [k, v] : ren) m[k] = v;
  return Substitution(std::move(m), inner.word_remaps());
}

// Renames binders of xs that would capture an image name; returns the renaming.
std::map<Name, Name> capture_renaming(const std::vector<Name>& xs, const std::set<Name>& fn_outer,
                                      const std::set<Name>& fn_body, const Substitution& sigma,
                                      std::vector<Name>& new_xs) {
  std::set<Name> image;
  for (Name y : fn_outer) image.insert(sigma(y));
  std::set<Name> avoid = fn_outer;
  avoid.insert(image.begin(), image.end());
  avoid.insert(fn_body.begin(), fn_body.end());
  avoid.insert(xs.begin(), xs.end());
  std::map<Name, Name> ren;
  new_xs.clear();
  for (Name x : xs) {
    if (!image.count(x)) {
      new_xs.push_back(x);
      continue;
    }
    Name t = 0;
    while (avoid.count(t)) ++t;
    avoid.insert(t);
    ren[x] = t;
    new_xs.push_back(t);
  }
  return ren;
}

}  // namespace

Process substitute(const Process& p, const Substitution& sigma) {
  switch (p.kind()) {
    case Process::Kind::nil: return p;
    case Process::Kind::par: return Process::par(substitute(p.left(), sigma), substitute(p.right(), sigma));
    case Process::Kind::act: {
      std::vector<Name> xs;
      auto ren = capture_renaming(p.bound(), free_names(p), free_names(p.body()), sigma, xs);
      return Process::act(sigma(p.subject()), p.polarity(), xs,
                          substitute(p.body(), under_binders(sigma, p.bound(), ren)));
    }
    case Process::Kind::nu: {
      std::vector<Name> xs;
      auto ren = capture_renaming({p.binder()}, free_names(p), free_names(p.body()), sigma, xs);
      return Process::nu(xs[0], substitute(p.body(), under_binders(sigma, {p.binder()}, ren)));
    }
  }
  return p;
}

Process map_names(const Process& p, const std::function<Name(Name)>& f) {
  switch (p.kind()) {
    case Process::Kind::nil: return p;
    case Process::Kind::par: return Process::par(map_names(p.left(), f), map_names(p.right(), f));
    case Process::Kind::act: {
      std::vector<Name> xs;
      for (Name x : p.bound()) xs.push_back(f(x));
      return Process::act(f(p.subject()), p.polarity(), std::move(xs), map_names(p.body(), f));
    }
    case Process::Kind::nu: return Process::nu(f(p.binder()), map_names(p.body(), f));
  }
  return p;
}

Process tidy(const Process& p) {
  switch (p.kind()) {
    case Process::Kind::nil: return p;
    case Process::Kind::par: {
      Process l = tidy(p.left()), r = tidy(p.right());
      if (l.is_nil()) return r;
      if (r.is_nil()) return l;
      return Process::par(l, r);
    }
    case Process::Kind::act: return Process::act(p.subject(), p.polarity(), p.bound(), tidy(p.body()));
    case Process::Kind::nu: {
      Process b = tidy(p.body());
      if (!free_names(b).count(p.binder())) return b;
      return Process::nu(p.binder(), b);
    }
  }
  return p;
}

namespace {

// Placeholder names for restricted names while normalising; far above any name in use.
constexpr Name kTempBase = Name{1} << 62;

Process rename_free(const Process& p, Name x, Name t) {
  switch (p.kind()) {
    case Process::Kind::nil: return p;
    case Process::Kind::par: return Process::par(rename_free(p.left(), x, t), rename_free(p.right(), x, t));
    case Process::Kind::act: {
      Name s = p.subject() == x ? t : p.subject();
      bool shadowed = std::find(p.bound().begin(), p.bound().end(), x) != p.bound().end();
      return Process::act(s, p.polarity(), p.bound(), shadowed ? p.body() : rename_free(p.body(), x, t));
    }
    case Process::Kind::nu:
      if (p.binder() == x) return p;
      return Process::nu(p.binder(), rename_free(p.body(), x, t));
  }
  return p;
}

struct CTerm;

struct CAct {
  Name subject;
  Polarity pol;
  std::vector<Name> bound;
  std::shared_ptr<CTerm> body;
};

struct CBlock {
  std::vector<Name> names;
  std::vector<CAct> acts;
};

// Normal form: a multiset of free actions and of restriction blocks. Each block is connected
// through its names and every name is used.
struct CTerm {
  std::vector<CAct> free;
  std::vector<CBlock> blocks;
};

void collect(const Process& p, std::vector<Name>& nus, std::vector<Process>& acts, Name& counter) {
  switch (p.kind()) {
    case Process::Kind::nil: return;
    case Process::Kind::par:
      collect(p.left(), nus, acts, counter);
      collect(p.right(), nus, acts, counter);
      return;
    case Process::Kind::act: acts.push_back(p); return;
    case Process::Kind::nu: {
      Name t = kTempBase + counter++;
      nus.push_back(t);
      collect(rename_free(p.body(), p.binder(), t), nus, acts, counter);
      return;
    }
  }
}

CTerm build(const Process& p, Name& counter);

CAct build_act(const Process& a, Name& counter) {
  return CAct{a.subject(), a.polarity(), a.bound(), std::make_shared<CTerm>(build(a.body(), counter))};
}

CTerm build(const Process& p, Name& counter) {
  std::vector<Name> nus;
  std::vector<Process> acts;
  collect(p, nus, acts, counter);
  std::set<Name> restricted(nus.begin(), nus.end());
  std::vector<std::set<Name>> uses(acts.size());
  for (std::size_t i = 0; i < acts.size(); ++i)
    for (Name x : free_names(acts[i]))
      if (restricted.count(x)) uses[i].insert(x);

  std::vector<std::size_t> parent(acts.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  std::map<Name, std::size_t> owner;
  for (std::size_t i = 0; i < acts.size(); ++i)
    for (Name x : uses[i]) {
      auto [it, fresh] = owner.emplace(x, i);
      if (!fresh) parent[find(i)] = find(it->second);
    }

  CTerm t;
  std::map<std::size_t, CBlock> blocks;
  for (std::size_t i = 0; i < acts.size(); ++i) {
    CAct c = build_act(acts[i], counter);
    if (uses[i].empty()) {
      t.free.push_back(std::move(c));
      continue;
    }
    CBlock& b = blocks[find(i)];
    b.names.insert(b.names.end(), uses[i].begin(), uses[i].end());
    b.acts.push_back(std::move(c));
  }
  for (auto& [root, b] : blocks) {
    (void)root;
    std::sort(b.names.begin(), b.names.end());
    b.names.erase(std::unique(b.names.begin(), b.names.end()), b.names.end());
    t.blocks.push_back(std::move(b));
  }
  return t;
}

using Env = std::map<Name, std::size_t>;

std::string label(Name x, const Env& env) {
  auto it = env.find(x);
  return it != env.end() ? "b" + std::to_string(it->second) : "f" + std::to_string(x);
}

std::string key_term(const CTerm& t, const Env& env, std::size_t level);

std::string key_act(const CAct& a, Env env, std::size_t level) {
  std::string s = label(a.subject, env) + (a.pol == Polarity::up ? "!" : "?") + std::to_string(a.bound.size());
  for (std::size_t i = 0; i < a.bound.size(); ++i) env[a.bound[i]] = level + i;
  return s + key_term(*a.body, env, level + a.bound.size());
}

// Key of a block minimised over orderings of its names; the minimising order is returned.
std::pair<std::string, std::vector<Name>> key_block(const CBlock& b, const Env& env, std::size_t level) {
  std::vector<Name> perm = b.names;
  std::string best;
  std::vector<Name> best_perm;
  do {
    Env e = env;
    for (std::size_t i = 0; i < perm.size(); ++i) e[perm[i]] = level + i;
    std::vector<std::string> keys;
    for (const auto& a : b.acts) keys.push_back(key_act(a, e, level + perm.size()));
    std::sort(keys.begin(), keys.end());
    std::string s = "N" + std::to_string(perm.size()) + "{";
    for (const auto& k : keys) s += k + ";";
    s += "}";
    if (best_perm.empty() || s < best) {
      best = std::move(s);
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {best, best_perm};
}

std::string key_term(const CTerm& t, const Env& env, std::size_t level) {
  std::vector<std::string> keys;
  for (const auto& a : t.free) keys.push_back(key_act(a, env, level));
  for (const auto& b : t.blocks) keys.push_back(key_block(b, env, level).first);
  std::sort(keys.begin(), keys.end());
  std::string s = "[";
  for (const auto& k : keys) s += k + ";";
  return s + "]";
}

// Bound names of the canonical output: level l gets the l-th natural outside the free names.
class Pool {
public:
  explicit Pool(std::set<Name> avoid) : avoid_(std::move(avoid)) {}
  Name operator()(std::size_t level) {
    while (names_.size() <= level) {
      while (avoid_.count(next_)) ++next_;
      names_.push_back(next_++);
    }
    return names_[level];
  }

private:
  std::set<Name> avoid_;
  std::vector<Name> names_;
  Name next_ = 0;
};

Process emit_term(const CTerm& t, const Env& env, std::size_t level, Pool& pool);

Process emit_act(const CAct& a, Env env, std::size_t level, Pool& pool) {
  auto name_of = [&](Name x) {
    auto it = env.find(x);
    return it != env.end() ? pool(it->second) : x;
  };
  Name subj = name_of(a.subject);
  std::vector<Name> xs;
  for (std::size_t i = 0; i < a.bound.size(); ++i) {
    env[a.bound[i]] = level + i;
    xs.push_back(pool(level + i));
  }
  return Process::act(subj, a.pol, xs, emit_term(*a.body, env, level + a.bound.size(), pool));
}

Process emit_term(const CTerm& t, const Env& env, std::size_t level, Pool& pool) {
  std::vector<std::pair<std::string, Process>> items;
  for (const auto& a : t.free) items.emplace_back(key_act(a, env, level), emit_act(a, env, level, pool));
  for (const auto& b : t.blocks) {
    auto [key, order] = key_block(b, env, level);
    Env e = env;
    std::vector<Name> names;
    for (std::size_t i = 0; i < order.size(); ++i) {
      e[order[i]] = level + i;
      names.push_back(pool(level + i));
    }
    std::vector<std::pair<std::string, Process>> acts;
    for (const auto& a : b.acts)
      acts.emplace_back(key_act(a, e, level + order.size()), emit_act(a, e, level + order.size(), pool));
    std::sort(acts.begin(), acts.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<Process> ps;
    for (auto& [k, p] : acts) ps.push_back(p);
    items.emplace_back(key, Process::nu_all(names, Process::par_all(ps)));
  }
  std::stable_sort(items.begin(), items.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<Process> ps;
  for (auto& [k, p] : items) ps.push_back(p);
  return Process::par_all(ps);
}

}  // namespace

namespace {

Process freshen(const Process& p, const std::function<bool(Name)>& ok, std::set<Name>& used) {
  auto pick = [&]() {
    Name t = 0;
    while (used.count(t) || !ok(t)) ++t;
    used.insert(t);
    return t;
  };
  switch (p.kind()) {
    case Process::Kind::nil: return p;
    case Process::Kind::par: return Process::par(freshen(p.left(), ok, used), freshen(p.right(), ok, used));
    case Process::Kind::act: {
      Process body = p.body();
      std::vector<Name> xs;
      for (Name x : p.bound()) {
        if (ok(x)) {
          xs.push_back(x);
          continue;
        }
        Name t = pick();
        body = rename_free(body, x, t);
        xs.push_back(t);
      }
      return Process::act(p.subject(), p.polarity(), xs, freshen(body, ok, used));
    }
    case Process::Kind::nu: {
      if (ok(p.binder())) return Process::nu(p.binder(), freshen(p.body(), ok, used));
      Name t = pick();
      return Process::nu(t, freshen(rename_free(p.body(), p.binder(), t), ok, used));
    }
  }
  return p;
}

}  // namespace

Process freshen_bound(const Process& p, const std::function<bool(Name)>& acceptable) {
  std::set<Name> used = all_names(p);
  return freshen(p, acceptable, used);
}

Process canonical(const Process& p) {
  Name counter = 0;
  CTerm t = build(p, counter);
  Pool pool(free_names(p));
  return emit_term(t, {}, 0, pool);
}

std::string canonical_key(const Process& p) {
  Name counter = 0;
  return key_term(build(p, counter), {}, 0);
}

bool struct_eq(const Process& p, const Process& q) { return canonical_key(p) == canonical_key(q); }

namespace {

std::string print(const Process& p);

std::string atom(const Process& p) {
  return p.kind() == Process::Kind::par ? "(" + print(p) + ")" : print(p);
}

std::string print(const Process& p) {
  switch (p.kind()) {
    case Process::Kind::nil: return "1";
    case Process::Kind::par: {
      std::string r = print(p.right());
      if (p.right().kind() == Process::Kind::par) r = "(" + r + ")";
      return print(p.left()) + " | " + r;
    }
    case Process::Kind::act: {
      std::string s = std::to_string(p.subject()) + (p.polarity() == Polarity::up ? "!(" : "?(");
      for (std::size_t i = 0; i < p.bound().size(); ++i) s += (i ? "," : "") + std::to_string(p.bound()[i]);
      s += ")";
      if (!p.body().is_nil()) s += "." + atom(p.body());
      return s;
    }
    case Process::Kind::nu: {
      std::string s = "new";
      const Process* q = &p;
      while (q->kind() == Process::Kind::nu) {
        s += " " + std::to_string(q->binder());
        q = &q->body();
      }
      return s + ". " + atom(*q);
    }
  }
  return "1";
}

Process parse_par(Cursor& c);

Process parse_unary(Cursor& c) {
  if (c.accept("(")) {
    Process p = parse_par(c);
    c.expect(")");
    return p;
  }
  if (c.accept_keyword("new")) {
    std::vector<Name> xs;
    while (c.peek_digit()) xs.push_back(c.natural());
    if (xs.empty()) c.fail("expected a name after 'new'");
    c.expect(".");
    return Process::nu_all(xs, parse_unary(c));
  }
  if (!c.peek_digit()) c.fail("expected a process");
  c.skip_ws();
  std::size_t start = c.pos();
  Name u = parse_name(c);
  bool plain_one = u == 1 && c.pos() == start + 1;
  Polarity pol;
  if (c.accept("!")) {
    pol = Polarity::up;
  } else if (c.accept("?")) {
    pol = Polarity::down;
  } else {
    if (plain_one) return Process::nil();
    c.fail("expected '!' or '?'");
  }
  c.expect("(");
  std::vector<Name> xs;
  if (!c.starts_with(")")) {
    do xs.push_back(parse_name(c));
    while (c.accept(","));
  }
  c.expect(")");
  std::vector<Name> sorted = xs;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) c.fail("repeated name in a bound vector");
  Process body;
  if (c.accept(".")) body = parse_unary(c);
  return Process::act(u, pol, std::move(xs), std::move(body));
}

Process parse_par(Cursor& c) {
  Process p = parse_unary(c);
  while (c.accept("|")) p = Process::par(p, parse_unary(c));
  return p;
}

}  // namespace

std::string to_string(const Process& p) { return print(p); }

Process parse_process(Cursor& c) { return parse_par(c); }

Process parse_process(std::string_view text) {
  Cursor c(text);
  Process p = parse_par(c);
  c.expect_end();
  return p;
}

}  // namespace pwfcalc

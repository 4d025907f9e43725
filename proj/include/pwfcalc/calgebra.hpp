#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pwfcalc/names.hpp"
#include "pwfcalc/report.hpp"

namespace pwfcalc {

using Elem = std::size_t;
using Table = std::vector<std::vector<Elem>>;

// A finite candidate conjunctive structure; elements are indices into carrier.
struct FinModel {
  std::vector<std::string> carrier;
  std::vector<std::vector<bool>> leq;
  std::optional<Table> join_table;
  Table tensor;
  std::vector<Elem> perp;
  Elem unit = 0;
  std::optional<Table> par;
  std::vector<Name> window;
  std::map<std::pair<Name, Name>, Elem> m_table;
  std::vector<bool> separator;

  std::size_t size() const { return carrier.size(); }
  Elem index(const std::string& name) const;
  const std::string& name(Elem e) const { return carrier.at(e); }
};

FinModel parse_model(std::string_view text);
FinModel load_model(const std::string& path);

// Lattice and connective operations of a model whose order is a lattice.
class Algebra {
public:
  // Throws invalid_argument naming a pair without least upper bound.
  explicit Algebra(const FinModel& m);

  const FinModel& model() const { return m_; }
  std::size_t size() const { return m_.size(); }
  bool leq(Elem a, Elem b) const { return m_.leq[a][b]; }
  Elem bottom() const { return bottom_; }
  Elem top() const { return top_; }
  Elem join(Elem a, Elem b) const { return join_[a][b]; }
  Elem meet(Elem a, Elem b) const { return meet_[a][b]; }
  Elem join_all(const std::vector<Elem>& xs) const;
  Elem meet_all(const std::vector<Elem>& xs) const;

  Elem tensor(Elem a, Elem b) const { return m_.tensor[a][b]; }
  Elem perp(Elem a) const { return m_.perp[a]; }
  Elem unit() const { return m_.unit; }
  Elem parr(Elem a, Elem b) const { return perp(tensor(perp(a), perp(b))); }
  Elem lolli(Elem a, Elem b) const { return perp(tensor(a, perp(b))); }
  // a * b: least c with a <= b -o c.
  Elem app(Elem a, Elem b) const;
  bool has_par() const { return m_.par.has_value(); }
  Elem par(Elem a, Elem b) const { return (*m_.par)[a][b]; }
  // b |> c: join of all x with x | b <= c.
  Elem tri(Elem b, Elem c) const;
  bool in_sep(Elem a) const { return m_.separator[a]; }

  // S3..S7 in order.
  std::vector<Elem> combinators() const;

  std::optional<Elem> m(Name a, Name x) const;

private:
  FinModel m_;
  Table join_, meet_;
  Elem bottom_ = 0, top_ = 0;
};

Report check_cs(const FinModel& m);
Report check_ca(const FinModel& m);
Report check_cpa(const FinModel& m);
Report check_ccpa(const FinModel& m);
Report check_derived_props(const FinModel& m);

struct HyValues {
  std::string label;
  std::vector<Name> params;
  Elem value;
};
// Honda-Yoshida combinators by adjunction, meets over the window; nullopt when the model has
// no parallel composition or no M table covering the window.
std::optional<std::vector<HyValues>> hy_combinators(const Algebra& a);

// t . s = S4 * s * t for s in Hom(a,b), t in Hom(b,c); in_hom reports membership in Hom(a,c).
struct HomResult {
  Elem value;
  bool in_hom;
};
HomResult hom_compose(const FinModel& m, Elem s, Elem t, Elem a, Elem b, Elem c);

}  // namespace pwfcalc

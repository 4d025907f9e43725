#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pwfcalc/calgebra.hpp"
#include "pwfcalc/pwf.hpp"
#include "pwfcalc/report.hpp"
#include "pwfcalc/text.hpp"

namespace pwfcalc {

class Formula {
public:
  enum class Kind { one, var, perp, tensor, join, exists };

  static Formula one();
  static Formula var(std::string name);
  static Formula perp(Formula a);
  static Formula tensor(Formula a, Formula b);
  static Formula join(Formula a, Formula b);
  static Formula exists(std::string x, Formula body);

  Kind kind() const { return n_->kind; }
  const std::string& name() const { return n_->name; }
  const Formula& left() const { return n_->kids.at(0); }
  const Formula& right() const { return n_->kids.at(1); }
  const Formula& body() const { return n_->kids.at(0); }

private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<Formula> kids;
  };
  explicit Formula(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

// Equality up to renaming of exists-bound variables.
bool operator==(const Formula& a, const Formula& b);
std::set<std::string> free_vars(const Formula& f);
// Capture-avoiding a{x := b}.
Formula substitute(const Formula& a, const std::string& x, const Formula& b);
std::string to_string(const Formula& f);
Formula parse_formula(Cursor& c);
Formula parse_formula(std::string_view text);

using Sequent = std::vector<Formula>;
std::string to_string(const Sequent& s);

class Proof {
public:
  enum class Rule { ax, ex, sub, cut, one, tensor, exists };

  static Proof ax(Formula a);
  static Proof ex(std::vector<std::size_t> perm, Proof p);
  static Proof sub(Proof p, Formula b);
  static Proof cut(Proof p, Proof q, Formula a);
  static Proof one();
  static Proof tensor(Proof p, Proof q);
  static Proof exists(Proof p, std::string x, Formula a, Formula b);

  Rule rule() const { return n_->rule; }
  const std::vector<Proof>& premises() const { return n_->premises; }
  const std::vector<Formula>& formulas() const { return n_->formulas; }
  const std::vector<std::size_t>& perm() const { return n_->perm; }
  const std::string& var() const { return n_->var; }

private:
  struct Node {
    Rule rule;
    std::vector<Proof> premises;
    std::vector<Formula> formulas;
    std::vector<std::size_t> perm;  // 1-based
    std::string var;
  };
  explicit Proof(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

const char* to_string(Proof::Rule r);
std::string to_string(const Proof& p);
Proof parse_proof(Cursor& c);
Proof parse_proof(std::string_view text);
Proof load_proof(const std::string& path);

// Conclusion of a well-formed proof; throws rule_mismatch naming the node path otherwise.
Sequent check_proof(const Proof& p);

using Assignment = std::map<std::string, Elem>;
Elem interpret(const Formula& f, const Algebra& a, const Assignment& assign);
// Right fold of parr; the empty sequent is read as 1^.
Elem interpret(const Sequent& s, const Algebra& a, const Assignment& assign);

struct SoundnessOptions {
  std::size_t exhaustive_limit = 4096;
  std::size_t samples = 512;
};
// Every node's conclusion is interpreted into the separator under every assignment.
Report check_soundness(const Proof& p, const FinModel& m, const SoundnessOptions& opts = {});

class RealizerExpr {
public:
  enum class Kind { constant, unit, star1, par };

  static RealizerExpr constant(std::string label);
  static RealizerExpr unit();
  static RealizerExpr star1(RealizerExpr a, RealizerExpr b);
  static RealizerExpr par(RealizerExpr a, RealizerExpr b);

  Kind kind() const { return n_->kind; }
  const std::string& label() const { return n_->label; }
  const RealizerExpr& left() const { return n_->kids.at(0); }
  const RealizerExpr& right() const { return n_->kids.at(1); }

private:
  struct Node {
    Kind kind;
    std::string label;
    std::vector<RealizerExpr> kids;
  };
  explicit RealizerExpr(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

std::string to_string(const RealizerExpr& e);
RealizerExpr extract_realizer(const Proof& p);
Pwf evaluate(const RealizerExpr& e);

}  // namespace pwfcalc

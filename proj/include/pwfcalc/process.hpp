#pragma once

#include <functional>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "pwfcalc/names.hpp"
#include "pwfcalc/subst.hpp"

namespace pwfcalc {

enum class Polarity : std::uint8_t { up, down };

inline Polarity opposite(Polarity p) { return p == Polarity::up ? Polarity::down : Polarity::up; }

// Immutable pi-term; the tree is shared between copies.
class Process {
public:
  enum class Kind : std::uint8_t { nil, par, act, nu };

  Process();
  static Process nil() { return {}; }
  static Process par(Process l, Process r);
  static Process par_all(const std::vector<Process>& ps);
  static Process act(Name subject, Polarity pol, std::vector<Name> bound, Process body = {});
  static Process nu(Name x, Process body);
  static Process nu_all(const std::vector<Name>& xs, Process body);

  Kind kind() const;
  const Process& left() const;
  const Process& right() const;
  Name subject() const;
  Polarity polarity() const;
  const std::vector<Name>& bound() const;
  const Process& body() const;
  Name binder() const;

  bool is_nil() const { return kind() == Kind::nil; }

private:
  struct Node;
  explicit Process(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

std::set<Name> free_names(const Process& p);
// Every name occurring in p, free or bound.
std::set<Name> all_names(const Process& p);
std::size_t action_count(const Process& p);

Process substitute(const Process& p, const Substitution& sigma);
// Applies f to every name occurrence, binders included; f must be injective on all_names(p).
Process map_names(const Process& p, const std::function<Name(Name)>& f);

// Renames every binder that fails `acceptable` to the least acceptable name not occurring in p.
Process freshen_bound(const Process& p, const std::function<bool(Name)>& acceptable);

// Drops 1-units of | and vacuous binders; no renaming.
Process tidy(const Process& p);
Process canonical(const Process& p);
// Alpha-invariant key of the structural congruence class; equal keys iff congruent.
std::string canonical_key(const Process& p);
bool struct_eq(const Process& p, const Process& q);

std::string to_string(const Process& p);
Process parse_process(Cursor& c);
Process parse_process(std::string_view text);

}  // namespace pwfcalc

#include "pwfcalc/hy_encodings.hpp"

#include <algorithm>

#include "pwfcalc/reduction.hpp"

namespace pwfcalc {

const std::vector<std::string>& hy_encodable_labels() {
  static const std::vector<std::string> labels{"M", "K", "F", "D"};
  return labels;
}

const std::vector<std::string>& hy_unencodable_labels() {
  static const std::vector<std::string> labels{"Bl", "Br", "S"};
  return labels;
}

const std::string& hy_non_encodability_finding() {
  static const std::string finding =
      "not encodable in the fragment as defined: the received name must stay free in the continuation, "
      "but communication closes it under new and the prefix guard forbids fusing a bound name";
  return finding;
}

namespace {

std::size_t arity(const std::string& label) {
  if (label == "K") return 1;
  if (label == "D") return 3;
  return 2;
}

// Binder names above every parameter, so bodies never capture a parameter.
Name fresh(const std::vector<Name>& params, Name k) {
  Name top = params.empty() ? 0 : *std::max_element(params.begin(), params.end()) + 1;
  return top + k;
}

Pwf out(Name a, Name x, const Pwf& body) { return prefix(a, Polarity::up, {x}, body); }
Pwf in(Name a, Name x, const Pwf& body) { return prefix(a, Polarity::down, {x}, body); }

}  // namespace

HyCandidate encode(const std::string& label, const std::vector<Name>& params) {
  if (std::find(hy_unencodable_labels().begin(), hy_unencodable_labels().end(), label) !=
      hy_unencodable_labels().end())
    throw Error(ErrorKind::not_representable, label + ": " + hy_non_encodability_finding());
  if (std::find(hy_encodable_labels().begin(), hy_encodable_labels().end(), label) == hy_encodable_labels().end())
    throw Error(ErrorKind::invalid_argument, "unknown combinator '" + label + "'");
  if (params.size() != arity(label))
    throw Error(ErrorKind::invalid_argument,
                label + " takes " + std::to_string(arity(label)) + " names, got " + std::to_string(params.size()));
  const auto& p = params;
  Pwf body = unit();
  if (label == "M") body = out(p[0], p[1], unit());
  if (label == "K") body = in(p[0], fresh(p, 0), unit());
  if (label == "F") body = in(p[0], fresh(p, 0), out(p[1], fresh(p, 1), unit()));
  if (label == "D")
    body = in(p[0], fresh(p, 0), par(out(p[1], fresh(p, 1), unit()), out(p[2], fresh(p, 2), unit())));
  return {label, params, body};
}

Report check_hy_reductions(std::size_t bound) {
  Report r;
  r.title = "Honda-Yoshida reductions";
  r.notes.push_back("step bound " + std::to_string(bound));
  const Name a = 0, b = 1, c = 2, x = 3;
  Pwf m = encode("M", {a, x}).body;
  auto test = [&](const std::string& name, const Pwf& start, const Pwf& target) {
    bool ok = reduces_within(start, target, bound);
    std::string witness;
    if (!ok) {
      witness = to_string(start) + " does not reach " + to_string(target);
    }
    r.add(name, ok, witness);
  };
  test("K(a) | M(a,x) reduces to 1", par(encode("K", {a}).body, m), unit());
  test("F(a,b) | M(a,x) reduces to M(b,.)", par(encode("F", {a, b}).body, m), encode("M", {b, x}).body);
  test("D(a,b,c) | M(a,x) reduces to M(b,.) | M(c,.)", par(encode("D", {a, b, c}).body, m),
       par(encode("M", {b, x}).body, encode("M", {c, x}).body));
  for (const auto& l : hy_unencodable_labels()) r.notes.push_back(l + ": " + hy_non_encodability_finding());
  return r;
}

}  // namespace pwfcalc

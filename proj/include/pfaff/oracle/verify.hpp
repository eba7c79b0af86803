#pragma once

// End-to-end oracle run: generators -> reduced Groebner basis -> initial
// ideal -> Hilbert numerator -> quotient invariants, compared against the
// ladder-core height and the biliaison engine.

#include <string>
#include <vector>

#include "pfaff/engine.hpp"
#include "pfaff/formulas.hpp"
#include "pfaff/ladder.hpp"
#include "pfaff/oracle/groebner.hpp"
#include "pfaff/oracle/hilbert.hpp"
#include "pfaff/oracle/pfaffian.hpp"
#include "pfaff/report.hpp"

namespace pfaff::oracle {

struct VerifyOptions {
  GeneratorOptions generators;
  GroebnerOptions groebner;
  bool keep_basis = false;
};

struct FieldCheck {
  std::string name;
  Json expected;
  Json actual;
  bool pass = false;
};

struct VerifyReport {
  LadderIdealSpec spec;
  std::vector<FieldCheck> fields;
  QuotientInvariants oracle;
  IntPoly numerator;
  std::vector<Polynomial> basis;  // filled when keep_basis is set
  std::size_t generator_count = 0;
  std::size_t basis_size = 0;
  GroebnerStats stats;

  bool all_pass() const {
    for (const auto& f : fields)
      if (!f.pass) return false;
    return !fields.empty();
  }

  const FieldCheck* field(std::string_view name) const {
    for (const auto& f : fields)
      if (f.name == name) return &f;
    return nullptr;
  }

  Json to_json() const {
    Json j;
    j["spec"] = spec_to_json(spec);
    Json checks = Json::object();
    for (const auto& f : fields) checks[f.name] = {{"expected", f.expected}, {"actual", f.actual}, {"pass", f.pass}};
    j["fields"] = checks;
    j["numerator"] = Json(numerator.coeffs);
    j["generators"] = generator_count;
    j["basis_size"] = basis_size;
    j["pass"] = all_pass();
    return j;
  }

  /// One basis polynomial per line.
  std::string basis_text() const {
    std::string s;
    for (const auto& g : basis) s += to_string(g, spec.n()) + "\n";
    return s;
  }
};

inline VerifyReport verify(const LadderIdealSpec& spec, const VerifyOptions& opts = {}) {
  VerifyReport r;
  r.spec = spec;
  const LadderIdealSpec normal = normalize(spec);
  const int nvars = var_count(spec.n());

  std::vector<Polynomial> gens = generators(normal, opts.generators);
  r.generator_count = gens.size();
  std::vector<Polynomial> basis = buchberger(gens, opts.groebner, &r.stats);
  r.basis_size = basis.size();
  r.numerator = hilbert_numerator(MonomialIdeal::initial_ideal(basis), nvars);
  r.oracle = quotient_invariants(r.numerator, nvars);
  if (opts.keep_basis) r.basis = std::move(basis);

  const int expected_height = height(normal);
  const BigInt expected_e = mult_generic(normal);
  const HVector expected_h = hvec_generic(normal);
  const int expected_reg = closed_regularity(normal).value_or(reg_from_hvector(expected_h));

  r.fields.push_back({"height", expected_height, r.oracle.height, expected_height == r.oracle.height});
  r.fields.push_back({"multiplicity", expected_e.get_str(), r.oracle.multiplicity.get_str(),
                      expected_e == r.oracle.multiplicity});
  r.fields.push_back({"hvector", hvector_to_json(expected_h), hvector_to_json(r.oracle.hvector),
                      expected_h == r.oracle.hvector});
  r.fields.push_back({"regularity", expected_reg, r.oracle.reg_cm, expected_reg == r.oracle.reg_cm});
  return r;
}

}  // namespace pfaff::oracle

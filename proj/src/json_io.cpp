#include <affpow/errors.hpp>
#include <affpow/json_io.hpp>

namespace affpow::json {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

const json& array_field(const json& j, const char* key) {
  const json& a = field(j, key);
  if (!a.is_array()) bad(std::string("field '") + key + "' is not an array");
  return a;
}

unsigned unsigned_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0) bad(std::string("field '") + key + "' is not a count");
  return v.get<unsigned>();
}

std::vector<Rational> rationals(const json& a) {
  std::vector<Rational> out;
  for (const auto& x : a) out.push_back(rational_from_json(x));
  return out;
}

json rationals_to_json(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

}  // namespace

json to_json(const Rational& r) { return affpow::to_string(r); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  bad("expected a rational as string or integer, got " + j.dump());
}

json to_json(const UniPoly& f) { return json{{"coeffs", rationals_to_json(f.coeffs())}}; }

UniPoly unipoly_from_json(const json& j) { return UniPoly(rationals(array_field(j, "coeffs"))); }

json to_json(const Decomposition& d) {
  json terms = json::array();
  for (const auto& t : d.terms) {
    terms.push_back({{"coeff", to_json(t.coeff)}, {"node", to_json(t.node)}, {"exponent", t.exponent}});
  }
  return json{{"terms", terms}};
}

Decomposition decomposition_from_json(const json& j) {
  if (j.is_object() && !j.contains("terms")) {
    if (j.contains("decomposition")) return decomposition_from_json(j.at("decomposition"));
    if (j.contains("truth")) return decomposition_from_json(j.at("truth"));
  }
  std::vector<AffineTerm> terms;
  for (const auto& t : array_field(j, "terms")) {
    // Read into locals first: a throw halfway through a braced aggregate
    // leaks the members already built on some compilers.
    Rational coeff = rational_from_json(field(t, "coeff"));
    Rational node = rational_from_json(field(t, "node"));
    const unsigned exponent = unsigned_field(t, "exponent");
    terms.push_back({std::move(coeff), std::move(node), exponent});
  }
  return Decomposition::canonical(std::move(terms));
}

json to_json(const SDE& s) {
  json polys = json::array();
  for (const auto& p : s.coefficient_polys) polys.push_back(to_json(p));
  return json{{"order", s.order}, {"shift", s.shift}, {"coefficient_polys", polys}};
}

SDE sde_from_json(const json& j) {
  SDE s;
  s.order = unsigned_field(j, "order");
  s.shift = unsigned_field(j, "shift");
  for (const auto& p : array_field(j, "coefficient_polys")) s.coefficient_polys.push_back(unipoly_from_json(p));
  if (s.coefficient_polys.size() != s.order + 1) bad("an SDE of order k needs k + 1 coefficient polynomials");
  return s;
}

json to_json(const MultiPoly& f) {
  json terms = json::array();
  for (const auto& [exps, c] : f.terms()) terms.push_back({{"exps", exps}, {"coeff", to_json(c)}});
  return json{{"n", f.n()}, {"terms", terms}};
}

MultiPoly multipoly_from_json(const json& j) {
  MultiPoly f(unsigned_field(j, "n"));
  for (const auto& t : array_field(j, "terms")) {
    const json& exps = array_field(t, "exps");
    Exponents e;
    for (const auto& x : exps) {
      if (!x.is_number_integer() || x.get<long long>() < 0) bad("exponent is not a count");
      e.push_back(x.get<unsigned>());
    }
    if (e.size() != f.n()) bad("exponent vector length differs from n");
    f.add_term(e, rational_from_json(field(t, "coeff")));
  }
  return f;
}

json to_json(const MultiDecomposition& d) {
  json terms = json::array();
  for (const auto& t : d.terms) {
    terms.push_back({{"coeff", to_json(t.coeff)},
                     {"constant", to_json(t.form.constant)},
                     {"coefficients", rationals_to_json(t.form.coefficients)},
                     {"exponent", t.exponent}});
  }
  return json{{"n", d.n}, {"terms", terms}};
}

MultiDecomposition multidecomposition_from_json(const json& j) {
  const std::size_t n = unsigned_field(j, "n");
  std::vector<MultiTerm> terms;
  for (const auto& t : array_field(j, "terms")) {
    Rational constant = rational_from_json(field(t, "constant"));
    std::vector<Rational> coefficients = rationals(array_field(t, "coefficients"));
    if (coefficients.size() != n) bad("form length differs from n");
    Rational coeff = rational_from_json(field(t, "coeff"));
    const unsigned exponent = unsigned_field(t, "exponent");
    terms.push_back({std::move(coeff), LinearForm{std::move(constant), std::move(coefficients)}, exponent});
  }
  try {
    return MultiDecomposition::canonical(n, std::move(terms));
  } catch (const Error& e) {
    bad(e.what());
  }
}

json to_json(const WaringResult& r) {
  json terms = json::array();
  for (const auto& t : r.terms) terms.push_back({{"coeff", to_json(t.coeff)}, {"node", to_json(t.node)}});
  return json{{"above_threshold", r.above_threshold},
              {"degree", r.degree},
              {"sde_order", r.sde_order},
              {"rank", r.terms.size()},
              {"terms", terms}};
}

json to_json(const SparsestResult& r) {
  json coeffs = json::array();
  for (const auto& [e, c] : r.coeffs) coeffs.push_back({{"exponent", e}, {"coeff", to_json(c)}});
  json out{{"above_threshold", r.above_threshold}, {"degree", r.degree}, {"sde_order", r.sde_order}};
  if (!r.above_threshold) {
    out["shift"] = to_json(r.shift);
    out["support"] = r.coeffs.size();
    out["coeffs"] = coeffs;
  }
  return out;
}

json to_json(const IterationStats& s) {
  return json{{"iteration", s.iteration},
              {"derivative_order", s.derivative_order},
              {"terms_recovered", s.terms_recovered},
              {"term_bits", s.term_bits},
              {"residual_bits", s.residual_bits}};
}

}  // namespace affpow::json

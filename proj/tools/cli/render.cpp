#include "render.hpp"

#include <sstream>

#include "unicyclo/error.hpp"

namespace unicyclo::cli {

namespace {

Json opt_bool(const std::optional<bool>& v) { return v ? Json(*v) : Json(nullptr); }

Json u64_list(const std::vector<std::uint64_t>& values) {
  Json out = Json::array();
  for (auto v : values) out.push_back(dec(v));
  return out;
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "n/a";
  return v.dump();
}

std::string flat_value(const Json& v) {
  if (!v.is_array()) return scalar_text(v);
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    if (v[i].is_array()) {
      for (std::size_t j = 0; j < v[i].size(); ++j) {
        if (j) s += ':';
        s += scalar_text(v[i][j]);
      }
    } else {
      s += scalar_text(v[i]);
    }
  }
  return s;
}

void flatten(const Json& node, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) flatten(value, prefix.empty() ? key : prefix + "." + key, out);
    return;
  }
  if (node.is_array() && !node.empty() && node.front().is_object()) {
    for (std::size_t i = 0; i < node.size(); ++i) flatten(node[i], prefix + "[" + std::to_string(i) + "]", out);
    return;
  }
  out.emplace_back(prefix, flat_value(node));
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "plain") return OutputFormat::Plain;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw InvalidArgument("unknown output format '" + name + "'");
}

Json integer_list(const std::vector<Integer>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v.str());
  return out;
}

Json sparse_coefficients(const poly::IntPolynomial& f) {
  Json out = Json::array();
  const auto c = f.coefficients();
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (!c[j].is_zero()) out.push_back(Json::array({dec(j), c[j].str()}));
  }
  return out;
}

Json polynomial_record(cyclo::PolyFamily family, std::uint64_t n, const poly::IntPolynomial& f) {
  const auto set = poly::coeff_set(f);
  return {
      {"family", std::string(cyclo::to_string(family))},
      {"n", dec(n)},
      {"degree", dec(f.degree())},
      {"height", poly::height(f).str()},
      {"coeff_set", integer_list({set.begin(), set.end()})},
      {"coefficients", sparse_coefficients(f)},
  };
}

Json coeff_record(const analysis::CoeffRecord& r) {
  return {{"m", dec(r.m)}, {"n", dec(r.n)}, {"degree", dec(r.degree)}, {"k", dec(r.k)}, {"value", r.value.str()}};
}

Json semigroup_record(const semigroup::NumericalSemigroup& s) {
  return {
      {"generators", u64_list(s.generators())},
      {"frobenius", dec(s.frobenius())},
      {"gaps", u64_list(s.gaps())},
      {"polynomial", sparse_coefficients(s.polynomial())},
  };
}

Json binary_identity_record(const semigroup::BinaryIdentityReport& r) {
  return {
      {"p", dec(r.p)},
      {"q", dec(r.q)},
      {"prime_powers", r.prime_powers},
      {"frobenius", dec(r.frobenius)},
      {"semigroup_polynomial", sparse_coefficients(r.semigroup_poly)},
      {"hilbert_quotient", r.hilbert_quotient},
      {"sylvester", r.sylvester},
      {"equals_unitary_cyclotomic", opt_bool(r.equals_unitary_cyclotomic)},
      {"equals_cyclotomic", opt_bool(r.equals_cyclotomic)},
      {"coefficient_rule", opt_bool(r.coefficient_rule)},
      {"inverse_closed_form", opt_bool(r.inverse_closed_form)},
  };
}

Json coefficient_set_record(const analysis::CoefficientSetReport& r) {
  return {
      {"blocks", u64_list(r.blocks)},
      {"n", dec(r.n)},
      {"coeff_set", integer_list(r.coeff_set)},
      {"min", r.min.str()},
      {"max", r.max.str()},
      {"height", r.height.str()},
      {"is_consecutive", r.is_consecutive},
      {"missing", integer_list(r.missing)},
  };
}

Json congruence_transfer_record(const analysis::CongruenceTransferReport& r) {
  return {
      {"p", dec(r.p)}, {"q", dec(r.q)}, {"r", dec(r.r)}, {"s", dec(r.s)}, {"sign", dec(r.sign)},
      {"set_r", integer_list(r.set_r)}, {"set_s", integer_list(r.set_s)}, {"holds", r.holds},
  };
}

Json height_jump_record(const analysis::HeightJumpReport& r) {
  return {
      {"p", dec(r.p)},
      {"q", dec(r.q)},
      {"s", dec(r.s)},
      {"r", dec(r.r)},
      {"height_pqs", r.height_s.str()},
      {"height_pqr", r.height_r.str()},
      {"lower_attained", r.lower_attained},
      {"upper_attained", r.upper_attained},
      {"holds", r.holds},
  };
}

Json kaplan_record(const analysis::KaplanReport& r) {
  Json instances = Json::array();
  for (const auto& i : r.instances) {
    instances.push_back({{"c", dec(i.c)},
                         {"n", dec(i.n)},
                         {"residue", dec(i.residue)},
                         {"height", i.height.str()},
                         {"flat", i.flat}});
  }
  return {{"pa", dec(r.pa)}, {"qb", dec(r.qb)}, {"r", dec(r.r)}, {"c_max", dec(r.c_max)},
          {"instances", instances}, {"holds", r.holds}};
}

Json psi_bound_record(const analysis::PsiBoundReport& r) {
  return {
      {"p", dec(r.p)},
      {"q", dec(r.q)},
      {"r", dec(r.r)},
      {"height", r.height.str()},
      {"bound", dec(r.bound)},
      {"height_within_bound", r.height_within_bound},
      {"bound_within_p_minus_1", r.bound_within_p_minus_1},
      {"factorization_identity", r.factorization_identity},
      {"convolution_identity", r.convolution_identity},
      {"holds", r.holds},
  };
}

Json witness_record(const witness::WitnessReport& r) {
  Json realized = Json::array();
  for (long v : r.realized()) realized.push_back(dec(v));
  return {
      {"plan",
       {{"m", dec(r.plan.m)},
        {"t", dec(r.plan.t)},
        {"n", dec(r.plan.n)},
        {"primes", u64_list(r.plan.primes)},
        {"q", dec(r.plan.q)},
        {"n1", dec(r.plan.n1.n())},
        {"n2", dec(r.plan.n2.n())}}},
      {"case", std::string(witness::to_string(r.case_tag))},
      {"mu_star_m", dec(r.mu_star_m)},
      {"q2", r.q2 ? Json(dec(*r.q2)) : Json(nullptr)},
      {"k1", dec(r.k1)},
      {"k2", dec(r.k2)},
      {"predicted_a1", dec(r.predicted_a1)},
      {"predicted_a2", dec(r.predicted_a2)},
      {"observed_a1", r.observed_a1.str()},
      {"observed_a2", r.observed_a2.str()},
      {"observed_c1", r.observed_c1.str()},
      {"observed_c2", r.observed_c2.str()},
      {"windows_agree", r.windows_agree},
      {"window_formula_holds", r.window_formula_holds},
      {"inverse_reduction_holds", r.inverse_reduction_holds},
      {"direct_phi_agrees", opt_bool(r.direct_phi_agrees)},
      {"direct_psi_agrees", opt_bool(r.direct_psi_agrees)},
      {"realized", realized},
      {"all_match", r.all_match},
  };
}

Json envelope(const std::string& command, Json inputs, Json results, bool ok) {
  return {{"command", command}, {"inputs", std::move(inputs)}, {"results", std::move(results)}, {"ok", ok}};
}

std::string render_json(const Json& doc) { return doc.dump(2) + "\n"; }

std::string render_plain(const Json& results) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(results, "", rows);
  std::ostringstream out;
  for (const auto& [k, v] : rows) out << k << ":" << (v.empty() ? "" : " ") << v << "\n";
  return out.str();
}

std::string render_csv(const Json& results) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(results, "", rows);
  std::ostringstream out;
  out << "key,value\n";
  for (const auto& [k, v] : rows) out << csv_field(k) << "," << csv_field(v) << "\n";
  return out.str();
}

}  // namespace unicyclo::cli

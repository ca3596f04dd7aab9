#include "cli.hpp"

#include <charconv>
#include <sstream>

#include <CLI11.hpp>

#include "render.hpp"
#include "unicyclo/error.hpp"

namespace unicyclo::cli {

namespace {

std::vector<std::uint64_t> parse_list(const std::string& text, const char* what) {
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    const std::string_view item(text.data() + pos, end - pos);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
      throw InvalidArgument(std::string("bad ") + what + " entry '" + std::string(item) + "'");
    }
    out.push_back(v);
    pos = end + 1;
  }
  return out;
}

const std::vector<std::uint64_t>& expect_arity(const std::vector<std::uint64_t>& params, std::size_t k,
                                               const std::string& name) {
  if (params.size() != k) {
    throw InvalidArgument("check " + name + " takes " + std::to_string(k) + " parameters, got " +
                          std::to_string(params.size()));
  }
  return params;
}

// What a command hands back to the dispatcher before rendering.
struct Outcome {
  Json inputs = Json::object();
  Json results = Json::object();
  bool ok = true;
  int code = kOk;
  std::string csv;    // command-specific CSV; empty means the generic key,value view
  std::string plain;  // same for plain
};

void emit(const std::string& command, const Outcome& o, OutputFormat format, std::ostream& out) {
  switch (format) {
    case OutputFormat::Json:
      out << render_json(envelope(command, o.inputs, o.results, o.ok));
      break;
    case OutputFormat::Csv:
      out << (o.csv.empty() ? render_csv(o.results) : o.csv);
      break;
    case OutputFormat::Plain:
      out << (o.plain.empty() ? render_plain(o.results) : o.plain);
      break;
  }
}

Outcome cmd_compute(const std::string& family_name, std::uint64_t n) {
  const auto family = cyclo::parse_family(family_name);
  if (n < 1) throw InvalidArgument("n must be at least 1");
  const auto f = cyclo::family_polynomial(family, n);
  Outcome o;
  o.inputs = {{"family", family_name}, {"n", dec(n)}};
  o.results = polynomial_record(family, n, *f);
  std::ostringstream csv;
  csv << "j,coefficient\n";
  const auto c = f->coefficients();
  for (std::size_t j = 0; j < c.size(); ++j) csv << j << "," << c[j] << "\n";
  o.csv = csv.str();
  return o;
}

Outcome cmd_search(const std::string& family_name, std::uint64_t max_m, std::uint64_t max_n, unsigned jobs,
                   std::ostream& err) {
  const auto family = cyclo::parse_family(family_name);
  if (max_m < 2) throw InvalidArgument("max-m must be at least 2");
  if (jobs < 1) throw InvalidArgument("jobs must be at least 1");
  analysis::SearchOptions opts;
  opts.family = family;
  opts.m_max = max_m;
  opts.n_max = max_n;
  opts.jobs = jobs;
  const auto outcome = analysis::search_minimal_n(opts);

  Outcome o;
  o.inputs = {{"family", family_name}, {"max_m", dec(max_m)}, {"max_n", dec(max_n)}};
  Json rows = Json::array();
  std::ostringstream csv;
  std::ostringstream plain;
  csv << "m,n,degree,k,value\n";
  plain << "family " << family_name << ", n <= " << max_n << "\n";
  plain << "m\tn\tdegree\tk\tvalue\n";
  for (const auto& r : outcome.rows) {
    rows.push_back(coeff_record(r));
    csv << r.m << "," << r.n << "," << r.degree << "," << r.k << "," << r.value << "\n";
    plain << r.m << "\t" << r.n << "\t" << r.degree << "\t" << r.k << "\t" << r.value << "\n";
  }
  o.results = {{"rows", rows},
               {"exhausted_at", outcome.exhausted_at ? Json(dec(*outcome.exhausted_at)) : Json(nullptr)}};
  if (outcome.exhausted_at) {
    o.ok = false;
    o.code = kSearchExhausted;
    plain << "no n <= " << max_n << " has a coefficient of absolute value " << *outcome.exhausted_at << "\n";
    err << "search exhausted: m = " << *outcome.exhausted_at << " not attained for n <= " << max_n << "\n";
  }
  o.csv = csv.str();
  o.plain = plain.str();
  return o;
}

Outcome cmd_witness(std::uint64_t m, std::uint64_t t, std::ostream& err) {
  const auto report = witness::evaluate_witness(m, t);
  Outcome o;
  o.inputs = {{"m", dec(m)}, {"t", dec(t)}};
  o.results = witness_record(report);
  if (!report.all_match) {
    o.ok = false;
    o.code = kVerificationFailure;
    err << "witness m = " << m << ", t = " << t << ": predictions not confirmed\n";
  }
  return o;
}

Outcome cmd_semigroup(const std::string& gens_text) {
  const auto gens = parse_list(gens_text, "generator");
  const semigroup::NumericalSemigroup s(gens);
  Outcome o;
  o.inputs = {{"gens", integer_list({gens.begin(), gens.end()})}};
  o.results = semigroup_record(s);
  return o;
}

Outcome cmd_check(const std::string& name, const std::string& params_text, std::ostream& err) {
  const auto params = parse_list(params_text, "parameter");
  Outcome o;
  o.inputs = {{"name", name}, {"params", integer_list({params.begin(), params.end()})}};
  if (name == "ternary-consecutive") {
    const auto& p = expect_arity(params, 3, name);
    const auto r = analysis::ternary_consecutive_check(p[0], p[1], p[2]);
    o.results = coefficient_set_record(r);
    o.ok = r.is_consecutive;
  } else if (name == "congruence-transfer") {
    const auto& p = expect_arity(params, 4, name);
    const auto r = analysis::congruence_transfer_check(p[0], p[1], p[2], p[3]);
    o.results = congruence_transfer_record(r);
    o.ok = r.holds;
  } else if (name == "height-jump") {
    const auto& p = expect_arity(params, 4, name);
    const auto r = analysis::height_jump_check(p[0], p[1], p[2], p[3]);
    o.results = height_jump_record(r);
    o.ok = r.holds;
  } else if (name == "kaplan-flat") {
    const auto& p = expect_arity(params, 4, name);
    const auto r = analysis::kaplan_flatness_check(p[0], p[1], p[2], p[3]);
    o.results = kaplan_record(r);
    o.ok = r.holds;
  } else if (name == "psi-bound") {
    const auto& p = expect_arity(params, 3, name);
    const auto r = analysis::psi_star_ternary_bound_check(p[0], p[1], p[2]);
    o.results = psi_bound_record(r);
    o.ok = r.holds;
  } else if (name == "binary-identities") {
    const auto& p = expect_arity(params, 2, name);
    std::string failure;
    const auto r = semigroup::check_binary_identities(p[0], p[1], &failure);
    o.results = binary_identity_record(r);
    o.ok = r.ok;
    if (!r.ok) err << failure << "\n";
  } else {
    throw InvalidArgument("unknown check '" + name + "'");
  }
  if (!o.ok) {
    o.code = kVerificationFailure;
    err << "check " << name << " failed\n";
  }
  return o;
}

}  // namespace

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const InvalidArgument*>(&e) || dynamic_cast<const SearchCeilingExceeded*>(&e) ||
      dynamic_cast<const CeilingExceeded*>(&e)) {
    return kInputError;
  }
  if (dynamic_cast<const analysis::RangeExhausted*>(&e)) return kSearchExhausted;
  // Identity violations, prediction mismatches and internal disagreements.
  if (dynamic_cast<const Error*>(&e)) return kVerificationFailure;
  return kUnexpected;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unitary cyclotomic polynomials: expansion, coefficient searches and identity checks", "unicyclo"};
  app.require_subcommand(1);

  std::string format_name = "plain";
  auto add_format = [&format_name](CLI::App* sub) {
    sub->add_option("--format,format", format_name, "Output format")
        ->check(CLI::IsMember({"plain", "csv", "json"}));
  };

  std::string family;
  std::uint64_t n = 0, max_m = 0, max_n = 0, m = 0, t = 0;
  unsigned jobs = 1;
  std::string gens, check_name, params;
  const std::vector<std::string> families{"phi", "psi", "phi-star", "psi-star"};

  auto* compute = app.add_subcommand("compute", "Expand one polynomial");
  compute->add_option("--family,family", family, "Polynomial family")->required()->check(CLI::IsMember(families));
  compute->add_option("--n,n", n, "Index n >= 1")->required();
  add_format(compute);

  auto* search = app.add_subcommand("search", "Least n with a coefficient of absolute value m, for m = 2..M");
  search->add_option("--family,family", family, "Polynomial family")->required()->check(CLI::IsMember(families));
  search->add_option("--max-m,max-m", max_m, "Largest m")->required();
  search->add_option("--max-n,max-n", max_n, "Search bound for n")->required();
  search->add_option("--jobs,-j", jobs, "Worker threads");
  add_format(search);

  auto* wit = app.add_subcommand("witness", "Build and verify a coefficient witness");
  wit->add_option("--m,m", m, "Modulus m >= 2")->required();
  wit->add_option("--t,t", t, "Number of primes t >= 1")->required();
  add_format(wit);

  auto* semi = app.add_subcommand("semigroup", "Gaps, Frobenius number and polynomial of a numerical semigroup");
  semi->add_option("--gens,gens", gens, "Comma-separated generators")->required();
  add_format(semi);

  auto* check = app.add_subcommand("check", "Instance check of a coefficient theorem");
  check->add_option("--name,name", check_name, "Check to run")
      ->required()
      ->check(CLI::IsMember({"ternary-consecutive", "congruence-transfer", "height-jump", "kaplan-flat", "psi-bound",
                             "binary-identities"}));
  check->add_option("--params,params", params, "Comma-separated parameters")->required();
  add_format(check);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    const OutputFormat format = parse_format(format_name);
    Outcome o;
    if (command == "compute") {
      o = cmd_compute(family, n);
    } else if (command == "search") {
      o = cmd_search(family, max_m, max_n, jobs, err);
    } else if (command == "witness") {
      o = cmd_witness(m, t, err);
    } else if (command == "semigroup") {
      o = cmd_semigroup(gens);
    } else {
      o = cmd_check(check_name, params, err);
    }
    emit(command, o, format, out);
    return o.code;
  } catch (const std::exception& e) {
    const int code = exit_code_for(e);
    const char* label = code == kInputError ? "error" : code == kUnexpected ? "unexpected error" : "verification failure";
    err << label << ": " << e.what() << "\n";
    return code;
  }
}

}  // namespace unicyclo::cli

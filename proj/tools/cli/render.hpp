#pragma once

// JSON views of library results. Every number is a decimal string so that
// unbounded coefficients never pass through floating point.

#include <string>
#include <vector>

#include <json.hpp>

#include "unicyclo/analysis.hpp"
#include "unicyclo/semigroup.hpp"
#include "unicyclo/witness.hpp"

namespace unicyclo::cli {

using Json = nlohmann::json;

enum class OutputFormat { Plain, Csv, Json };

OutputFormat parse_format(const std::string& name);

template <class T>
std::string dec(const T& v) {
  if constexpr (std::is_same_v<T, Integer>) {
    return v.str();
  } else {
    return std::to_string(v);
  }
}

Json integer_list(const std::vector<Integer>& values);
Json sparse_coefficients(const poly::IntPolynomial& f);

Json polynomial_record(cyclo::PolyFamily family, std::uint64_t n, const poly::IntPolynomial& f);
Json coeff_record(const analysis::CoeffRecord& r);
Json semigroup_record(const semigroup::NumericalSemigroup& s);
Json binary_identity_record(const semigroup::BinaryIdentityReport& r);
Json coefficient_set_record(const analysis::CoefficientSetReport& r);
Json congruence_transfer_record(const analysis::CongruenceTransferReport& r);
Json height_jump_record(const analysis::HeightJumpReport& r);
Json kaplan_record(const analysis::KaplanReport& r);
Json psi_bound_record(const analysis::PsiBoundReport& r);
Json witness_record(const witness::WitnessReport& r);

/// {command, inputs, results, ok}
Json envelope(const std::string& command, Json inputs, Json results, bool ok);

/// Canonical JSON text (sorted keys, two-space indent, trailing newline).
std::string render_json(const Json& doc);

/// "key: value" lines of a flat or nested JSON object, keys dotted.
std::string render_plain(const Json& results);
/// "key,value" lines of the same flattening, with a header row.
std::string render_csv(const Json& results);

}  // namespace unicyclo::cli

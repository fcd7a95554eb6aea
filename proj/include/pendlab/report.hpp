#pragma once

// JSON and CSV renderings of verification results. Key order is fixed and
// no field depends on wall-clock time, so equal inputs give equal bytes.

#include <string>

#include "json.hpp"
#include "pendlab/families.hpp"
#include "pendlab/newman.hpp"

namespace pendlab {

using Json = nlohmann::ordered_json;

// {"A", "B", "mod", "expected", "status", "n_checked", "max_index",
//  "counterexamples": [[index, residue], ...], "provenance"}
Json to_json(const FamilyReport& report);
Json to_json(const PrimeCase& prime_case);
// Lists at most `max_listed` nonzero residuals; big integers become strings.
Json to_json(const ResidualScan& scan, std::size_t max_listed = 5);

std::string family_csv_header();
std::string to_csv_row(const FamilyReport& report);

}  // namespace pendlab

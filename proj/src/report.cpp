#include "pendlab/report.hpp"

namespace pendlab {

Json to_json(const FamilyReport& report) {
  Json counterexamples = Json::array();
  for (const auto& [index, residue] : report.counterexamples) counterexamples.push_back(Json::array({index, residue}));
  Json j;
  j["A"] = report.family.modulus;
  j["B"] = report.family.residue;
  j["mod"] = report.family.check_modulus;
  j["expected"] = report.family.expected;
  j["status"] = std::string(to_string(report.status));
  j["n_checked"] = report.n_checked;
  j["max_index"] = report.max_index ? Json(*report.max_index) : Json(nullptr);
  j["counterexamples"] = std::move(counterexamples);
  j["provenance"] = report.family.provenance;
  return j;
}

Json to_json(const PrimeCase& prime_case) {
  Json j;
  j["p"] = prime_case.p;
  j["delta"] = prime_case.delta;
  j["pend_delta_parity"] = prime_case.pend_delta_parity;
  j["case"] = std::string(to_string(prime_case.label));
  return j;
}

Json to_json(const ResidualScan& scan, std::size_t max_listed) {
  Json listed = Json::array();
  for (std::size_t i = 0; i < scan.nonzero.size() && i < max_listed; ++i) {
    listed.push_back(Json{{"n", scan.nonzero[i].first}, {"residual", scan.nonzero[i].second.get_str()}});
  }
  Json j;
  j["p"] = scan.p;
  j["n_max"] = scan.n_max;
  j["checked"] = scan.checked;
  j["nonzero_count"] = scan.nonzero.size();
  j["first_nonzero"] = std::move(listed);
  j["status"] = scan.vanishes() ? "verified" : "refuted";
  return j;
}

std::string family_csv_header() { return "A,B,mod,expected,status,n_checked,max_index,counterexamples,provenance"; }

std::string to_csv_row(const FamilyReport& report) {
  std::string row = std::to_string(report.family.modulus) + ',' + std::to_string(report.family.residue) + ',' +
                    std::to_string(report.family.check_modulus) + ',' + std::to_string(report.family.expected) + ',' +
                    std::string(to_string(report.status)) + ',' + std::to_string(report.n_checked) + ',' +
                    (report.max_index ? std::to_string(*report.max_index) : std::string()) + ',' +
                    std::to_string(report.counterexamples.size()) + ',';
  // Provenance strings contain commas.
  row += '"' + report.family.provenance + '"';
  return row;
}

}  // namespace pendlab

#include "pendlab/families.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>
#include <thread>

#include "pendlab/number_theory.hpp"

namespace pendlab {
namespace {

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t result = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (__builtin_mul_overflow(result, base, &result)) {
      throw std::overflow_error("families: " + std::to_string(base) + "^" + std::to_string(exp) +
                                " exceeds 64 bits");
    }
  }
  return result;
}

std::uint64_t checked_mul_add(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  std::uint64_t product = 0;
  std::uint64_t sum = 0;
  if (__builtin_mul_overflow(a, b, &product) || __builtin_add_overflow(product, c, &sum)) {
    throw std::overflow_error("families: progression offset exceeds 64 bits");
  }
  return sum;
}

std::uint64_t table_modulus(const Series& table) {
  if (table.backend().is_exact()) throw BackendMismatch("families: verification needs a modular table");
  return table.backend().modulus();
}

}  // namespace

std::string_view to_string(CaseLabel label) noexcept { return label == CaseLabel::case_i ? "case-i" : "case-ii"; }

std::string_view to_string(FamilyStatus status) noexcept {
  switch (status) {
    case FamilyStatus::verified:
      return "verified";
    case FamilyStatus::refuted:
      return "refuted";
    case FamilyStatus::insufficient_range:
      return "insufficient-range";
  }
  return "unknown";
}

PrimeCase classify(std::uint64_t p, const Series& pend_values) {
  if (p < 5 || !is_prime(p)) throw std::invalid_argument("classify: p must be a prime >= 5");
  const std::uint64_t delta = (p * p - 1) / 8;
  if (pend_values.order() <= delta) {
    throw std::out_of_range("classify: table order " + std::to_string(pend_values.order()) +
                            " does not reach (p^2-1)/8 = " + std::to_string(delta));
  }
  int parity = 0;
  if (pend_values.backend().is_exact()) {
    parity = mpz_odd_p(pend_values.coefficient(delta).get_mpz_t()) ? 1 : 0;
  } else if (pend_values.backend().modulus() % 2 == 0) {
    parity = static_cast<int>(pend_values.residue(delta) % 2);
  } else {
    throw BackendMismatch("classify: an odd modulus does not determine parity");
  }
  return PrimeCase{p, delta, parity, parity == 1 ? CaseLabel::case_i : CaseLabel::case_ii};
}

std::vector<ProgressionFamily> theorem_families(const PrimeCase& prime_case, unsigned k) {
  const std::uint64_t p = prime_case.p;
  const unsigned period = prime_case.label == CaseLabel::case_i ? 4 : 6;
  const std::string tag(to_string(prime_case.label));
  const std::string level = ",k=" + std::to_string(k);

  const std::uint64_t modulus = checked_pow(p, period * k + period);
  const std::uint64_t step = checked_pow(p, period * k + period - 1);
  const std::uint64_t base = (modulus - 1) / 8;

  std::vector<ProgressionFamily> families;
  for (std::uint64_t j = 1; j < p; ++j) {
    families.push_back({modulus, checked_mul_add(step, j, base), 2, 0, tag + ".zero" + level + ",j=" + std::to_string(j)});
  }
  for (unsigned point_level : {k, k + 1}) {
    const std::uint64_t scale = checked_pow(p, period * point_level);
    families.push_back({scale, (scale - 1) / 8, 2, 1, tag + ".point,k=" + std::to_string(point_level), true});
  }
  return families;
}

std::vector<ProgressionFamily> sellers_families(unsigned alpha_max) {
  if (alpha_max < 1) throw std::invalid_argument("sellers: alpha_max must be at least 1");
  std::vector<ProgressionFamily> families;
  for (unsigned alpha = 1; alpha <= alpha_max; ++alpha) {
    const std::uint64_t modulus = checked_pow(3, 2 * alpha + 1);
    const std::uint64_t residue = (17 * checked_pow(3, 2 * alpha) - 1) / 8;
    std::string provenance = alpha == 1 ? "sellers,27n+19" : "sellers,alpha=" + std::to_string(alpha) + ",assumed-zero-residue";
    families.push_back({modulus, residue, 3, 0, std::move(provenance)});
  }
  return families;
}

FamilyReport verify_family(const ProgressionFamily& family, const Series& table) {
  if (family.modulus == 0) throw std::invalid_argument("families: modulus must be positive");
  if (table_modulus(table) != family.check_modulus) {
    throw BackendMismatch("families: table " + table.backend().name() + " cannot check a mod " +
                          std::to_string(family.check_modulus) + " family");
  }
  FamilyReport report{family, 0, std::nullopt, {}, FamilyStatus::insufficient_range};
  const std::uint64_t order = table.order();
  for (std::uint64_t index = family.residue; index < order; index += family.modulus) {
    const std::uint64_t observed = table.residue(index);
    ++report.n_checked;
    report.max_index = index;
    if (observed != family.expected) report.counterexamples.emplace_back(index, observed);
    if (family.point || order - index <= family.modulus) break;
  }
  if (!report.counterexamples.empty()) {
    report.status = FamilyStatus::refuted;
  } else if (report.n_checked > 0) {
    report.status = FamilyStatus::verified;
  }
  return report;
}

std::vector<FamilyReport> verify_families(const std::vector<ProgressionFamily>& families, const Series& table) {
  const std::size_t workers = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  std::vector<FamilyReport> reports;
  reports.reserve(families.size());
  for (std::size_t first = 0; first < families.size(); first += workers) {
    std::vector<std::future<FamilyReport>> batch;
    for (std::size_t i = first; i < std::min(first + workers, families.size()); ++i) {
      batch.push_back(std::async(std::launch::async, [&, i] { return verify_family(families[i], table); }));
    }
    for (auto& f : batch) reports.push_back(f.get());
  }
  std::sort(reports.begin(), reports.end(), [](const FamilyReport& x, const FamilyReport& y) {
    if (x.family.modulus != y.family.modulus) return x.family.modulus < y.family.modulus;
    if (x.family.residue != y.family.residue) return x.family.residue < y.family.residue;
    return x.family.provenance < y.family.provenance;
  });
  return reports;
}

}  // namespace pendlab

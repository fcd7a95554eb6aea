#pragma once

// Congruence families for pend(n): the period p^4 / p^6 parity families
// attached to a prime p >= 5, and Sellers' mod-3 progressions.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pendlab/series.hpp"

namespace pendlab {

enum class CaseLabel : std::uint8_t { case_i, case_ii };

std::string_view to_string(CaseLabel label) noexcept;

struct PrimeCase {
  std::uint64_t p;
  std::uint64_t delta;  // (p^2 - 1) / 8
  int pend_delta_parity;
  CaseLabel label;  // case_i iff pend(delta) is odd
};

// `pend_values` may be exact, parity, or residue modulo an even number.
PrimeCase classify(std::uint64_t p, const Series& pend_values);

// Indices A*n + B for n >= 0 (or only B when `point` is set) whose values
// are claimed to be `expected` modulo `check_modulus`.
struct ProgressionFamily {
  std::uint64_t modulus;  // A
  std::uint64_t residue;  // B, which may exceed A
  unsigned check_modulus;
  unsigned expected;
  std::string provenance;
  bool point = false;
};

// Zero families for j = 1..p-1 at level k, plus the odd point values at
// levels k and k+1. Throws std::overflow_error when p^(exponent) leaves
// 64 bits.
std::vector<ProgressionFamily> theorem_families(const PrimeCase& prime_case, unsigned k);

// 27n + 19 and, for 2 <= alpha <= alpha_max, 3^(2 alpha + 1) n + (17 * 3^(2 alpha) - 1)/8,
// all claimed to vanish mod 3. alpha = 1 coincides with 27n + 19 and is
// emitted once.
std::vector<ProgressionFamily> sellers_families(unsigned alpha_max);

enum class FamilyStatus : std::uint8_t { verified, refuted, insufficient_range };

std::string_view to_string(FamilyStatus status) noexcept;

struct FamilyReport {
  ProgressionFamily family;
  std::uint64_t n_checked = 0;
  std::optional<std::uint64_t> max_index;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> counterexamples;  // (index, observed residue)
  FamilyStatus status = FamilyStatus::insufficient_range;
};

// Checks every index below the table order. The table's modulus must equal
// the family's check modulus.
FamilyReport verify_family(const ProgressionFamily& family, const Series& table);

// Fans the families out across threads; reports come back sorted by A, then
// B, then provenance.
std::vector<FamilyReport> verify_families(const std::vector<ProgressionFamily>& families, const Series& table);

}  // namespace pendlab

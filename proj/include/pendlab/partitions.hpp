#pragma once

// Explicit partition enumeration (ground-truth oracle) and the coefficient
// tables for pend(n), a(n) and p(n).

#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "pendlab/eta.hpp"
#include "pendlab/series.hpp"

namespace pendlab {

// Non-increasing positive parts.
struct Partition {
  std::vector<unsigned> parts;

  unsigned sum() const noexcept;
  friend bool operator==(const Partition&, const Partition&) = default;
};

// Largest n accepted by the enumeration oracles; p(90) is about 5.7e7.
inline constexpr unsigned kMaxEnumeration = 90;

// Visits every partition of n once, in reverse lexicographic order
// ({n} first, {1,...,1} last). The span is only valid during the call.
void for_each_partition(unsigned n, const std::function<void(std::span<const unsigned>)>& visit);
std::vector<Partition> enumerate(unsigned n);

// True when no even part value occurs exactly once.
bool is_pend(std::span<const unsigned> parts) noexcept;
std::uint64_t pend_bruteforce(unsigned n);

enum class TableKind : std::uint8_t { pend = 0, a = 1, p = 2 };

std::string_view to_string(TableKind kind) noexcept;
TableKind table_kind_from_string(std::string_view name);

// Eta quotient whose coefficients define each table kind.
EtaQuotient table_quotient(TableKind kind);

struct CoefficientTable {
  TableKind kind;
  Series values;
};

// f2 f12 / (f1 f4 f6).
CoefficientTable pend_table(std::size_t order, Backend backend = Backend::exact());
// f3^2 / f1^3.
CoefficientTable a_table(std::size_t order, Backend backend = Backend::exact());
// 1 / f1.
CoefficientTable partition_table(std::size_t order, Backend backend = Backend::exact());
CoefficientTable make_table(TableKind kind, std::size_t order, Backend backend);

}  // namespace pendlab

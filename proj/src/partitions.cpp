#include "pendlab/partitions.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace pendlab {
namespace {

void require_enumerable(unsigned n) {
  if (n > kMaxEnumeration) {
    throw std::invalid_argument("partitions: enumeration limited to n <= " + std::to_string(kMaxEnumeration));
  }
}

}  // namespace

unsigned Partition::sum() const noexcept { return std::accumulate(parts.begin(), parts.end(), 0U); }

void for_each_partition(unsigned n, const std::function<void(std::span<const unsigned>)>& visit) {
  require_enumerable(n);
  if (n == 0) {
    visit({});
    return;
  }
  // Classic successor rule on the reverse-lex sequence: drop trailing ones,
  // decrement the last part > 1 and refill greedily with copies of it.
  std::vector<unsigned> parts{n};
  for (;;) {
    visit(parts);
    unsigned ones = 0;
    while (!parts.empty() && parts.back() == 1) {
      parts.pop_back();
      ++ones;
    }
    if (parts.empty()) return;
    const unsigned part = --parts.back();
    unsigned rest = ones + 1;
    while (rest > part) {
      parts.push_back(part);
      rest -= part;
    }
    if (rest > 0) parts.push_back(rest);
  }
}

std::vector<Partition> enumerate(unsigned n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](std::span<const unsigned> parts) {
    out.push_back(Partition{{parts.begin(), parts.end()}});
  });
  return out;
}

bool is_pend(std::span<const unsigned> parts) noexcept {
  // Parts are sorted, so equal values are adjacent.
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (parts[i] % 2 == 0 && j - i == 1) return false;
    i = j;
  }
  return true;
}

std::uint64_t pend_bruteforce(unsigned n) {
  std::uint64_t count = 0;
  for_each_partition(n, [&](std::span<const unsigned> parts) {
    if (is_pend(parts)) ++count;
  });
  return count;
}

std::string_view to_string(TableKind kind) noexcept {
  switch (kind) {
    case TableKind::pend:
      return "pend";
    case TableKind::a:
      return "a";
    case TableKind::p:
      return "p";
  }
  return "unknown";
}

TableKind table_kind_from_string(std::string_view name) {
  if (name == "pend") return TableKind::pend;
  if (name == "a") return TableKind::a;
  if (name == "p") return TableKind::p;
  throw std::invalid_argument("unknown table kind: " + std::string(name));
}

EtaQuotient table_quotient(TableKind kind) {
  switch (kind) {
    case TableKind::pend:
      return EtaQuotient{{2, 1}, {12, 1}, {1, -1}, {4, -1}, {6, -1}};
    case TableKind::a:
      return EtaQuotient{{3, 2}, {1, -3}};
    case TableKind::p:
      return EtaQuotient{{1, -1}};
  }
  throw std::logic_error("unreachable table kind");
}

CoefficientTable make_table(TableKind kind, std::size_t order, Backend backend) {
  return CoefficientTable{kind, expand_quotient(table_quotient(kind), order, backend)};
}

CoefficientTable pend_table(std::size_t order, Backend backend) { return make_table(TableKind::pend, order, backend); }
CoefficientTable a_table(std::size_t order, Backend backend) { return make_table(TableKind::a, order, backend); }
CoefficientTable partition_table(std::size_t order, Backend backend) { return make_table(TableKind::p, order, backend); }

}  // namespace pendlab

#pragma once

// Dilated Euler products f_k = prod_{n>=1} (1 - q^{kn}) and finite products
// of their integer powers (eta quotients).

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pendlab/series.hpp"

namespace pendlab {

// Nonzero terms of f_k below q^order: sign (-1)^m at k*m(3m-1)/2 for m in Z,
// sorted by exponent.
std::vector<SparseTerm> pentagonal_terms(std::uint64_t k, std::size_t order);

Series eta_series(std::uint64_t k, std::size_t order, Backend backend = Backend::exact());

struct EtaFactor {
  std::uint64_t dilation;
  std::int64_t exponent;

  friend bool operator==(const EtaFactor&, const EtaFactor&) = default;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::invalid_argument(message + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// prod f_k^{e_k}. Factors are kept sorted by dilation, duplicates merged and
// zero exponents dropped; the empty quotient is the constant 1.
class EtaQuotient {
 public:
  EtaQuotient() = default;
  EtaQuotient(std::initializer_list<std::pair<std::uint64_t, std::int64_t>> factors);
  explicit EtaQuotient(const std::vector<EtaFactor>& factors);

  // Comma-separated `k:e` pairs, whitespace ignored, e.g. "2:1,12:1,1:-1,4:-1,6:-1".
  static EtaQuotient parse(std::string_view text);

  const std::vector<EtaFactor>& factors() const noexcept { return factors_; }
  std::string to_string() const;

  friend bool operator==(const EtaQuotient&, const EtaQuotient&) = default;

 private:
  void add(std::uint64_t dilation, std::int64_t exponent);

  std::vector<EtaFactor> factors_;
};

// prod eta_series(k, order)^e, with negative powers applied as division.
Series expand_quotient(const EtaQuotient& quotient, std::size_t order, Backend backend = Backend::exact());

}  // namespace pendlab

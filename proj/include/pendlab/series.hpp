#pragma once

// Truncated formal power series in q with exact or modular coefficients.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace pendlab {

using BigInt = mpz_class;

enum class BackendKind : std::uint8_t { exact = 0, parity = 1, residue = 2 };

// Coefficient domain: the integers, Z/2 packed into bits, or Z/m for a
// word-sized m.
class Backend {
 public:
  static constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

  static Backend exact() noexcept { return Backend(BackendKind::exact, 0); }
  static Backend parity() noexcept { return Backend(BackendKind::parity, 2); }
  // 2 <= modulus <= 2^62.
  static Backend residue(std::uint64_t modulus);

  BackendKind kind() const noexcept { return kind_; }
  // 0 for the exact backend.
  std::uint64_t modulus() const noexcept { return modulus_; }
  bool is_exact() const noexcept { return kind_ == BackendKind::exact; }
  std::string name() const;

  friend bool operator==(const Backend&, const Backend&) = default;

 private:
  Backend(BackendKind kind, std::uint64_t modulus) noexcept : kind_(kind), modulus_(modulus) {}

  BackendKind kind_;
  std::uint64_t modulus_;
};

// Fixed-length bit vector; bits past size() in the last word are always zero.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t size() const noexcept { return bits_; }
  bool test(std::size_t i) const noexcept { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i, bool value) noexcept {
    const std::uint64_t mask = std::uint64_t{1} << (i % 64);
    words_[i / 64] = value ? (words_[i / 64] | mask) : (words_[i / 64] & ~mask);
  }
  void flip(std::size_t i) noexcept { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::span<std::uint64_t> words() noexcept { return words_; }

  // Restores the zero-tail invariant after word-level writes.
  void clear_tail() noexcept {
    if (bits_ % 64 != 0) words_.back() &= (std::uint64_t{1} << (bits_ % 64)) - 1;
  }

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

// A nonzero coefficient at one exponent; used for sparse operands such as
// pentagonal-number series.
struct SparseTerm {
  std::size_t exponent;
  std::int64_t coefficient;

  friend bool operator==(const SparseTerm&, const SparseTerm&) = default;
};

// Coefficients for q^0 .. q^(order-1). Immutable once constructed.
class Series {
 public:
  explicit Series(std::vector<BigInt> coefficients);
  Series(Backend residue_backend, std::vector<std::uint64_t> residues);
  explicit Series(BitVector bits);

  static Series zero(Backend backend, std::size_t order);
  static Series one(Backend backend, std::size_t order);
  // Reduces each value into the backend.
  static Series from_integers(std::span<const std::int64_t> values, Backend backend = Backend::exact());

  const Backend& backend() const noexcept { return backend_; }
  std::size_t order() const noexcept { return order_; }

  // Exact value, or the least nonnegative residue.
  BigInt coefficient(std::size_t n) const;
  // Parity and residue backends only.
  std::uint64_t residue(std::size_t n) const;

  std::span<const BigInt> exact_coefficients() const;
  std::span<const std::uint64_t> residues() const;
  const BitVector& bits() const;

  std::size_t nonzero_count() const;
  Series truncated(std::size_t order) const;

  friend bool operator==(const Series& a, const Series& b) {
    return a.backend_ == b.backend_ && a.order_ == b.order_ && a.data_ == b.data_;
  }

 private:
  Backend backend_;
  std::size_t order_;
  std::variant<std::vector<BigInt>, std::vector<std::uint64_t>, BitVector> data_;
};

class BackendMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NonUnitConstant : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Result order is min(a.order(), b.order()).
Series mul(const Series& a, const Series& b);
// Constant term must be a unit of the coefficient ring.
Series inverse(const Series& a);
// numerator * inverse(denominator), fused into one recurrence.
Series divide(const Series& numerator, const Series& denominator);
// Coefficients reduced into [0, m) under the residue(m) backend. Accepts exact
// input, or modular input whose modulus is a multiple of m.
Series reduce(const Series& a, std::uint64_t modulus);
// Re-expresses a series in another backend (exact -> anything, or between
// modular backends where the target modulus divides the source modulus).
Series convert(const Series& a, Backend target);

// Multiplication and division by a sparse operand given as terms sorted by
// exponent. Division requires a unit constant term at exponent 0.
Series mul_sparse(const Series& a, std::span<const SparseTerm> terms);
Series divide_sparse(const Series& a, std::span<const SparseTerm> terms);

}  // namespace pendlab

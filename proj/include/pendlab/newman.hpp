#pragma once

// Newman's three-term coefficient relation for eta products
// prod (1-q^n)^r (1-q^{qn})^s, specialised to a(n) = [q^n] f3^2/f1^3.
//
// Every relation is stated in its p^3-cleared integer form, so each check is
// an exact integer (or residue) comparison against zero.

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pendlab/series.hpp"

namespace pendlab {

class InsufficientOrder : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class NewmanParams {
 public:
  // Requires r, s != 0, r and s of different parity, q_dil and p distinct
  // primes with p >= 5, and Delta = (r + s q_dil)(p^2 - 1)/24 a nonnegative
  // integer.
  static NewmanParams make(int r, int s, std::uint64_t q_dil, std::uint64_t p);
  // r = -3, s = 2, q_dil = 3: the parameters behind a(n).
  static NewmanParams pend_instance(std::uint64_t p);

  int r() const noexcept { return r_; }
  int s() const noexcept { return s_; }
  std::uint64_t q_dil() const noexcept { return q_dil_; }
  std::uint64_t p() const noexcept { return p_; }
  // epsilon = (r + s) / 2 is a half-integer; this is r + s.
  int twice_epsilon() const noexcept { return r_ + s_; }
  // t = (r + s q_dil) / 24; this is the numerator.
  std::int64_t t_numerator() const noexcept { return t_numerator_; }
  std::uint64_t delta() const noexcept { return delta_; }
  // theta = theta_sign * 2 * q_dil^s.
  int theta_sign() const noexcept { return theta_sign_; }
  // (theta / p).
  int theta_legendre() const;
  bool is_pend_instance() const noexcept { return r_ == -3 && s_ == 2 && q_dil_ == 3; }

 private:
  NewmanParams() = default;

  int r_ = 0;
  int s_ = 0;
  std::uint64_t q_dil_ = 0;
  std::uint64_t p_ = 0;
  std::int64_t t_numerator_ = 0;
  std::uint64_t delta_ = 0;
  int theta_sign_ = 1;
};

// alpha = p^3 a(Delta) + p (-2/p) (-Delta/p), i.e. p^3 omega(p).
struct AlphaFit {
  std::uint64_t p;
  BigInt alpha;
  BigInt fitted_alpha;  // solved from the n = 0 instance of the relation
  int omega_parity;     // (a(Delta) + 1) mod 2
};

class AlphaMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// `a_table` must be exact with order > Delta. Throws AlphaMismatch if the
// closed form and the n = 0 fit disagree.
AlphaFit fit_alpha(std::uint64_t p, const Series& a_table);

// p^3 a(p^2 n + Delta) - (alpha - p (-2/p) ((n - Delta)/p)) a(n) + a((n - Delta)/p^2),
// with a(x) = 0 off the nonnegative integers. Over a modular table the result
// is the least nonnegative residue.
BigInt newman_residual(std::uint64_t p, std::uint64_t n, const Series& a_table, const BigInt& alpha);

// p^3 a(p^3 n + (p^4 - 1)/8) - alpha a(p n + Delta) + a(n / p).
BigInt newman_step3_residual(std::uint64_t p, std::uint64_t n, const Series& a_table, const BigInt& alpha);

// Smallest table orders covering n = 0..n_max.
std::size_t newman_required_order(std::uint64_t p, std::uint64_t n_max);
std::size_t step3_required_order(std::uint64_t p, std::uint64_t n_max);

struct ResidualScan {
  std::uint64_t p;
  std::uint64_t n_max;
  std::uint64_t checked = 0;
  std::vector<std::pair<std::uint64_t, BigInt>> nonzero;  // (n, residual), ascending n

  bool vanishes() const noexcept { return checked > 0 && nonzero.empty(); }
};

enum class Relation { three_term, step3 };

// Evaluates the relation for n = 0..n_max, splitting the range across
// threads; results are merged in ascending n.
ResidualScan scan_residuals(Relation relation, std::uint64_t p, std::uint64_t n_max, const Series& a_table,
                            const BigInt& alpha);

}  // namespace pendlab

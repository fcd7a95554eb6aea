#include "pendlab/newman.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <string>
#include <thread>

#include "pendlab/number_theory.hpp"

namespace pendlab {
namespace {

using Wide = __int128;

// a(numerator / divisor), zero unless the quotient is a nonnegative integer.
BigInt a_at(const Series& table, Wide numerator, Wide divisor) {
  if (numerator < 0 || numerator % divisor != 0) return 0;
  const Wide index = numerator / divisor;
  if (index >= static_cast<Wide>(table.order())) {
    throw InsufficientOrder("newman: coefficient table of order " + std::to_string(table.order()) +
                            " is too short for index " + std::to_string(static_cast<unsigned long long>(index)));
  }
  return table.coefficient(static_cast<std::size_t>(index));
}

BigInt reduce_for(const Series& table, BigInt value) {
  if (table.backend().is_exact()) return value;
  const BigInt m(static_cast<unsigned long>(table.backend().modulus()));
  mpz_fdiv_r(value.get_mpz_t(), value.get_mpz_t(), m.get_mpz_t());
  return value;
}

BigInt big(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

}  // namespace

NewmanParams NewmanParams::make(int r, int s, std::uint64_t q_dil, std::uint64_t p) {
  if (r == 0 || s == 0) throw std::invalid_argument("newman: r and s must be nonzero");
  if ((r - s) % 2 == 0) throw std::invalid_argument("newman: r and s must have different parity");
  if (!is_prime(q_dil)) throw std::invalid_argument("newman: dilation q must be prime");
  if (p < 5 || !is_prime(p)) throw std::invalid_argument("newman: p must be a prime >= 5");
  if (p == q_dil) throw std::invalid_argument("newman: p and q must be distinct");

  NewmanParams params;
  params.r_ = r;
  params.s_ = s;
  params.q_dil_ = q_dil;
  params.p_ = p;
  params.t_numerator_ = static_cast<std::int64_t>(r) + static_cast<std::int64_t>(s) * static_cast<std::int64_t>(q_dil);
  const Wide delta_times_24 = static_cast<Wide>(params.t_numerator_) * (static_cast<Wide>(p) * p - 1);
  if (delta_times_24 < 0 || delta_times_24 % 24 != 0) {
    throw std::invalid_argument("newman: Delta = t(p^2 - 1) is not a nonnegative integer");
  }
  params.delta_ = static_cast<std::uint64_t>(delta_times_24 / 24);
  // theta carries (-1)^(1/2 - epsilon) = (-1)^((1 - r - s)/2).
  params.theta_sign_ = ((1 - (r + s)) / 2) % 2 == 0 ? 1 : -1;
  return params;
}

NewmanParams NewmanParams::pend_instance(std::uint64_t p) { return make(-3, 2, 3, p); }

int NewmanParams::theta_legendre() const {
  int value = legendre(2 * theta_sign_, p_);
  const int q_symbol = legendre(static_cast<std::int64_t>(q_dil_), p_);
  for (int i = 0; i < std::abs(s_); ++i) value *= q_symbol;
  return value;
}

std::size_t newman_required_order(std::uint64_t p, std::uint64_t n_max) {
  const NewmanParams params = NewmanParams::pend_instance(p);
  return static_cast<std::size_t>(p * p * n_max + params.delta() + 1);
}

std::size_t step3_required_order(std::uint64_t p, std::uint64_t n_max) {
  return static_cast<std::size_t>(p * p * p * n_max + (p * p * p * p - 1) / 8 + 1);
}

BigInt newman_residual(std::uint64_t p, std::uint64_t n, const Series& a_table, const BigInt& alpha) {
  const NewmanParams params = NewmanParams::pend_instance(p);
  const Wide P = p;
  const Wide delta = params.delta();
  const Wide shifted = static_cast<Wide>(n) - delta;
  const int character = params.theta_legendre() * legendre(static_cast<std::int64_t>(shifted % P), p);

  const BigInt gamma_cleared = alpha - big(p) * character;
  BigInt value = big(p) * big(p) * big(p) * a_at(a_table, P * P * n + delta, 1);
  value -= gamma_cleared * a_at(a_table, n, 1);
  value += a_at(a_table, shifted, P * P);
  return reduce_for(a_table, std::move(value));
}

BigInt newman_step3_residual(std::uint64_t p, std::uint64_t n, const Series& a_table, const BigInt& alpha) {
  const NewmanParams params = NewmanParams::pend_instance(p);
  const Wide P = p;
  const Wide head = P * P * P * n + (P * P * P * P - 1) / 8;
  BigInt value = big(p) * big(p) * big(p) * a_at(a_table, head, 1);
  value -= alpha * a_at(a_table, P * n + params.delta(), 1);
  value += a_at(a_table, n, P);
  return reduce_for(a_table, std::move(value));
}

AlphaFit fit_alpha(std::uint64_t p, const Series& a_table) {
  if (!a_table.backend().is_exact()) throw BackendMismatch("fit_alpha: needs an exact a(n) table");
  const NewmanParams params = NewmanParams::pend_instance(p);
  const std::uint64_t delta = params.delta();
  if (a_table.order() <= delta) {
    throw InsufficientOrder("fit_alpha: table order " + std::to_string(a_table.order()) + " does not reach Delta = " +
                            std::to_string(delta));
  }
  const BigInt a_delta = a_table.coefficient(delta);

  AlphaFit fit{p, 0, 0, 0};
  fit.alpha = big(p) * big(p) * big(p) * a_delta +
              big(p) * legendre(-2, p) * legendre(-static_cast<std::int64_t>(delta), p);

  // The n = 0 relation is affine in alpha: residual(alpha) = residual(0) - alpha a(0).
  const BigInt at_zero = newman_residual(p, 0, a_table, 0);
  const BigInt& a0 = a_table.coefficient(0);
  if (sgn(a0) == 0 || !mpz_divisible_p(at_zero.get_mpz_t(), a0.get_mpz_t())) {
    throw AlphaMismatch("fit_alpha: n = 0 relation does not determine an integer alpha");
  }
  fit.fitted_alpha = at_zero / a0;
  fit.omega_parity = mpz_odd_p(a_delta.get_mpz_t()) ? 0 : 1;
  if (fit.alpha != fit.fitted_alpha) {
    throw AlphaMismatch("fit_alpha: closed form " + fit.alpha.get_str() + " disagrees with n = 0 fit " +
                        fit.fitted_alpha.get_str() + " for p = " + std::to_string(p));
  }
  return fit;
}

ResidualScan scan_residuals(Relation relation, std::uint64_t p, std::uint64_t n_max, const Series& a_table,
                            const BigInt& alpha) {
  const std::size_t needed =
      relation == Relation::three_term ? newman_required_order(p, n_max) : step3_required_order(p, n_max);
  if (a_table.order() < needed) {
    throw InsufficientOrder("newman: n_max = " + std::to_string(n_max) + " needs table order " +
                            std::to_string(needed) + ", have " + std::to_string(a_table.order()));
  }
  auto evaluate = [&](std::uint64_t first, std::uint64_t last) {
    std::vector<std::pair<std::uint64_t, BigInt>> found;
    for (std::uint64_t n = first; n < last; ++n) {
      BigInt r = relation == Relation::three_term ? newman_residual(p, n, a_table, alpha)
                                                  : newman_step3_residual(p, n, a_table, alpha);
      if (sgn(r) != 0) found.emplace_back(n, std::move(r));
    }
    return found;
  };

  const std::uint64_t total = n_max + 1;
  const std::uint64_t workers = std::clamp<std::uint64_t>(std::thread::hardware_concurrency(), 1, total);
  const std::uint64_t chunk = (total + workers - 1) / workers;
  std::vector<std::future<std::vector<std::pair<std::uint64_t, BigInt>>>> parts;
  for (std::uint64_t first = 0; first < total; first += chunk) {
    parts.push_back(std::async(std::launch::async, evaluate, first, std::min(first + chunk, total)));
  }

  ResidualScan scan{p, n_max, total, {}};
  for (auto& part : parts) {
    for (auto& entry : part.get()) scan.nonzero.push_back(std::move(entry));
  }
  return scan;
}

}  // namespace pendlab

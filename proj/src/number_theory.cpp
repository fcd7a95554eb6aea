#include "pendlab/number_theory.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

namespace pendlab {

bool is_prime(std::uint64_t n) {
  const mpz_class value(static_cast<unsigned long>(n));
  return mpz_probab_prime_p(value.get_mpz_t(), 40) != 0;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("pow_mod: zero modulus");
  unsigned __int128 result = 1 % m;
  unsigned __int128 b = base % m;
  while (exp > 0) {
    if (exp & 1U) result = result * b % m;
    b = b * b % m;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

int legendre(std::int64_t a, std::uint64_t p) {
  if (p < 3 || !is_prime(p)) {
    throw std::invalid_argument("legendre: " + std::to_string(p) + " is not an odd prime");
  }
  const std::int64_t sp = static_cast<std::int64_t>(p);
  const std::uint64_t r = static_cast<std::uint64_t>(((a % sp) + sp) % sp);
  if (r == 0) return 0;
  return pow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

std::vector<std::uint64_t> random_primes(unsigned count, unsigned bits, std::uint64_t seed) {
  if (bits < 3 || bits > 62) throw std::invalid_argument("random_primes: bits must lie in [3, 62]");
  std::mt19937_64 rng(seed);
  const std::uint64_t low = std::uint64_t{1} << (bits - 1);
  std::uniform_int_distribution<std::uint64_t> dist(low, 2 * low - 1);
  std::vector<std::uint64_t> primes;
  while (primes.size() < count) {
    mpz_class start(static_cast<unsigned long>(dist(rng)));
    mpz_class candidate;
    mpz_nextprime(candidate.get_mpz_t(), start.get_mpz_t());
    if (candidate >= mpz_class(static_cast<unsigned long>(2 * low))) continue;
    const std::uint64_t p = candidate.get_ui();
    if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
  }
  return primes;
}

}  // namespace pendlab

#pragma once

#include <cstdint>
#include <vector>

namespace pendlab {

bool is_prime(std::uint64_t n);

// base^exp mod m for m >= 1.
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Legendre symbol (a/p) via Euler's criterion. Throws std::invalid_argument
// unless p is an odd prime.
int legendre(std::int64_t a, std::uint64_t p);

// `count` distinct primes in [2^(bits-1), 2^bits), drawn from a seeded
// generator so repeated runs pick the same primes.
std::vector<std::uint64_t> random_primes(unsigned count, unsigned bits, std::uint64_t seed);

}  // namespace pendlab

#ifndef CYCLODET_PRIMES_HPP
#define CYCLODET_PRIMES_HPP

#include <cstdint>
#include <vector>

namespace cyclodet {

// Trial division; intended for desk-scale inputs (p < 10^6 or so).
bool is_prime(std::uint64_t n);

// Prime factorization by trial division, ascending, with multiplicity.
std::vector<std::uint64_t> factorize(std::uint64_t n);

// Distinct prime divisors, ascending.
std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n);

struct PrimePower {
    std::uint64_t q;  // p^n
    std::uint64_t p;
    unsigned n;
};

// Decomposes q as p^n with p prime; nullopt-like via bool return.
bool as_prime_power(std::uint64_t q, PrimePower& out);

// All odd prime powers q = p^n (p odd prime, n >= 1) with lo <= q <= hi, ascending.
std::vector<PrimePower> odd_prime_powers(std::uint64_t lo, std::uint64_t hi);

}  // namespace cyclodet

#endif

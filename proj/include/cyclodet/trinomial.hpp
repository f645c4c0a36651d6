#ifndef CYCLODET_TRINOMIAL_HPP
#define CYCLODET_TRINOMIAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace cyclodet {

using Int = mpz_class;

// Coefficients of (x + 1/x + 1)^n, indexed by k in [-n, n] with offset +n.
// Exact arbitrary-precision when modulus is absent, otherwise reduced mod p
// at every step. coeffs[n] is the central coefficient T_n.
struct TrinomialRow {
    std::int64_t n = 0;
    std::optional<std::uint64_t> modulus;
    std::vector<Int> coeffs;  // size 2n+1

    // Coefficient at signed index k; zero outside [-n, n].
    const Int& at(std::int64_t k) const;
};

// n successive convolutions with (1, 1, 1) starting from (1); division-free,
// so it is safe mod p even when p | n.
TrinomialRow trinomial_row(std::int64_t n, std::optional<std::uint64_t> modulus = std::nullopt);

// Memoized rows; the cache is idempotent and safe under concurrent access.
std::shared_ptr<const TrinomialRow> trinomial_row_cached(std::int64_t n,
                                                         std::optional<std::uint64_t> modulus = std::nullopt);

// Central trinomial coefficient T_n = coefficient of x^n in (x^2+x+1)^n.
Int central_trinomial(std::int64_t n, std::optional<std::uint64_t> modulus = std::nullopt);

// Exact T_n via n*T_n = (2n-1)*T_{n-1} + 3(n-1)*T_{n-2}. Divides by n, so
// there is no modular variant; kept as an independent route for the
// convolution path.
Int central_trinomial_recurrence(std::int64_t n);

// Trinomial coefficient binom(n, k)_2; zero when |k| > n.
Int trinomial_coeff(std::int64_t n, std::int64_t k, std::optional<std::uint64_t> modulus = std::nullopt);

}  // namespace cyclodet

#endif

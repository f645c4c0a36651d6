#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cyclodet/trinomial.hpp"

using namespace cyclodet;

namespace {

// Independent oracle: expand (x^2 + x + 1)^n by repeated naive polynomial
// multiplication (not the shifted three-term convolution under test).
std::vector<Int> oracle_expand(std::int64_t n) {
    std::vector<Int> acc{1};
    const std::vector<Int> base{1, 1, 1};
    for (std::int64_t s = 0; s < n; ++s) {
        std::vector<Int> next(acc.size() + 2, Int(0));
        for (std::size_t i = 0; i < acc.size(); ++i) {
            for (std::size_t j = 0; j < 3; ++j) next[i + j] += acc[i] * base[j];
        }
        acc = std::move(next);
    }
    return acc;
}

Int pow3(std::int64_t n) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), Int(3).get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

}  // namespace

TEST_CASE("row examples") {
    CHECK(trinomial_row(2).coeffs == std::vector<Int>{1, 2, 3, 2, 1});
    CHECK(trinomial_row(0).coeffs == std::vector<Int>{1});
    CHECK(trinomial_row(5, 3).coeffs == std::vector<Int>{1, 2, 0, 0, 0, 0, 0, 0, 0, 2, 1});
    CHECK(trinomial_row(5).coeffs == std::vector<Int>{1, 5, 15, 30, 45, 51, 45, 30, 15, 5, 1});
}

TEST_CASE("rows match the naive expansion oracle") {
    for (std::int64_t n = 0; n <= 40; ++n) {
        CHECK(trinomial_row(n).coeffs == oracle_expand(n));
    }
}

TEST_CASE("central coefficients") {
    CHECK(central_trinomial(0) == 1);
    CHECK(central_trinomial(4) == 19);  // center of 1 4 10 16 19 16 10 4 1
    CHECK(central_trinomial(4) == oracle_expand(4)[4]);
    CHECK(central_trinomial(5, 3) == 0);  // T_5 = 51 = 3 * 17
}

TEST_CASE("recurrence and convolution agree for n <= 200") {
    for (std::int64_t n = 0; n <= 200; ++n) {
        CHECK(central_trinomial_recurrence(n) == central_trinomial(n));
    }
}

TEST_CASE("row symmetry and evaluation sums, exact n <= 200") {
    for (std::int64_t n = 0; n <= 200; ++n) {
        const TrinomialRow row = trinomial_row(n);
        REQUIRE(row.coeffs.size() == static_cast<std::size_t>(2 * n + 1));
        Int sum = 0, alt = 0;
        for (std::int64_t k = -n; k <= n; ++k) {
            CHECK(row.at(k) == row.at(-k));
            sum += row.at(k);
            alt += ((n + k) % 2 == 0) ? row.at(k) : -row.at(k);
        }
        CHECK(sum == pow3(n));  // evaluation at x = 1
        CHECK(alt == 1);        // (x^2+x+1)^n at x = -1; the shifted row alternation is (-1)^n
        CHECK(row.at(n) == 1);
        CHECK(row.at(-n) == 1);
        CHECK(row.at(0) == central_trinomial(n));
        CHECK(row.at(n + 1) == 0);
        CHECK(row.at(-n - 3) == 0);
    }
}

TEST_CASE("modular rows equal exact rows reduced, n <= 60") {
    for (std::uint64_t p : {3ull, 5ull, 7ull, 11ull, 13ull}) {
        for (std::int64_t n = 0; n <= 60; ++n) {
            const TrinomialRow exact = trinomial_row(n);
            const TrinomialRow modular = trinomial_row(n, p);
            for (std::int64_t k = -n; k <= n; ++k) {
                CHECK(modular.at(k) == exact.at(k) % static_cast<unsigned long>(p));
            }
        }
    }
}

TEST_CASE("modular sums hold mod p") {
    for (std::uint64_t p : {3ull, 7ull, 13ull}) {
        for (std::int64_t n : {5, 12, 31}) {
            const TrinomialRow row = trinomial_row(n, p);
            Int sum = 0, alt = 0;
            for (std::int64_t k = -n; k <= n; ++k) {
                sum += row.at(k);
                alt += ((n + k) % 2 == 0) ? row.at(k) : -row.at(k);
            }
            CHECK(sum % static_cast<unsigned long>(p) == pow3(n) % static_cast<unsigned long>(p));
            CHECK(((alt % static_cast<long>(p)) + static_cast<long>(p)) % static_cast<long>(p) == 1);
        }
    }
}

TEST_CASE("trinomial_coeff indexing") {
    CHECK(trinomial_coeff(4, 1) == 16);
    CHECK(trinomial_coeff(4, -1) == 16);
    CHECK(trinomial_coeff(4, 5) == 0);
    CHECK(trinomial_coeff(4, -9) == 0);

    // binom((q+1)/2, (q-3)/2) = 3/8 in GF(p); for q = 7, 8 = 1 so this is 3.
    CHECK(trinomial_coeff(4, 2, 7) == 3);
}

TEST_CASE("half-row endpoint identities for m = (q+1)/2") {
    // binom(m, m) = 1, binom(m, m-1) = m, checked against the expansion oracle.
    for (std::int64_t m : {3, 4, 6, 7, 9, 12, 25}) {
        const auto row = oracle_expand(m);  // index k + m
        CHECK(trinomial_coeff(m, m) == 1);
        CHECK(trinomial_coeff(m, m - 1) == m);
        CHECK(trinomial_coeff(m, m - 1) == row[static_cast<std::size_t>(2 * m - 1)]);
        CHECK(trinomial_coeff(m, m - 2) == row[static_cast<std::size_t>(2 * m - 2)]);
        CHECK(trinomial_coeff(m, m - 2) == m * (m + 1) / 2);  // (m-2,2,0) and (m-1,0,1) splits
    }
}

TEST_CASE("modulus validation") {
    CHECK_THROWS_AS(trinomial_row(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(trinomial_row(3, 9), std::invalid_argument);
    CHECK_THROWS_AS(trinomial_row(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(trinomial_row(-1), std::invalid_argument);
}

TEST_CASE("cached rows are identical to pure computation") {
    auto cached = trinomial_row_cached(17, 5);
    CHECK(cached->coeffs == trinomial_row(17, 5).coeffs);
    CHECK(trinomial_row_cached(17, 5).get() == cached.get());  // idempotent fill
    CHECK(trinomial_row_cached(17).get() != cached.get());     // exact and modular are distinct keys
    CHECK(trinomial_row_cached(17)->coeffs == trinomial_row(17).coeffs);
}

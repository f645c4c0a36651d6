#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "cyclodet/field.hpp"
#include "cyclodet/primes.hpp"

using namespace cyclodet;

namespace {

// Test-side oracle: naive polynomial arithmetic over GF(p), independent of
// the table-backed implementation under test.
std::vector<std::uint32_t> oracle_polymul(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                          const std::vector<std::uint32_t>& mod, std::uint64_t p) {
    std::vector<std::uint64_t> prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
        }
    }
    const std::size_t n = mod.size() - 1;
    for (std::size_t d = prod.size(); d-- > n;) {
        std::uint64_t c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (std::size_t i = 0; i < n; ++i) {
            prod[d - n + i] = (prod[d - n + i] + p - c * mod[i] % p) % p;
        }
    }
    std::vector<std::uint32_t> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
    return out;
}

// Oracle: a monic quadratic over GF(p) is irreducible iff it has no root.
bool oracle_quadratic_irreducible(std::uint64_t p, std::uint32_t c0, std::uint32_t c1) {
    for (std::uint64_t x = 0; x < p; ++x) {
        if ((x * x + c1 * x + c0) % p == 0) return false;
    }
    return true;
}

std::vector<PrimePower> scan_fields(std::uint64_t hi) {
    return odd_prime_powers(3, hi);
}

Field make(const PrimePower& pp) {
    return pp.n == 1 ? Field::prime(pp.p) : Field::extension(pp.p, pp.n);
}

}  // namespace

TEST_CASE("prime field construction and enumeration") {
    const Field F = Field::prime(7);
    CHECK(F.p() == 7);
    CHECK(F.q() == 7);
    CHECK(F.deg() == 1);
    CHECK(F.modulus() == std::vector<std::uint32_t>{0, 1});
    REQUIRE(F.nonzero().size() == 6);
    for (std::uint32_t i = 1; i <= 6; ++i) CHECK(F.nonzero()[i - 1].code == i);
}

TEST_CASE("prime field constructor rejects bad input with distinct errors") {
    CHECK_THROWS_WITH_AS(Field::prime(2), "even characteristic", std::invalid_argument);
    CHECK_THROWS_WITH_AS(Field::prime(0), "even characteristic", std::invalid_argument);
    CHECK_THROWS_WITH_AS(Field::prime(1), "p = 1 is a unit, not a prime", std::invalid_argument);
    CHECK_THROWS_WITH_AS(Field::prime(9), "composite characteristic", std::invalid_argument);
    CHECK_THROWS_AS(Field::prime(1000003), std::invalid_argument);  // beyond desk scale
}

TEST_CASE("extension field modulus is the lexicographically first irreducible") {
    const Field F9 = Field::extension(3, 2);
    CHECK(F9.q() == 9);
    CHECK(F9.modulus() == std::vector<std::uint32_t>{1, 0, 1});  // x^2 + 1, no root in GF(3)

    // Scan all monic quadratics over GF(5) in (c0, c1) order; the first
    // irreducible one must be the modulus the constructor picked.
    const Field F25 = Field::extension(5, 2);
    std::vector<std::uint32_t> first;
    for (std::uint32_t c0 = 0; c0 < 5 && first.empty(); ++c0) {
        for (std::uint32_t c1 = 0; c1 < 5 && first.empty(); ++c1) {
            if (oracle_quadratic_irreducible(5, c0, c1)) first = {c0, c1, 1};
        }
    }
    CHECK(F25.modulus() == first);
    CHECK(first == std::vector<std::uint32_t>{1, 1, 1});

    SUBCASE("construction is deterministic") {
        CHECK(Field::extension(3, 2).modulus() == F9.modulus());
        CHECK(Field::extension(3, 3).modulus() == Field::extension(3, 3).modulus());
    }
    SUBCASE("degree 1 is rejected") {
        CHECK_THROWS_AS(Field::extension(3, 1), std::invalid_argument);
    }
    SUBCASE("size bound") {
        CHECK_THROWS_AS(Field::extension(3, 12), std::invalid_argument);  // 3^12 > 2048
    }
}

TEST_CASE("irreducible_check agrees with brute force") {
    CHECK(irreducible_check(3, std::vector<std::uint32_t>{1, 0, 1}));       // x^2 + 1
    CHECK_FALSE(irreducible_check(3, std::vector<std::uint32_t>{2, 0, 1})); // (x+1)(x+2)
    for (std::uint64_t p : {3ull, 5ull, 7ull}) {
        for (std::uint32_t c = 0; c < p; ++c) {
            CHECK(irreducible_check(p, std::vector<std::uint32_t>{c, 1}));  // degree 1
        }
    }
    CHECK_THROWS_AS(irreducible_check(3, std::vector<std::uint32_t>{1, 2}), std::invalid_argument);  // non-monic

    // Exhaustive quadratics over GF(3), GF(5), GF(7) against the root oracle.
    for (std::uint64_t p : {3ull, 5ull, 7ull}) {
        for (std::uint32_t c0 = 0; c0 < p; ++c0) {
            for (std::uint32_t c1 = 0; c1 < p; ++c1) {
                CHECK(irreducible_check(p, std::vector<std::uint32_t>{c0, c1, 1}) ==
                      oracle_quadratic_irreducible(p, c0, c1));
            }
        }
    }
}

TEST_CASE("GF(9) enumeration is lexicographic on coefficient vectors") {
    const Field F = Field::extension(3, 2);
    REQUIRE(F.nonzero().size() == 8);
    std::vector<std::vector<std::uint32_t>> expected;
    for (std::uint32_t c0 = 0; c0 < 3; ++c0) {
        for (std::uint32_t c1 = 0; c1 < 3; ++c1) {
            if (c0 || c1) expected.push_back({c0, c1});
        }
    }
    for (std::size_t i = 0; i < 8; ++i) {
        CHECK(F.coeffs(F.nonzero()[i]) == expected[i]);
    }
    CHECK(F.element(3) == F.one());  // (1,0) is the third nonzero vector
}

TEST_CASE("extension arithmetic matches the polynomial oracle exhaustively") {
    for (auto [p, n] : {std::pair<std::uint64_t, unsigned>{3, 2}, {3, 3}, {5, 2}}) {
        const Field F = Field::extension(p, n);
        for (std::uint64_t a = 0; a < F.q(); ++a) {
            for (std::uint64_t b = 0; b < F.q(); ++b) {
                const Fq x{static_cast<std::uint32_t>(a)}, y{static_cast<std::uint32_t>(b)};
                const auto prod = oracle_polymul(F.coeffs(x), F.coeffs(y), F.modulus(), p);
                CHECK(F.coeffs(F.mul(x, y)) == prod);
                // addition: coefficientwise
                auto ca = F.coeffs(x), cb = F.coeffs(y);
                std::vector<std::uint32_t> sum(n);
                for (unsigned i = 0; i < n; ++i) sum[i] = (ca[i] + cb[i]) % p;
                CHECK(F.coeffs(F.add(x, y)) == sum);
            }
        }
    }
}

TEST_CASE("field axioms hold exhaustively for q <= 121") {
    for (const auto& pp : scan_fields(121)) {
        const Field F = make(pp);
        CAPTURE(pp.q);
        for (Fq x : F.nonzero()) {
            CHECK(F.mul(x, F.inv(x)) == F.one());
            CHECK(F.pow(x, F.q() - 1) == F.one());
        }
        // spot associativity / distributivity on a stride of triples
        const std::uint64_t stride = std::max<std::uint64_t>(1, F.q() / 7);
        for (std::uint64_t a = 0; a < F.q(); a += stride) {
            for (std::uint64_t b = 0; b < F.q(); b += stride) {
                for (std::uint64_t c = 0; c < F.q(); c += stride) {
                    Fq x{(std::uint32_t)a}, y{(std::uint32_t)b}, z{(std::uint32_t)c};
                    CHECK(F.mul(F.mul(x, y), z) == F.mul(x, F.mul(y, z)));
                    CHECK(F.add(F.add(x, y), z) == F.add(x, F.add(y, z)));
                    CHECK(F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z)));
                    CHECK(F.mul(x, y) == F.mul(y, x));
                }
            }
        }
    }
}

TEST_CASE("inverse and division by zero") {
    const Field F = Field::prime(7);
    CHECK(F.inv(Fq{2}) == Fq{4});
    CHECK(F.inv(F.one()) == F.one());
    CHECK_THROWS_WITH_AS(F.inv(F.zero()), "division by zero", std::domain_error);
    CHECK_THROWS_AS(Field::extension(3, 2).inv(Fq{0}), std::domain_error);
}

TEST_CASE("pow basics") {
    const Field F = Field::prime(7);
    CHECK(F.pow(Fq{3}, 6) == F.one());
    CHECK(F.pow(F.zero(), 0) == F.one());  // 0^0 = 1 by convention
    CHECK(F.pow(Fq{5}, 0) == F.one());
    CHECK(F.pow(F.zero(), 4) == F.zero());
}

TEST_CASE("quadratic character") {
    const Field F = Field::prime(7);
    CHECK(F.chi(F.zero()) == 0);
    CHECK(F.chi(Fq{2}) == 1);   // 2^3 = 8 = 1
    CHECK(F.chi(Fq{3}) == -1);  // 3^3 = 27 = -1

    SUBCASE("multiplicative on nonzero arguments, exhaustive q <= 49") {
        for (const auto& pp : scan_fields(49)) {
            const Field K = make(pp);
            for (Fq x : K.nonzero()) {
                for (Fq y : K.nonzero()) {
                    CHECK(K.chi(K.mul(x, y)) == K.chi(x) * K.chi(y));
                }
            }
        }
    }
    SUBCASE("exactly (q-1)/2 squares, exhaustive q <= 121") {
        for (const auto& pp : scan_fields(121)) {
            const Field K = make(pp);
            std::size_t squares = 0;
            for (Fq x : K.nonzero()) squares += K.chi(x) == 1;
            CHECK(squares == (K.q() - 1) / 2);
        }
    }
}

TEST_CASE("legendre symbol") {
    CHECK(legendre_symbol(2, 7) == 1);  // 3^2 = 2 mod 7
    CHECK(legendre_symbol(0, 7) == 0);
    CHECK(legendre_symbol(3, 7) == -1);
    CHECK(legendre_symbol(-1, 5) == 1);
    CHECK_THROWS_AS(legendre_symbol(1, 8), std::invalid_argument);
    CHECK_THROWS_AS(legendre_symbol(1, 15), std::invalid_argument);

    const Field F = Field::prime(13);
    for (std::int64_t a = -13; a <= 13; ++a) {
        CHECK(legendre_symbol(a, 13) == F.chi(F.from_int(a)));
    }
}

TEST_CASE("primitive elements") {
    CHECK(Field::prime(7).primitive_element() == Fq{3});  // 2 has order 3
    CHECK(Field::prime(3).primitive_element() == Fq{2});
    for (const auto& pp : scan_fields(121)) {
        const Field F = make(pp);
        const Fq g = F.primitive_element();
        CHECK(F.pow(g, F.q() - 1) == F.one());
        for (std::uint64_t l : distinct_prime_factors(F.q() - 1)) {
            CHECK_FALSE(F.pow(g, (F.q() - 1) / l) == F.one());
        }
        // first in canonical order
        for (std::uint32_t c = 1; c < g.code; ++c) {
            bool primitive = true;
            for (std::uint64_t l : distinct_prime_factors(F.q() - 1)) {
                if (F.pow(Fq{c}, (F.q() - 1) / l) == F.one()) primitive = false;
            }
            CHECK_FALSE(primitive);
        }
    }
}

TEST_CASE("power sums") {
    const Field F7 = Field::prime(7);
    CHECK(F7.power_sum(6) == F7.from_int(-1));
    CHECK(F7.power_sum(4) == F7.zero());
    CHECK(F7.power_sum(0) == F7.from_int(-1));
    CHECK(F7.power_sum(-6) == F7.from_int(-1));  // negative exponents via inverses
    CHECK(F7.power_sum(-1) == F7.zero());
    CHECK(Field::prime(3).power_sum(1) == Fq{0});  // 1 + 2 = 0

    SUBCASE("divisor is q-1, all q <= 121, 0 <= k <= 3(q-1)") {
        for (const auto& pp : scan_fields(121)) {
            const Field F = make(pp);
            CAPTURE(pp.q);
            for (std::int64_t k = 0; k <= 3 * static_cast<std::int64_t>(F.q() - 1); ++k) {
                const Fq expected = (k % static_cast<std::int64_t>(F.q() - 1) == 0) ? F.from_int(-1) : F.zero();
                CHECK(F.power_sum(k) == expected);
            }
        }
    }
}

TEST_CASE("square roots") {
    const Field F = Field::prime(7);
    CHECK(F.sqrt(Fq{2}) == Fq{3});  // 3^2 = 2 and 3 precedes 4
    CHECK(F.sqrt(F.zero()) == F.zero());
    CHECK_FALSE(F.sqrt(Fq{3}).has_value());

    for (const auto& pp : scan_fields(49)) {
        const Field K = make(pp);
        for (std::uint64_t c = 0; c < K.q(); ++c) {
            const Fq x{static_cast<std::uint32_t>(c)};
            const auto r = K.sqrt(x);
            CHECK(r.has_value() == (K.chi(x) >= 0));
            if (r) CHECK(K.mul(*r, *r) == x);
        }
    }
}

TEST_CASE("prime subfield embedding and lift") {
    const Field F = Field::extension(3, 2);
    CHECK(F.from_int(5) == F.from_int(2));
    CHECK(F.lift(F.from_int(2)) == 2);
    CHECK(F.in_prime_subfield(F.from_int(2)));
    CHECK_FALSE(F.in_prime_subfield(Fq{1}));  // the element x
    CHECK_THROWS_AS(F.lift(Fq{1}), std::domain_error);
    CHECK(F.from_int(-1) == F.neg(F.one()));

    const auto c = F.coeffs(F.from_coeffs(std::vector<std::uint32_t>{2, 1}));
    CHECK(c == std::vector<std::uint32_t>{2, 1});
    CHECK_THROWS_AS(F.from_coeffs(std::vector<std::uint32_t>{1}), std::invalid_argument);
}

TEST_CASE("prime power enumeration") {
    const auto pps = odd_prime_powers(3, 49);
    std::vector<std::uint64_t> got;
    for (const auto& pp : pps) got.push_back(pp.q);
    CHECK(got == std::vector<std::uint64_t>{3, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29, 31, 37, 41, 43, 47, 49});
    for (const auto& pp : pps) CHECK(pp.q == [&] { std::uint64_t v = 1; for (unsigned i = 0; i < pp.n; ++i) v *= pp.p; return v; }());
    CHECK(odd_prime_powers(15, 16).empty());
    CHECK(is_prime(2));
    CHECK_FALSE(is_prime(1));
    CHECK(factorize(360) == std::vector<std::uint64_t>{2, 2, 2, 3, 3, 5});
    CHECK(distinct_prime_factors(360) == std::vector<std::uint64_t>{2, 3, 5});
}

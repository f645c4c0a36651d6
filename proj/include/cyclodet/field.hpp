#ifndef CYCLODET_FIELD_HPP
#define CYCLODET_FIELD_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace cyclodet {

// Element of a Field, held as a canonical code in [0, q).
//
// Prime field: the code is the residue itself. Extension field GF(p^n):
// the code packs the coefficient vector (c_0, ..., c_{n-1}) base p with the
// constant coefficient c_0 as the most significant digit, so ascending codes
// walk the canonical enumeration order. Two elements are equal iff their
// codes are equal. Arithmetic lives on Field; an Fq is meaningless without
// the field that minted it.
struct Fq {
    std::uint32_t code = 0;
    friend bool operator==(Fq, Fq) = default;
};

// GF(q) = GF(p^n) for odd prime p. Immutable after construction; all
// operations are const and safe to call concurrently.
//
// The canonical enumeration a_1, ..., a_{q-1} of nonzero elements is
// residues 1..p-1 for prime fields and lexicographic order on coefficient
// vectors (constant coefficient compared first) for extensions. Under the
// code packing above, a_i always has code i.
class Field {
public:
    // Prime field GF(p). Rejects p even, p < 3, composite p, and p beyond
    // the trial-division desk scale (p < 10^6), each with its own message.
    static Field prime(std::uint64_t p);

    // Extension field GF(p^n), n >= 2, with the lexicographically smallest
    // monic irreducible modulus of degree n (coefficients compared from the
    // constant term upward). Deterministic across runs. n = 1 is rejected:
    // use prime() so the modulus is unambiguous.
    static Field extension(std::uint64_t p, unsigned n);

    std::uint64_t p() const { return p_; }
    unsigned deg() const { return n_; }
    std::uint64_t q() const { return q_; }

    // Monic modulus, ascending coefficients, length deg()+1. The formal
    // polynomial x (= {0,1}) for prime fields.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    Fq zero() const { return Fq{0}; }
    Fq one() const { return one_; }

    // Embedding of an integer into the prime subfield.
    Fq from_int(std::int64_t v) const;

    // Element from a coefficient vector (c_0, ..., c_{n-1}), entries reduced
    // mod p on the way in.
    Fq from_coeffs(std::span<const std::uint32_t> coeffs) const;

    // Canonical coefficient vector of length deg().
    std::vector<std::uint32_t> coeffs(Fq x) const;

    bool in_prime_subfield(Fq x) const;

    // Integer representative in [0, p) of a prime-subfield element; throws
    // std::domain_error otherwise.
    std::uint64_t lift(Fq x) const;

    // a_i of the canonical enumeration, 1-based.
    Fq element(std::uint64_t i) const { return Fq{static_cast<std::uint32_t>(i)}; }

    // The canonical enumeration a_1, ..., a_{q-1}.
    const std::vector<Fq>& nonzero() const { return nonzero_; }

    Fq add(Fq a, Fq b) const;
    Fq sub(Fq a, Fq b) const;
    Fq neg(Fq a) const;
    Fq mul(Fq a, Fq b) const;

    // Multiplicative inverse; throws std::domain_error("division by zero").
    Fq inv(Fq x) const;

    // Square-and-multiply; pow(x, 0) = one() for every x, including zero.
    Fq pow(Fq x, std::uint64_t e) const;

    // Quadratic character: 0 at zero, else the sign of x^((q-1)/2).
    int chi(Fq x) const;

    // First u in canonical order (0 included) with u*u = x, or nullopt when
    // x is a nonsquare. Brute-force scan; absence is a value, not an error.
    std::optional<Fq> sqrt(Fq x) const;

    // First element of the canonical enumeration with multiplicative order
    // q-1, certified by g^((q-1)/l) != 1 for every prime l | q-1.
    Fq primitive_element() const { return gen_; }

    // Sum of x^k over the nonzero elements, by direct summation. Negative k
    // is resolved as (x^{-1})^{|k|}. Equals -1 when (q-1) | k, else 0.
    Fq power_sum(std::int64_t k) const;

private:
    Field() = default;
    void init_prime_tables();
    void init_extension_tables();

    std::uint64_t p_ = 0;
    std::uint64_t q_ = 0;
    unsigned n_ = 1;
    std::vector<std::uint32_t> modulus_;
    Fq one_{1};
    Fq gen_{0};
    std::vector<Fq> nonzero_;

    // Extension-field tables (empty for n = 1).
    std::vector<std::uint32_t> digits_;   // q*n, digits_[code*n + i] = c_i
    std::vector<std::uint32_t> encode_pw_;  // p^{n-1-i}
    std::vector<std::uint32_t> exp_;      // q-1, exp_[k] = code of g^k
    std::vector<std::uint32_t> log_;      // q, log_[exp_[k]] = k
};

// True iff the monic polynomial f over GF(p) (ascending coefficients) is
// irreducible, by the x^(p^n) = x criterion plus gcd(x^(p^(n/l)) - x, f) = 1
// for each prime l dividing n. Throws on non-monic input.
bool irreducible_check(std::uint64_t p, std::span<const std::uint32_t> f);

// Legendre symbol (a/p) by the Euler criterion; integer-level convenience
// that agrees with Field::chi on GF(p).
int legendre_symbol(std::int64_t a, std::uint64_t p);

// GF(q) for an odd prime power q, dispatching on the factorization of q.
Field field_of_order(std::uint64_t q);

// Configured field-order bound: CYCLODET_MAX_Q from the environment, or
// 2048 when unset. Read once per process.
std::uint64_t max_field_order();

}  // namespace cyclodet

#endif

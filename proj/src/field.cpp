#include "cyclodet/field.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

#include "cyclodet/primes.hpp"

namespace cyclodet {
namespace {

std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p) {
    return powmod_u64(a, p - 2, p);
}

// Dense polynomials over GF(p): ascending coefficients, no trailing zeros.
using Poly = std::vector<std::uint64_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m.
Poly poly_mod(Poly a, const Poly& m, std::uint64_t p) {
    while (a.size() >= m.size()) {
        std::uint64_t c = a.back();
        if (c != 0) {
            std::size_t shift = a.size() - m.size();
            for (std::size_t i = 0; i + 1 < m.size(); ++i) {
                std::uint64_t s = c * m[i] % p;
                a[shift + i] = (a[shift + i] + p - s) % p;
            }
        }
        a.pop_back();
    }
    trim(a);
    return a;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
        }
    }
    return poly_mod(std::move(out), m, p);
}

Poly poly_pow_mod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p) {
    Poly r{1};
    base = poly_mod(std::move(base), m, p);
    while (e) {
        if (e & 1) r = poly_mul_mod(r, base, m, p);
        base = poly_mul_mod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

Poly poly_monic(Poly a, std::uint64_t p) {
    trim(a);
    if (a.empty() || a.back() == 1) return a;
    std::uint64_t s = invmod_u64(a.back(), p);
    for (auto& c : a) c = c * s % p;
    return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly bm = poly_monic(std::move(b), p);
        Poly r = poly_mod(std::move(a), bm, p);
        a = std::move(bm);
        b = std::move(r);
    }
    return poly_monic(std::move(a), p);
}

constexpr std::uint64_t kPrimeCharBound = 1000000;  // trial-division desk scale
constexpr std::uint64_t kHardOrderCap = std::uint64_t{1} << 24;  // extension tables are O(q * deg)

void validate_characteristic(std::uint64_t p) {
    if (p % 2 == 0) throw std::invalid_argument("even characteristic");
    if (p == 1) throw std::invalid_argument("p = 1 is a unit, not a prime");
    if (p >= kPrimeCharBound) throw std::invalid_argument("characteristic too large for trial division (need p < 10^6)");
    if (!is_prime(p)) throw std::invalid_argument("composite characteristic");
}

}  // namespace

std::uint64_t max_field_order() {
    static const std::uint64_t bound = [] {
        if (const char* env = std::getenv("CYCLODET_MAX_Q")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v >= 3) return static_cast<std::uint64_t>(v);
        }
        return std::uint64_t{2048};
    }();
    return bound;
}

bool irreducible_check(std::uint64_t p, std::span<const std::uint32_t> f) {
    validate_characteristic(p);
    Poly fp(f.begin(), f.end());
    for (auto& c : fp) c %= p;
    trim(fp);
    if (fp.size() < 2 || fp.back() != 1) throw std::invalid_argument("non-monic polynomial");

    const std::size_t n = fp.size() - 1;
    const Poly x{0, 1};
    const Poly x_red = poly_mod(x, fp, p);

    // frob[k] = x^(p^k) mod f
    std::vector<Poly> frob(n + 1);
    frob[0] = x_red;
    for (std::size_t k = 1; k <= n; ++k) {
        frob[k] = poly_pow_mod(frob[k - 1], p, fp, p);
    }
    if (frob[n] != x_red) return false;

    for (std::uint64_t l : distinct_prime_factors(n)) {
        // x^(p^(n/l)) - x must be coprime to f
        Poly d = frob[n / l];
        if (d.size() < x_red.size()) d.resize(x_red.size(), 0);
        for (std::size_t i = 0; i < x_red.size(); ++i) {
            d[i] = (d[i] + p - x_red[i]) % p;
        }
        Poly g = poly_gcd(std::move(d), fp, p);
        if (g.size() != 1) return false;
    }
    return true;
}

int legendre_symbol(std::int64_t a, std::uint64_t p) {
    validate_characteristic(p);
    std::int64_t ps = static_cast<std::int64_t>(p);
    std::uint64_t r = static_cast<std::uint64_t>(((a % ps) + ps) % ps);
    if (r == 0) return 0;
    return powmod_u64(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

Field field_of_order(std::uint64_t q) {
    PrimePower pp;
    if (!as_prime_power(q, pp) || pp.p == 2) throw std::invalid_argument("q must be an odd prime power");
    return pp.n == 1 ? Field::prime(pp.p) : Field::extension(pp.p, pp.n);
}

Field Field::prime(std::uint64_t p) {
    validate_characteristic(p);
    Field F;
    F.p_ = p;
    F.q_ = p;
    F.n_ = 1;
    F.modulus_ = {0, 1};  // the formal polynomial x
    F.one_ = Fq{1};
    F.init_prime_tables();
    return F;
}

Field Field::extension(std::uint64_t p, unsigned n) {
    validate_characteristic(p);
    if (n < 2) throw std::invalid_argument("extension degree must be >= 2; use Field::prime for GF(p)");

    const std::uint64_t bound = std::min(max_field_order(), kHardOrderCap);
    std::uint64_t q = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (q > bound / p) throw std::invalid_argument("field order exceeds configured bound (CYCLODET_MAX_Q)");
        q *= p;
    }

    Field F;
    F.p_ = p;
    F.q_ = q;
    F.n_ = n;

    // Lexicographically smallest monic irreducible modulus, coefficients
    // compared from the constant term upward.
    std::vector<std::uint32_t> cand(n + 1, 0);
    cand[n] = 1;
    bool found = false;
    while (!found) {
        if (irreducible_check(p, cand)) {
            found = true;
            break;
        }
        // odometer on (c_0, ..., c_{n-1}) with c_{n-1} fastest
        int i = static_cast<int>(n) - 1;
        for (; i >= 0; --i) {
            if (++cand[i] < p) break;
            cand[i] = 0;
        }
        if (i < 0) break;
    }
    if (!found) throw std::logic_error("no irreducible modulus found");  // unreachable for prime p
    F.modulus_ = std::move(cand);
    F.init_extension_tables();
    return F;
}

void Field::init_prime_tables() {
    nonzero_.resize(p_ - 1);
    for (std::uint64_t i = 1; i < p_; ++i) nonzero_[i - 1] = Fq{static_cast<std::uint32_t>(i)};

    auto factors = distinct_prime_factors(p_ - 1);
    for (std::uint64_t g = 1; g < p_; ++g) {
        bool primitive = true;
        for (std::uint64_t l : factors) {
            if (powmod_u64(g, (p_ - 1) / l, p_) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            gen_ = Fq{static_cast<std::uint32_t>(g)};
            return;
        }
    }
    throw std::logic_error("no primitive element found");  // unreachable
}

void Field::init_extension_tables() {
    const std::uint64_t q = q_;
    const unsigned n = n_;

    encode_pw_.resize(n);
    encode_pw_[n - 1] = 1;
    for (unsigned i = n - 1; i > 0; --i) {
        encode_pw_[i - 1] = static_cast<std::uint32_t>(encode_pw_[i] * p_);
    }
    one_ = Fq{encode_pw_[0]};

    // code -> coefficient vector, filled by an odometer on c_{n-1}.
    digits_.assign(q * n, 0);
    std::vector<std::uint32_t> cur(n, 0);
    for (std::uint64_t code = 0; code < q; ++code) {
        for (unsigned i = 0; i < n; ++i) digits_[code * n + i] = cur[i];
        for (int i = static_cast<int>(n) - 1; i >= 0; --i) {
            if (++cur[i] < p_) break;
            cur[i] = 0;
        }
    }

    nonzero_.resize(q - 1);
    for (std::uint64_t i = 1; i < q; ++i) nonzero_[i - 1] = Fq{static_cast<std::uint32_t>(i)};

    Poly mod_poly(modulus_.begin(), modulus_.end());
    auto decode = [&](std::uint64_t code) {
        Poly a(n, 0);
        for (unsigned i = 0; i < n; ++i) a[i] = digits_[code * n + i];
        trim(a);
        return a;
    };
    auto encode = [&](const Poly& a) {
        std::uint64_t code = 0;
        for (std::size_t i = 0; i < a.size(); ++i) code += a[i] * encode_pw_[i];
        return static_cast<std::uint32_t>(code);
    };

    // First primitive element in canonical order.
    auto factors = distinct_prime_factors(q - 1);
    const Poly one_poly{1};
    bool have_gen = false;
    for (std::uint64_t code = 1; code < q && !have_gen; ++code) {
        Poly g = decode(code);
        bool primitive = true;
        for (std::uint64_t l : factors) {
            if (poly_pow_mod(g, (q - 1) / l, mod_poly, p_) == one_poly) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            gen_ = Fq{static_cast<std::uint32_t>(code)};
            have_gen = true;
        }
    }
    if (!have_gen) throw std::logic_error("no primitive element found");

    // Discrete exp/log tables off the primitive element.
    exp_.assign(q - 1, 0);
    log_.assign(q, 0);
    Poly g = decode(gen_.code);
    Poly cur_pow{1};
    for (std::uint64_t k = 0; k < q - 1; ++k) {
        std::uint32_t code = encode(cur_pow);
        exp_[k] = code;
        log_[code] = static_cast<std::uint32_t>(k);
        cur_pow = poly_mul_mod(cur_pow, g, mod_poly, p_);
    }
    if (cur_pow != one_poly) throw std::logic_error("primitive element order mismatch");
}

Fq Field::from_int(std::int64_t v) const {
    std::int64_t ps = static_cast<std::int64_t>(p_);
    std::uint64_t r = static_cast<std::uint64_t>(((v % ps) + ps) % ps);
    if (n_ == 1) return Fq{static_cast<std::uint32_t>(r)};
    return Fq{static_cast<std::uint32_t>(r * encode_pw_[0])};
}

Fq Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
    if (coeffs.size() != n_) throw std::invalid_argument("coefficient vector length must equal the field degree");
    if (n_ == 1) return Fq{static_cast<std::uint32_t>(coeffs[0] % p_)};
    std::uint64_t code = 0;
    for (unsigned i = 0; i < n_; ++i) code += (coeffs[i] % p_) * static_cast<std::uint64_t>(encode_pw_[i]);
    return Fq{static_cast<std::uint32_t>(code)};
}

std::vector<std::uint32_t> Field::coeffs(Fq x) const {
    if (n_ == 1) return {x.code};
    return {digits_.begin() + static_cast<std::ptrdiff_t>(x.code) * n_,
            digits_.begin() + static_cast<std::ptrdiff_t>(x.code) * n_ + n_};
}

bool Field::in_prime_subfield(Fq x) const {
    if (n_ == 1) return true;
    return x.code % encode_pw_[0] == 0;  // non-constant digits all zero
}

std::uint64_t Field::lift(Fq x) const {
    if (!in_prime_subfield(x)) throw std::domain_error("element is not in the prime subfield");
    return n_ == 1 ? x.code : x.code / encode_pw_[0];
}

Fq Field::add(Fq a, Fq b) const {
    if (n_ == 1) {
        std::uint64_t s = static_cast<std::uint64_t>(a.code) + b.code;
        if (s >= p_) s -= p_;
        return Fq{static_cast<std::uint32_t>(s)};
    }
    const std::uint32_t* da = &digits_[static_cast<std::size_t>(a.code) * n_];
    const std::uint32_t* db = &digits_[static_cast<std::size_t>(b.code) * n_];
    std::uint64_t code = 0;
    for (unsigned i = 0; i < n_; ++i) {
        std::uint64_t s = static_cast<std::uint64_t>(da[i]) + db[i];
        if (s >= p_) s -= p_;
        code += s * encode_pw_[i];
    }
    return Fq{static_cast<std::uint32_t>(code)};
}

Fq Field::sub(Fq a, Fq b) const {
    if (n_ == 1) {
        std::uint64_t s = static_cast<std::uint64_t>(a.code) + p_ - b.code;
        if (s >= p_) s -= p_;
        return Fq{static_cast<std::uint32_t>(s)};
    }
    const std::uint32_t* da = &digits_[static_cast<std::size_t>(a.code) * n_];
    const std::uint32_t* db = &digits_[static_cast<std::size_t>(b.code) * n_];
    std::uint64_t code = 0;
    for (unsigned i = 0; i < n_; ++i) {
        std::uint64_t s = static_cast<std::uint64_t>(da[i]) + p_ - db[i];
        if (s >= p_) s -= p_;
        code += s * encode_pw_[i];
    }
    return Fq{static_cast<std::uint32_t>(code)};
}

Fq Field::neg(Fq a) const {
    return sub(zero(), a);
}

Fq Field::mul(Fq a, Fq b) const {
    if (n_ == 1) {
        return Fq{static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.code) * b.code % p_)};
    }
    if (a.code == 0 || b.code == 0) return Fq{0};
    std::uint64_t k = static_cast<std::uint64_t>(log_[a.code]) + log_[b.code];
    if (k >= q_ - 1) k -= q_ - 1;
    return Fq{exp_[k]};
}

Fq Field::inv(Fq x) const {
    if (x.code == 0) throw std::domain_error("division by zero");
    if (n_ == 1) return Fq{static_cast<std::uint32_t>(invmod_u64(x.code, p_))};
    std::uint64_t k = log_[x.code];
    return Fq{exp_[k == 0 ? 0 : q_ - 1 - k]};
}

Fq Field::pow(Fq x, std::uint64_t e) const {
    Fq r = one_;
    Fq base = x;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

int Field::chi(Fq x) const {
    if (x.code == 0) return 0;
    return pow(x, (q_ - 1) / 2) == one_ ? 1 : -1;
}

std::optional<Fq> Field::sqrt(Fq x) const {
    if (x.code == 0) return Fq{0};
    for (Fq u : nonzero_) {
        if (mul(u, u) == x) return u;
    }
    return std::nullopt;
}

Fq Field::power_sum(std::int64_t k) const {
    const bool negative = k < 0;
    const std::uint64_t e = negative ? -static_cast<std::uint64_t>(k) : static_cast<std::uint64_t>(k);
    Fq s = zero();
    for (Fq x : nonzero_) {
        Fq b = negative ? inv(x) : x;
        s = add(s, pow(b, e));
    }
    return s;
}

}  // namespace cyclodet

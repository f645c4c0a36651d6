#include "cyclodet/primes.hpp"

namespace cyclodet {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<std::uint64_t> factorize(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; d == 2 ? d = 3 : d += 2) {
        while (n % d == 0) {
            out.push_back(d);
            n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t f : factorize(n)) {
        if (out.empty() || out.back() != f) out.push_back(f);
    }
    return out;
}

bool as_prime_power(std::uint64_t q, PrimePower& out) {
    if (q < 2) return false;
    auto fs = factorize(q);
    for (std::size_t i = 1; i < fs.size(); ++i) {
        if (fs[i] != fs[0]) return false;
    }
    out.q = q;
    out.p = fs[0];
    out.n = static_cast<unsigned>(fs.size());
    return true;
}

std::vector<PrimePower> odd_prime_powers(std::uint64_t lo, std::uint64_t hi) {
    std::vector<PrimePower> out;
    if (lo < 3) lo = 3;
    for (std::uint64_t q = lo | 1; q <= hi; q += 2) {
        PrimePower pp;
        if (as_prime_power(q, pp) && pp.p != 2) out.push_back(pp);
    }
    return out;
}

}  // namespace cyclodet

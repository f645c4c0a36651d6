#include "cyclodet/trinomial.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "cyclodet/primes.hpp"

namespace cyclodet {

const Int& TrinomialRow::at(std::int64_t k) const {
    static const Int zero = 0;
    if (k < -n || k > n) return zero;
    return coeffs[static_cast<std::size_t>(k + n)];
}

namespace {

void validate_modulus(const std::optional<std::uint64_t>& modulus) {
    if (!modulus) return;
    if (*modulus < 3 || *modulus % 2 == 0 || !is_prime(*modulus)) {
        throw std::invalid_argument("invalid modulus: need an odd prime");
    }
}

}  // namespace

TrinomialRow trinomial_row(std::int64_t n, std::optional<std::uint64_t> modulus) {
    if (n < 0) throw std::invalid_argument("negative trinomial order");
    validate_modulus(modulus);

    std::vector<Int> row{1};
    for (std::int64_t step = 0; step < n; ++step) {
        std::vector<Int> next(row.size() + 2, 0);
        for (std::size_t i = 0; i < row.size(); ++i) {
            next[i] += row[i];
            next[i + 1] += row[i];
            next[i + 2] += row[i];
        }
        if (modulus) {
            for (auto& c : next) c %= static_cast<unsigned long>(*modulus);
        }
        row = std::move(next);
    }
    return TrinomialRow{n, modulus, std::move(row)};
}

std::shared_ptr<const TrinomialRow> trinomial_row_cached(std::int64_t n, std::optional<std::uint64_t> modulus) {
    static std::mutex mu;
    static std::map<std::pair<std::int64_t, std::uint64_t>, std::shared_ptr<const TrinomialRow>> cache;

    const auto key = std::make_pair(n, modulus.value_or(0));
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto row = std::make_shared<const TrinomialRow>(trinomial_row(n, modulus));
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.emplace(key, std::move(row));
    return it->second;
}

Int central_trinomial(std::int64_t n, std::optional<std::uint64_t> modulus) {
    return trinomial_row_cached(n, modulus)->at(0);
}

Int central_trinomial_recurrence(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("negative trinomial order");
    Int prev2 = 1, prev1 = 1;  // T_0, T_1
    if (n == 0) return prev2;
    if (n == 1) return prev1;
    for (std::int64_t m = 2; m <= n; ++m) {
        Int t = ((2 * m - 1) * prev1 + 3 * (m - 1) * prev2) / m;
        prev2 = std::move(prev1);
        prev1 = std::move(t);
    }
    return prev1;
}

Int trinomial_coeff(std::int64_t n, std::int64_t k, std::optional<std::uint64_t> modulus) {
    if (n < 0) throw std::invalid_argument("negative trinomial order");
    if (k < -n || k > n) return 0;
    return trinomial_row_cached(n, modulus)->at(k);
}

}  // namespace cyclodet

#include "cyclodet/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace cyclodet {
namespace {

// Shared elimination core. Returns the determinant and, through *out_rank,
// the echelon rank. For the determinant alone it stops at the first
// pivotless column; rank computation continues across zero columns.
Fq eliminate(const FqMatrix& M, bool need_rank, std::size_t* out_rank, bool parallel) {
    const Field& F = M.field();
    const std::size_t m = M.dim();
    std::vector<Fq> a(m * m);
    for (std::size_t i = 0; i < m; ++i) {
        auto r = M.row(i);
        std::copy(r.begin(), r.end(), a.begin() + static_cast<std::ptrdiff_t>(i * m));
    }

    Fq det = F.one();
    bool singular = false;
    std::size_t rank = 0;
    std::size_t pivot_row = 0;

    for (std::size_t col = 0; col < m && pivot_row < m; ++col) {
        std::size_t piv = pivot_row;
        while (piv < m && a[piv * m + col] == F.zero()) ++piv;
        if (piv == m) {
            singular = true;
            if (!need_rank) break;
            continue;
        }
        if (piv != pivot_row) {
            for (std::size_t j = col; j < m; ++j) std::swap(a[piv * m + j], a[pivot_row * m + j]);
            det = F.neg(det);
        }
        const Fq pivot = a[pivot_row * m + col];
        det = F.mul(det, pivot);
        const Fq pivot_inv = F.inv(pivot);
        const std::size_t pr = pivot_row;

        const std::int64_t lo = static_cast<std::int64_t>(pr) + 1;
        const std::int64_t hi = static_cast<std::int64_t>(m);
#pragma omp parallel for schedule(static) if (parallel && hi - lo > 16)
        for (std::int64_t i = lo; i < hi; ++i) {
            const std::size_t row = static_cast<std::size_t>(i);
            const Fq f = F.mul(a[row * m + col], pivot_inv);
            if (f == F.zero()) continue;
            for (std::size_t j = col; j < m; ++j) {
                a[row * m + j] = F.sub(a[row * m + j], F.mul(f, a[pr * m + j]));
            }
        }
        ++pivot_row;
        ++rank;
    }
    if (pivot_row < m) singular = true;
    if (out_rank) *out_rank = rank;
    return singular ? F.zero() : det;
}

}  // namespace

Fq determinant(const FqMatrix& M) {
    return eliminate(M, false, nullptr, true);
}

std::size_t rank(const FqMatrix& M) {
    std::size_t r = 0;
    eliminate(M, true, &r, true);
    return r;
}

FqMatrix circulant(const Field& F, std::span<const Fq> row) {
    const std::size_t m = row.size();
    if (m == 0) throw std::invalid_argument("empty circulant row");
    FqMatrix M(F, m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            M.at(i, j) = row[(j + m - i) % m];  // t_{(j-i) mod m}
        }
    }
    return M;
}

Fq vandermonde_pair_product(const Field& F, std::span<const Fq> xs) {
    std::unordered_set<std::uint32_t> seen;
    for (Fq x : xs) {
        if (x == F.zero()) throw std::invalid_argument("zero entry in pair product");
        if (!seen.insert(x.code).second) throw std::invalid_argument("repeated entry in pair product");
    }
    std::vector<Fq> invs(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) invs[i] = F.inv(xs[i]);
    Fq prod = F.one();
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
            prod = F.mul(prod, F.mul(F.sub(xs[j], xs[i]), F.sub(invs[j], invs[i])));
        }
    }
    return prod;
}

std::vector<Int> char_poly(const ZMatrix& M) {
    const std::size_t n = M.dim();
    if (n == 0) throw std::invalid_argument("empty matrix");
    if (n > kCharPolyMaxDim) throw std::invalid_argument("char_poly dimension bound exceeded");

    // Samuelson-Berkowitz: P_k = T_k * P_{k-1}, where P_{k-1} holds the
    // characteristic polynomial of the leading (k-1)x(k-1) block in
    // descending powers and T_k is Toeplitz with diagonals
    // 1, -a, -(R S), -(R M S), -(R M^2 S), ...
    std::vector<Int> P{1, -M.at(0, 0)};
    for (std::size_t k = 1; k < n; ++k) {
        std::vector<Int> diag;
        diag.reserve(k + 2);
        diag.emplace_back(1);
        diag.push_back(-M.at(k, k));
        std::vector<Int> s(k);
        for (std::size_t i = 0; i < k; ++i) s[i] = M.at(i, k);
        for (std::size_t d = 2; d <= k + 1; ++d) {
            if (d >= 3) {
                std::vector<Int> next(k, Int(0));
                for (std::size_t i = 0; i < k; ++i) {
                    for (std::size_t t = 0; t < k; ++t) next[i] += M.at(i, t) * s[t];
                }
                s = std::move(next);
            }
            Int dot = 0;
            for (std::size_t t = 0; t < k; ++t) dot += M.at(k, t) * s[t];
            diag.push_back(-dot);
        }

        std::vector<Int> Q(k + 2, Int(0));
        for (std::size_t i = 0; i < k + 2; ++i) {
            for (std::size_t j = 0; j < k + 1 && j <= i; ++j) {
                if (i - j < diag.size()) Q[i] += diag[i - j] * P[j];
            }
        }
        P = std::move(Q);
    }

    std::reverse(P.begin(), P.end());  // ascending: P[i] = coeff of t^i
    return P;
}

namespace reference {

Fq determinant(const FqMatrix& M) {
    return eliminate(M, false, nullptr, false);
}

std::size_t rank(const FqMatrix& M) {
    std::size_t r = 0;
    eliminate(M, true, &r, false);
    return r;
}

Fq determinant_cofactor(const FqMatrix& M) {
    const Field& F = M.field();
    const std::size_t m = M.dim();
    if (m > 6) throw std::invalid_argument("cofactor expansion limited to dim <= 6");
    if (m == 1) return M.at(0, 0);
    Fq acc = F.zero();
    for (std::size_t c = 0; c < m; ++c) {
        FqMatrix minor(F, m - 1);
        for (std::size_t i = 1; i < m; ++i) {
            std::size_t jj = 0;
            for (std::size_t j = 0; j < m; ++j) {
                if (j == c) continue;
                minor.at(i - 1, jj++) = M.at(i, j);
            }
        }
        Fq term = F.mul(M.at(0, c), determinant_cofactor(minor));
        acc = (c % 2 == 0) ? F.add(acc, term) : F.sub(acc, term);
    }
    return acc;
}

}  // namespace reference

}  // namespace cyclodet

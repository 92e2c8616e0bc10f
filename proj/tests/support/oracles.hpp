// Independent reference computations for the test suites. Everything here
// works on plain gmp rationals and dense nested vectors so it shares no
// elimination or composition code with the library.
#ifndef NDGA_TESTS_ORACLES_HPP
#define NDGA_TESTS_ORACLES_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ndga/graded.hpp"
#include "ndga/matrix.hpp"

namespace oracle {

using Q = mpq_class;
using Dense = std::vector<std::vector<Q>>;

inline Dense zeros(std::size_t r, std::size_t c) { return Dense(r, std::vector<Q>(c, Q(0))); }

inline Dense eye(std::size_t n) {
    Dense m = zeros(n, n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

/// Global matrix of a map: column j is the image of the j-th source basis vector.
inline Dense dense(const ndga::GradedMap& f) {
    const auto& S = *f.source();
    const auto& T = *f.target();
    Dense m = zeros(T.total_dim(), S.total_dim());
    for (std::size_t j = 0; j < S.total_dim(); ++j) {
        const ndga::Vector col = f.apply(S.basis_vector(S.label(j)));
        for (std::size_t i = 0; i < col.size(); ++i) m[i][j] = col[i].value();
    }
    return m;
}

inline Dense dense(const ndga::Matrix& a) {
    Dense m = zeros(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j).value();
    return m;
}

inline Dense mul(const Dense& a, const Dense& b) {
    const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    Dense c = zeros(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (sgn(a[i][l]) == 0) continue;
            for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

inline Dense add(const Dense& a, const Dense& b) {
    Dense c = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) c[i][j] += b[i][j];
    return c;
}

inline Dense scale(const Dense& a, const Q& s) {
    Dense c = a;
    for (auto& row : c)
        for (auto& x : row) x *= s;
    return c;
}

inline Dense pow(const Dense& a, unsigned n) {
    Dense out = eye(a.size());
    for (unsigned k = 0; k < n; ++k) out = mul(a, out);
    return out;
}

inline bool is_zero(const Dense& a) {
    for (const auto& row : a)
        for (const auto& x : row)
            if (sgn(x) != 0) return false;
    return true;
}

/// Rank by plain elimination with the largest-magnitude pivot (a different
/// pivot rule from the library's first-nonzero choice).
inline std::size_t rank(Dense a) {
    std::size_t r = 0;
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t best = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (sgn(a[i][c]) != 0 && (best == rows || abs(a[i][c]) > abs(a[best][c]))) best = i;
        if (best == rows) continue;
        std::swap(a[r], a[best]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (sgn(a[i][c]) == 0) continue;
            const Q f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

/// Laplace expansion along the first row.
inline Q cofactor_det(const Dense& a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    if (n == 1) return a[0][0];
    Q total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (sgn(a[0][j]) == 0) continue;
        Dense minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Q> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(a[i][k]);
            minor.push_back(std::move(row));
        }
        const Q term = a[0][j] * cofactor_det(minor);
        total += (j % 2 == 0) ? term : Q(-term);
    }
    return total;
}

inline int permutation_sign(const std::vector<unsigned>& p) {
    unsigned inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inversions;
    return inversions % 2 ? -1 : 1;
}

/// Coefficient of dx_1...dx_2n in (1/n!) (Σ_{k<l} F_kl dx_k dx_l)^n, computed
/// from the full sum over S_{2n}: Σ_σ sgn σ Π_k F_{σ(2k-1) σ(2k)} / (2^n n!).
inline Q wedge_power_top(const ndga::Matrix& F) {
    const unsigned two_n = static_cast<unsigned>(F.rows());
    std::vector<unsigned> perm(two_n);
    std::iota(perm.begin(), perm.end(), 0U);
    Q total = 0;
    do {
        Q term = permutation_sign(perm);
        for (unsigned k = 0; k < two_n; k += 2) {
            term *= F(perm[k], perm[k + 1]).value();
            if (sgn(term) == 0) break;
        }
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    Q norm = 1;
    for (unsigned k = 1; k <= two_n / 2; ++k) norm *= 2 * k; // 2^n n!
    return total / norm;
}

/// d^n(ab) expanded by repeated Leibniz in the free module on symbols
/// d^i(a) d^j(b). Returns coefficient of d^j(a) d^{n-j}(b), indexed by j.
inline std::vector<Q> leibniz_expansion(unsigned n, unsigned parity) {
    std::map<std::pair<unsigned, unsigned>, Q> terms{{{0, 0}, Q(1)}};
    for (unsigned step = 0; step < n; ++step) {
        std::map<std::pair<unsigned, unsigned>, Q> next;
        for (const auto& [ij, c] : terms) {
            const auto [i, j] = ij;
            next[{i + 1, j}] += c;
            // moving d past d^i(a), which has degree deg a + i
            next[{i, j + 1}] += ((parity + i) % 2 == 0) ? c : Q(-c);
        }
        terms = std::move(next);
    }
    std::vector<Q> out(n + 1, Q(0));
    for (const auto& [ij, c] : terms) out[ij.first] = c;
    return out;
}

} // namespace oracle

#endif // NDGA_TESTS_ORACLES_HPP

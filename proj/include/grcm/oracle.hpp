#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "grcm/cmmod.hpp"
#include "grcm/combinat.hpp"
#include "grcm/error.hpp"
#include "grcm/linalg.hpp"
#include "grcm/matrix.hpp"
#include "grcm/series.hpp"

namespace grcm {

/// Homomorphisms A -> B as a Q-vector space. Each basis element is a tuple of
/// per-vertex matrices h_0..h_{n-1} (rank B x rank A) with
/// x^B_i h_{i-1} = h_i x^A_i and y^B_i h_i = h_{i-1} y^A_i for every edge i.
struct HomSpace {
    int n = 0;
    int rows = 0;
    int cols = 0;
    int order = 0;
    std::vector<std::vector<Matrix>> basis;

    int dimension() const noexcept { return static_cast<int>(basis.size()); }
};

inline bool is_homomorphism(const QuiverRep& A, const QuiverRep& B, const std::vector<Matrix>& h) {
    for (int i = 1; i <= A.n(); ++i) {
        const Matrix& from = h[static_cast<std::size_t>(i - 1)];
        const Matrix& to = h[static_cast<std::size_t>(i % A.n())];
        if (B.x(i) * from != to * A.x(i)) return false;
        if (B.y(i) * to != from * A.y(i)) return false;
    }
    return true;
}

namespace detail {

// Unknown index of coefficient d of entry (row, col) of h_vertex.
struct HomLayout {
    int n, rows, cols, order;
    int size() const { return n * rows * cols * order; }
    int index(int vertex, int row, int col, int d) const {
        return ((vertex * rows + row) * cols + col) * order + d;
    }
};

// Degree-d coefficient rows of left * h_a - h_b * right = 0.
inline void edge_rows(const HomLayout& L, const Matrix& left, int a, int b, const Matrix& right, int d,
                      std::vector<SparseRow>& out) {
    SparseRow terms;
    for (int row = 0; row < L.rows; ++row)
        for (int col = 0; col < L.cols; ++col) {
            terms.clear();
            // (left * h_a)[row][col] at degree d
            for (int k = 0; k < L.rows; ++k) {
                const Series& s = left(row, k);
                for (int e = 0; e <= d; ++e)
                    if (s[e] != 0) terms.emplace_back(L.index(a, k, col, d - e), s[e]);
            }
            // (h_b * right)[row][col] at degree d
            for (int k = 0; k < L.cols; ++k) {
                const Series& s = right(k, col);
                for (int e = 0; e <= d; ++e)
                    if (s[e] != 0) {
                        terms.emplace_back(L.index(b, row, k, d - e), s[e]);
                        mpq_neg(terms.back().second.get_mpq_t(), terms.back().second.get_mpq_t());
                    }
            }
            if (terms.empty()) continue;
            std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
            SparseRow merged;
            merged.reserve(terms.size());
            for (auto& [c, q] : terms) {
                if (!merged.empty() && merged.back().first == c)
                    merged.back().second += q;
                else
                    merged.emplace_back(c, std::move(q));
            }
            std::erase_if(merged, [](const auto& e) { return e.second == 0; });
            if (!merged.empty()) out.push_back(std::move(merged));
        }
}

inline bool satisfies(const SparseRow& row, const std::vector<Rational>& x, Rational& s, Rational& tmp) {
    s = 0;
    for (const auto& [c, q] : row) {
        const Rational& v = x[static_cast<std::size_t>(c)];
        if (sgn(v) == 0) continue;
        mpq_mul(tmp.get_mpq_t(), q.get_mpq_t(), v.get_mpq_t());
        s += tmp;
    }
    return s == 0;
}

} // namespace detail

namespace detail {

// Basis of Hom(a, b) at order N as sparse vectors in the numbering of
// `layout`, whose order is the working precision of a and b (>= N).
inline std::vector<SparseRow> hom_vectors(const QuiverRep& a, const QuiverRep& b, int N, const HomLayout& work) {
    const int M = work.order;
    // Low degrees first keeps the fill-in small. Rows of degree < N involve
    // only unknowns of degree < N and are exactly the conditions at order N;
    // they are kept to re-check the truncated solutions.
    RowEchelon ech(work.size());
    std::vector<SparseRow> rows, low;
    for (int d = 0; d < M; ++d) {
        rows.clear();
        for (int i = 1; i <= a.n(); ++i) {
            const int from = i - 1, to = i % a.n();
            edge_rows(work, b.x(i), from, to, a.x(i), d, rows);
            edge_rows(work, b.y(i), to, from, a.y(i), d, rows);
        }
        for (const auto& r : rows) ech.add(r);
        if (d < N)
            for (auto& r : rows) low.push_back(std::move(r));
    }

    std::vector<SparseRow> truncated;
    for (auto& sol : ech.nullspace()) {
        std::erase_if(sol, [&](const auto& e) { return e.first % M >= N; });
        if (!sol.empty()) truncated.push_back(std::move(sol));
    }

    std::vector<SparseRow> basis = span_basis(truncated, work.size());
    std::vector<Rational> wide(static_cast<std::size_t>(work.size()));
    Rational acc, tmp;
    for (const auto& vec : basis) {
        for (const auto& [c, q] : vec) wide[static_cast<std::size_t>(c)] = q;
        for (const auto& r : low)
            if (!satisfies(r, wide, acc, tmp))
                throw Error(Errc::InvariantViolation, "hom_space produced a non-homomorphism");
        for (const auto& [c, q] : vec) wide[static_cast<std::size_t>(c)] = 0;
    }
    return basis;
}

// Constant term of entry (row, col) of h_0.
inline const Rational* constant_at_vertex0(const SparseRow& vec, const HomLayout& L, int row, int col) {
    const int c = L.index(0, row, col, 0);
    auto it = std::lower_bound(vec.begin(), vec.end(), c, [](const auto& e, int x) { return e.first < x; });
    return it != vec.end() && it->first == c ? &it->second : nullptr;
}

inline int default_guard(const QuiverRep& A, int guard) { return guard < 0 ? A.n() : guard; }

} // namespace detail

/// Hom(A, B) over Q[t]/(t^N) with N the common truncation order.
///
/// Every coefficient of every entry of h_0..h_{n-1} is a rational unknown and
/// both commutation relations are imposed coefficientwise. The system is
/// solved with `guard` extra coefficients and the solutions are cut back to
/// N; this discards maps that exist only because t is nilpotent in the
/// truncated ring. guard < 0 selects n.
inline HomSpace hom_space(const QuiverRep& A, const QuiverRep& B, int guard = -1) {
    if (A.n() != B.n()) throw Error(Errc::InvalidInput, "hom_space needs representations with equal n");
    if (A.order() != B.order()) throw Error(Errc::MismatchedOrder, "hom_space needs equal truncation orders");
    const int N = A.order();
    const int M = N + detail::default_guard(A, guard);
    const detail::HomLayout work{A.n(), B.rank(), A.rank(), M};

    HomSpace hs{A.n(), B.rank(), A.rank(), N, {}};
    for (const auto& vec : detail::hom_vectors(A.with_order(M), B.with_order(M), N, work)) {
        std::vector<Matrix> h;
        for (int v = 0; v < A.n(); ++v) h.emplace_back(hs.rows, hs.cols, N);
        for (const auto& [c, q] : vec) {
            const int d = c % M, entry = c / M;
            const int col = entry % hs.cols, row = (entry / hs.cols) % hs.rows, v = entry / (hs.cols * hs.rows);
            h[static_cast<std::size_t>(v)](row, col)[d] = q;
        }
        hs.basis.push_back(std::move(h));
    }
    return hs;
}

namespace detail {

// is_split_summand with M already lifted to the working precision.
inline bool split_summand_wide(const Rim& X, const QuiverRep& wideM, int N) {
    const int M = wideM.order();
    const QuiverRep L = build_rank1(X, M);
    const HomLayout in_layout{X.n(), wideM.rank(), 1, M}, out_layout{X.n(), 1, wideM.rank(), M};

    std::vector<std::vector<Rational>> iotas;
    for (const auto& vec : hom_vectors(L, wideM, N, in_layout)) {
        std::vector<Rational> c(static_cast<std::size_t>(wideM.rank()));
        bool nonzero = false;
        for (int r = 0; r < wideM.rank(); ++r)
            if (const Rational* q = constant_at_vertex0(vec, in_layout, r, 0)) {
                c[static_cast<std::size_t>(r)] = *q;
                nonzero = true;
            }
        if (nonzero) iotas.push_back(std::move(c));
    }
    if (iotas.empty()) return false;

    for (const auto& vec : hom_vectors(wideM, L, N, out_layout))
        for (const auto& iota : iotas) {
            Rational s = 0;
            for (int r = 0; r < wideM.rank(); ++r)
                if (const Rational* q = constant_at_vertex0(vec, out_layout, 0, r)) s += *q * iota[static_cast<std::size_t>(r)];
            if (s != 0) return true;
        }
    return false;
}

} // namespace detail

/// Whether L_X is a direct summand of M: some inclusion iota and projection pi
/// compose to a unit multiple of the identity of L_X. Over the residue field
/// it suffices to test pairs of basis elements for a nonzero constant term
/// of pi_0 iota_0.
inline bool is_split_summand(const Rim& X, const QuiverRep& M) {
    if (X.n() != M.n() || X.k() != M.k()) throw Error(Errc::InvalidInput, "candidate rim does not match the module's (k, n)");
    return detail::split_summand_wide(X, M.with_order(M.order() + detail::default_guard(M, -1)), M.order());
}

inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t c = 1;
    for (int i = 1; i <= k; ++i) c = c * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return c;
}

inline constexpr std::uint64_t exhaustive_limit = 100000;

/// Every k-subset of {1..n}, in lexicographic order.
inline std::vector<Rim> all_rims(int n, int k) {
    std::vector<Rim> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.emplace_back(n, cur);
            return;
        }
        for (int l = next; l <= n - (k - static_cast<int>(cur.size())) + 1; ++l) {
            cur.push_back(l);
            self(self, l + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

/// All k-subsets X for which L_X splits off M. For rank 2, an empty answer
/// certifies that M is indecomposable.
inline std::vector<Rim> decompose_exhaustive(const QuiverRep& M, int k) {
    if (binomial(M.n(), k) > exhaustive_limit)
        throw Error(Errc::GuardExceeded, "C(" + std::to_string(M.n()) + "," + std::to_string(k) + ") exceeds " +
                                             std::to_string(exhaustive_limit) + " candidates");
    if (k != M.k()) throw Error(Errc::InvalidInput, "k does not match the module");
    const QuiverRep wide = M.with_order(M.order() + detail::default_guard(M, -1));
    std::vector<Rim> out;
    for (const auto& X : all_rims(M.n(), k))
        if (detail::split_summand_wide(X, wide, M.order())) out.push_back(X);
    return out;
}

} // namespace grcm

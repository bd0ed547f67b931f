#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grcm/cmmod.hpp"
#include "grcm/combinat.hpp"
#include "grcm/error.hpp"
#include "grcm/matrix.hpp"
#include "grcm/series.hpp"

namespace grcm {

// Closed-form endomorphisms and witnesses involve t^{-1} at most twice. They
// are evaluated with this many extra coefficients and truncated afterwards,
// so every returned coefficient is exact.
inline constexpr int witness_guard = 2;

/// Entries of an endomorphism at the vertex of j_r (model vertex 0).
struct EndoCorner {
    Series a, b, c, d;
};

struct EndoFamily {
    std::vector<Matrix> phis;          // one per vertex 0..n-1
    std::vector<Series> partial_sums;  // B_1..B_{2r}
};

namespace detail {

inline std::vector<Series> lift(const std::vector<Series>& v, int order) {
    std::vector<Series> out;
    out.reserve(v.size());
    for (const auto& s : v) out.push_back(s.with_order(order));
    return out;
}

inline std::vector<Series> partial_sums(const std::vector<Series>& b) {
    std::vector<Series> B;
    Series acc = Series::zero(b.front().order());
    for (const auto& s : b) {
        acc += s;
        B.push_back(acc);
    }
    return B;
}

// b rotated so that model position 2*rho+1 becomes position 1.
inline std::vector<Series> rotate(const std::vector<Series>& b, int rho) {
    const std::size_t m = b.size();
    std::vector<Series> out;
    for (std::size_t p = 0; p < m; ++p) out.push_back(b[(p + 2 * static_cast<std::size_t>(rho)) % m]);
    return out;
}

// Endomorphism at every model vertex 0..2r-1 generated from the corner at
// model vertex 0. All inputs share one truncation order.
inline std::vector<Matrix> model_endo(const std::vector<Series>& b, const EndoCorner& k) {
    const int r = static_cast<int>(b.size()) / 2;
    if (!k.c.divisible_by_t())
        throw Error(Errc::CornerNotAdmissible, "corner entry c = " + k.c.to_string() + " is not divisible by t");
    const Series c1 = k.c.shift_down(1);
    const Series dma = k.d - k.a;
    const std::vector<Series> B = partial_sums(b);

    for (int l = 1; l < r; ++l) {
        const Series& s = B[2 * l - 1];
        const Series cond = dma * s - s * s * c1;
        if (!cond.divisible_by_t())
            throw ConditionsViolated(l, "divisibility condition " + std::to_string(l) + " fails: t does not divide " +
                                            cond.to_string());
    }

    std::vector<Matrix> phi(static_cast<std::size_t>(2 * r));
    phi[0] = Matrix::of(k.a, k.b, k.c, k.d);
    for (int l = 1; l <= r; ++l) {
        const Series& s = B[2 * l - 2];
        phi[2 * l - 1] = Matrix::of(k.a + s * c1, k.b.shift_up(1) + dma * s - s * s * c1, c1, k.d - s * c1);
        if (l == r) break;
        const Series& e = B[2 * l - 1];
        phi[2 * l] = Matrix::of(k.a + e * c1, k.b + (dma * e - e * e * c1).shift_down(1), k.c, k.d - e * c1);
    }
    return phi;
}

inline std::vector<Matrix> spread(const ModelReduction& red, const std::vector<Matrix>& model, int order) {
    std::vector<Matrix> out;
    for (int v = 0; v < red.n(); ++v) out.push_back(model[red.vertex_model[v]].with_order(order));
    return out;
}

} // namespace detail

/// Endomorphism of M(I,J) with prescribed corner, propagated to every vertex
/// by the closed formulas; constant along common and empty labels.
inline EndoFamily endo_from_corner(const RankTwoSpec& spec, const EndoCorner& corner) {
    const ModelReduction red = validate(spec);
    const int N = spec.truncation;
    for (const Series* s : {&corner.a, &corner.b, &corner.c, &corner.d})
        if (s->order() != N) throw Error(Errc::MismatchedOrder, "corner truncation differs from spec");
    const int W = N + witness_guard;
    const EndoCorner lifted{corner.a.with_order(W), corner.b.with_order(W), corner.c.with_order(W),
                            corner.d.with_order(W)};
    const auto model = detail::model_endo(detail::lift(spec.b, W), lifted);
    EndoFamily fam;
    fam.phis = detail::spread(red, model, N);
    fam.partial_sums = detail::partial_sums(spec.b);
    return fam;
}

struct PairPattern {
    std::vector<Series> pair_sums; // p_j = b_{2j+1} + b_{2j+2}
    std::vector<bool> divisible;   // t | p_j
    std::vector<int> S;            // indices j with t not dividing p_j, ascending

    int r() const noexcept { return static_cast<int>(pair_sums.size()); }
};

inline PairPattern pair_pattern(const std::vector<Series>& b) {
    PairPattern pat;
    for (std::size_t j = 0; 2 * j + 1 < b.size(); ++j) {
        Series p = b[2 * j] + b[2 * j + 1];
        const bool div = p.divisible_by_t();
        pat.pair_sums.push_back(std::move(p));
        pat.divisible.push_back(div);
        if (!div) pat.S.push_back(static_cast<int>(j));
    }
    return pat;
}

inline PairPattern pair_pattern(const RankTwoSpec& spec) {
    validate(spec);
    return pair_pattern(spec.b);
}

struct IndecomposabilityReport {
    bool indecomposable = false;
    std::vector<int> S;
    // Cyclically consecutive members of S whose four-term sum is a unit.
    std::optional<std::pair<int, int>> failing_pair;
};

/// Indecomposable exactly when two cyclically consecutive nondivisible pair
/// sums add up to a unit.
inline IndecomposabilityReport indecomposability(const PairPattern& pat) {
    IndecomposabilityReport rep;
    rep.S = pat.S;
    const std::size_t s = pat.S.size();
    for (std::size_t g = 0; g < s; ++g) {
        const int a = pat.S[g], b = pat.S[(g + 1) % s];
        if (!(pat.pair_sums[a] + pat.pair_sums[b]).divisible_by_t()) {
            rep.indecomposable = true;
            rep.failing_pair = std::make_pair(a, b);
            break;
        }
    }
    return rep;
}

inline bool is_indecomposable(const RankTwoSpec& spec) { return indecomposability(pair_pattern(spec)).indecomposable; }

/// A subset X' of the model peaks {0, 2, .., 2r-2} of I. Bit j of `mask`
/// stands for peak 2j.
class PeakSubset {
public:
    PeakSubset() = default;

    PeakSubset(int r, std::uint64_t mask) : r_(r), mask_(mask) {
        if (r < 1 || r > 62) throw Error(Errc::InvalidInput, "peak subsets need 1 <= r <= 62");
        if (mask >> r) throw Error(Errc::InvalidInput, "peak mask has bits beyond r");
    }

    static PeakSubset from_peaks(int r, const std::vector<int>& peaks) {
        std::uint64_t mask = 0;
        for (int p : peaks) {
            if (p % 2 != 0 || p < 0 || p > 2 * r - 2)
                throw Error(Errc::InvalidInput, "model peaks are 0, 2, .., 2r-2; got " + std::to_string(p));
            mask |= std::uint64_t{1} << (p / 2);
        }
        return PeakSubset(r, mask);
    }

    int r() const noexcept { return r_; }
    std::uint64_t mask() const noexcept { return mask_; }

    /// Membership of model peak 2j; peak 2r is peak 0.
    bool contains_peak(int peak) const {
        const int j = (peak / 2) % r_;
        return (mask_ >> j) & 1U;
    }

    std::vector<int> members() const {
        std::vector<int> out;
        for (int j = 0; j < r_; ++j)
            if ((mask_ >> j) & 1U) out.push_back(2 * j);
        return out;
    }

    PeakSubset complement() const { return PeakSubset(r_, ~mask_ & ((std::uint64_t{1} << r_) - 1)); }

    friend bool operator==(const PeakSubset&, const PeakSubset&) = default;

private:
    int r_ = 1;
    std::uint64_t mask_ = 0;
};

/// divisible[j] holds exactly when peaks 2j and 2j+2 lie on the same side.
inline std::vector<bool> pattern_for_peaks(const PeakSubset& X) {
    std::vector<bool> out;
    for (int j = 0; j < X.r(); ++j) out.push_back(X.contains_peak(2 * j) == X.contains_peak(2 * j + 2));
    return out;
}

inline int count_nondivisible(const std::vector<bool>& divisible) {
    int c = 0;
    for (bool d : divisible) c += d ? 0 : 1;
    return c;
}

/// Inverse of pattern_for_peaks: the subset containing peak 0.
inline PeakSubset peaks_for_pattern(const std::vector<bool>& divisible) {
    if (divisible.empty()) throw Error(Errc::InvalidInput, "empty divisibility pattern");
    if (count_nondivisible(divisible) % 2 != 0)
        throw Error(Errc::OddFlipParity, "odd number of nondivisible pair sums; no peak subset realises it");
    std::uint64_t mask = 0;
    bool inside = true;
    for (std::size_t j = 0; j < divisible.size(); ++j) {
        if (inside) mask |= std::uint64_t{1} << j;
        if (!divisible[j]) inside = !inside;
    }
    return PeakSubset(static_cast<int>(divisible.size()), mask);
}

/// Rims of the two summands for a peak subset, read off the path through the
/// profile and mapped back to the labels of (I, J). Common labels belong to both.
inline std::pair<Rim, Rim> rims_from_peaks(const PeakSubset& X, const ModelReduction& red) {
    if (X.r() != red.r) throw Error(Errc::InvalidInput, "peak subset and reduction disagree on r");
    std::vector<int> xs = red.common, ys = red.common;
    for (int j = 0; j < red.r; ++j) {
        const bool here = X.contains_peak(2 * j), next = X.contains_peak(2 * j + 2);
        // Membership in X of model positions 2j+1 and 2j+2.
        bool odd_in, even_in;
        if (here && next) {
            odd_in = true, even_in = false;
        } else if (!here && next) {
            odd_in = false, even_in = false;
        } else if (here && !next) {
            odd_in = true, even_in = true;
        } else {
            odd_in = false, even_in = true;
        }
        (odd_in ? xs : ys).push_back(red.position_map[2 * j + 1]);
        (even_in ? xs : ys).push_back(red.position_map[2 * j + 2]);
    }
    return {Rim(red.n(), xs), Rim(red.n(), ys)};
}

/// Corner parameters for a divisibility pattern: b_{2j+1} carries the pair
/// sum and b_{2j+2} = 0. Nondivisible sums alternate 1, -1; divisible sums
/// alternate t, -t, with 0 for the last one when their count is odd.
inline std::vector<Series> sample_b(const std::vector<bool>& divisible, int order = default_truncation) {
    if (count_nondivisible(divisible) % 2 != 0)
        throw Error(Errc::OddFlipParity, "odd number of nondivisible pair sums");
    const int divisible_count = static_cast<int>(divisible.size()) - count_nondivisible(divisible);
    std::vector<Series> b;
    int seen_unit = 0, seen_div = 0;
    for (bool div : divisible) {
        Series p = Series::zero(order);
        if (!div) {
            p = Series::constant(order, seen_unit % 2 == 0 ? 1 : -1);
            ++seen_unit;
        } else {
            const bool last_odd = divisible_count % 2 == 1 && seen_div == divisible_count - 1;
            if (!last_odd) p = Series::monomial(order, 1, seen_div % 2 == 0 ? 1 : -1);
            ++seen_div;
        }
        b.push_back(std::move(p));
        b.push_back(Series::zero(order));
    }
    return b;
}

/// Idempotent splitting of M(I,J) = L_X + L_Y. phi projects onto L_Y along
/// L_X; v spans L_Y (image of phi) and w spans L_X (image of phi_tilde).
struct SplitWitness {
    std::vector<Matrix> phi;
    std::vector<Matrix> phi_tilde;
    std::vector<Matrix> w; // 2x1 columns, one per vertex
    std::vector<Matrix> v;
};

struct DecompositionResult {
    bool indecomposable = false;
    std::vector<int> S;
    std::optional<std::pair<int, int>> failing_pair;
    std::optional<Rim> X;
    std::optional<Rim> Y;
    std::optional<PeakSubset> peaks; // X' in the model
    std::optional<SplitWitness> witness;
};

struct WitnessCheck {
    bool idempotent = true;     // phi^2 = phi, phi_tilde = Id - phi, phi * phi_tilde = 0
    bool commutes = true;       // phi is an endomorphism
    bool eigenvectors = true;   // phi v = v, phi_tilde w = w
    bool basis = true;          // det [w v] is a unit
    bool x_action_matches = true;
    bool y_action_matches = true;
    std::string first_failure;

    bool ok() const { return idempotent && commutes && eigenvectors && basis && x_action_matches && y_action_matches; }
};

/// Exact re-check of a split witness against the module and the claimed rims.
/// For every edge i: x_i w_{i-1} is w_i when i is in X and t w_i otherwise;
/// y_i w_i is t w_{i-1} when i is in X and w_{i-1} otherwise; likewise v, Y.
inline WitnessCheck verify_witness(const QuiverRep& M, const Rim& X, const Rim& Y, const SplitWitness& wit) {
    WitnessCheck chk;
    const int n = M.n(), N = M.order();
    const Matrix id = Matrix::identity(2, N);
    const Series t = Series::t(N);
    auto fail = [&](bool& flag, const std::string& what) {
        if (flag && chk.first_failure.empty()) chk.first_failure = what;
        flag = false;
    };
    for (int u = 0; u < n; ++u) {
        const Matrix& p = wit.phi[u];
        const Matrix& q = wit.phi_tilde[u];
        const std::string at = " at vertex " + std::to_string(u);
        if (p * p != p || q != id - p || !(p * q).is_zero()) fail(chk.idempotent, "idempotency" + at);
        if (p * wit.v[u] != wit.v[u] || q * wit.w[u] != wit.w[u]) fail(chk.eigenvectors, "eigenvector" + at);
        Matrix basis(2, 2, N);
        basis(0, 0) = wit.w[u](0, 0);
        basis(1, 0) = wit.w[u](1, 0);
        basis(0, 1) = wit.v[u](0, 0);
        basis(1, 1) = wit.v[u](1, 0);
        if (!basis.det().is_unit()) fail(chk.basis, "basis" + at);
    }
    for (int i = 1; i <= n; ++i) {
        const int from = i - 1, to = i % n;
        const std::string at = " on edge " + std::to_string(i);
        if (M.x(i) * wit.phi[from] != wit.phi[to] * M.x(i) || M.y(i) * wit.phi[to] != wit.phi[from] * M.y(i))
            fail(chk.commutes, "commutation" + at);
        auto check = [&](const std::vector<Matrix>& vec, const Rim& R) {
            const bool in = R.contains(i);
            const Matrix xs = M.x(i) * vec[from];
            const Matrix ys = M.y(i) * vec[to];
            if (xs != (in ? vec[to] : t * vec[to])) fail(chk.x_action_matches, "x-action" + at);
            if (ys != (in ? t * vec[from] : vec[from])) fail(chk.y_action_matches, "y-action" + at);
        };
        check(wit.w, X);
        check(wit.v, Y);
    }
    return chk;
}

/// Decides indecomposability and, for decomposable modules, returns the
/// summand rims with an explicit splitting.
inline DecompositionResult decompose(const RankTwoSpec& spec) {
    const ModelReduction red = validate(spec);
    const int N = spec.truncation, W = N + witness_guard, r = red.r;
    const PairPattern pat = pair_pattern(spec.b);
    const IndecomposabilityReport ind = indecomposability(pat);

    DecompositionResult res;
    res.S = ind.S;
    res.failing_pair = ind.failing_pair;
    if (ind.indecomposable) {
        res.indecomposable = true;
        return res;
    }

    const PeakSubset Xp = peaks_for_pattern(pat.divisible);
    auto [X, Y] = rims_from_peaks(Xp, red);
    res.peaks = Xp;

    const Series zero = Series::zero(W), one = Series::one(W), t = Series::t(W);
    std::vector<Matrix> phi, w, v; // per model vertex, precision W
    if (ind.S.empty()) {
        // L_J splits off: phi is the retraction onto the submodule.
        const auto lifted = detail::lift(spec.b, W);
        phi = detail::model_endo(lifted, EndoCorner{one, zero, zero, zero});
        for (const auto& p : phi) {
            w.push_back(Matrix::column(-p(0, 1), one));
            v.push_back(Matrix::column(one, zero));
        }
    } else {
        // Rotate so the first nondivisible pair sits at model positions 1, 2.
        const int rho = ind.S.front();
        const auto b = detail::rotate(detail::lift(spec.b, W), rho);
        const Series u = (b[0] + b[1]).invert();
        const auto rot_phi = detail::model_endo(b, EndoCorner{one, zero, -(t * u), zero});
        const auto B = detail::partial_sums(b);
        std::vector<Matrix> rot_w, rot_v;
        int g = 0; // nondivisible pairs passed so far
        for (int m = 0; m < 2 * r; ++m) {
            const Series Bm = m == 0 ? zero : B[m - 1];
            if (m % 2 == 1) {
                rot_w.push_back(Matrix::column(Bm, one));
                rot_v.push_back(Matrix::column(one - Bm * u, -u));
                continue;
            }
            if (m > 0 && !(b[m - 2] + b[m - 1]).divisible_by_t()) ++g;
            if (Bm.divisible_by_t() != (g % 2 == 0))
                throw Error(Errc::InvariantViolation, "partial sum parity disagrees with the pair count");
            if (g % 2 == 0) {
                rot_w.push_back(Matrix::column(Bm.shift_down(1), one));
                rot_v.push_back(Matrix::column(one - Bm * u, -(t * u)));
            } else {
                rot_w.push_back(Matrix::column(Bm, t));
                rot_v.push_back(Matrix::column((one - Bm * u).shift_down(1), -u));
            }
        }
        for (int m = 0; m < 2 * r; ++m) {
            const int src = ((m - 2 * rho) % (2 * r) + 2 * r) % (2 * r);
            phi.push_back(rot_phi[src]);
            w.push_back(rot_w[src]);
            v.push_back(rot_v[src]);
        }
    }

    SplitWitness wit;
    wit.phi = detail::spread(red, phi, N);
    wit.w = detail::spread(red, w, N);
    wit.v = detail::spread(red, v, N);
    const Matrix id = Matrix::identity(2, N);
    for (const auto& p : wit.phi) wit.phi_tilde.push_back(id - p);

    const WitnessCheck chk = verify_witness(build_rank2(spec), X, Y, wit);
    if (!chk.ok()) throw Error(Errc::InvariantViolation, "split witness failed: " + chk.first_failure);

    res.X = std::move(X);
    res.Y = std::move(Y);
    res.witness = std::move(wit);
    return res;
}

struct DecomposableEntry {
    PeakSubset peaks;
    std::vector<bool> divisible;
    std::vector<Series> b;
    Rim X;
    Rim Y;
};

/// One decomposable extension per complementary pair of peak subsets, i.e.
/// 2^(r-1) entries, represented by the subset containing peak 0 and ordered
/// by its bit mask.
inline std::vector<DecomposableEntry> enumerate_decomposables(const Rim& I, const Rim& J,
                                                              int order = default_truncation) {
    const ModelReduction red = model_reduction(I, J);
    const int r = red.r;
    if (r > 20) throw Error(Errc::GuardExceeded, "2^(r-1) entries is too many for r = " + std::to_string(r));
    std::vector<DecomposableEntry> out;
    for (std::uint64_t rest = 0; rest < (std::uint64_t{1} << (r - 1)); ++rest) {
        const PeakSubset X(r, (rest << 1) | 1U);
        DecomposableEntry e{X, pattern_for_peaks(X), {}, {}, {}};
        e.b = sample_b(e.divisible, order);
        std::tie(e.X, e.Y) = rims_from_peaks(X, red);
        out.push_back(std::move(e));
    }
    return out;
}

} // namespace grcm

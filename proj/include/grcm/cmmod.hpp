#pragma once

#include <string>
#include <vector>

#include "grcm/combinat.hpp"
#include "grcm/error.hpp"
#include "grcm/matrix.hpp"
#include "grcm/series.hpp"

namespace grcm {

/// Representation of the doubled n-cycle over Q[t]/(t^N): a free module of
/// the same rank at every vertex 0..n-1 (vertex n is vertex 0), and for each
/// edge i = 1..n maps x_i : V_{i-1} -> V_i and y_i : V_i -> V_{i-1}.
///
/// k records the algebra B_{k,n} the representation is meant for; it fixes
/// the exponent in the relation x^k = y^(n-k).
class QuiverRep {
public:
    QuiverRep() = default;

    QuiverRep(int n, int k, int rank, int order)
        : n_(n), k_(k), rank_(rank), order_(order),
          x_(static_cast<std::size_t>(n), Matrix::identity(rank, order)),
          y_(static_cast<std::size_t>(n), Matrix::identity(rank, order)) {
        if (n < 1 || rank < 1) throw Error(Errc::InvalidInput, "representation needs n >= 1 and rank >= 1");
    }

    int n() const noexcept { return n_; }
    int k() const noexcept { return k_; }
    int rank() const noexcept { return rank_; }
    int order() const noexcept { return order_; }

    // Edges are labelled 1..n.
    const Matrix& x(int edge) const { return x_.at(static_cast<std::size_t>(edge - 1)); }
    const Matrix& y(int edge) const { return y_.at(static_cast<std::size_t>(edge - 1)); }

    void set_x(int edge, Matrix m) { x_.at(static_cast<std::size_t>(edge - 1)) = checked(std::move(m)); }
    void set_y(int edge, Matrix m) { y_.at(static_cast<std::size_t>(edge - 1)) = checked(std::move(m)); }

    QuiverRep with_order(int order) const {
        QuiverRep r(n_, k_, rank_, order);
        for (int i = 1; i <= n_; ++i) {
            r.set_x(i, x(i).with_order(order));
            r.set_y(i, y(i).with_order(order));
        }
        return r;
    }

    friend bool operator==(const QuiverRep&, const QuiverRep&) = default;

private:
    Matrix checked(Matrix m) const {
        if (m.rows() != rank_ || m.cols() != rank_) throw Error(Errc::InvalidInput, "edge matrix has wrong size");
        if (m.order() != order_) throw Error(Errc::MismatchedOrder, "edge matrix has wrong truncation order");
        return m;
    }

    int n_ = 0;
    int k_ = 0;
    int rank_ = 0;
    int order_ = 0;
    std::vector<Matrix> x_;
    std::vector<Matrix> y_;
};

/// Parameters of the rank 2 module with quotient L_I and submodule L_J.
/// b[p-1] is the corner entry at model position p = 1..2r.
struct RankTwoSpec {
    Rim I;
    Rim J;
    std::vector<Series> b;
    int truncation = default_truncation;

    friend bool operator==(const RankTwoSpec&, const RankTwoSpec&) = default;
};

/// Checks the spec invariants and returns the model reduction of (I, J).
inline ModelReduction validate(const RankTwoSpec& spec) {
    ModelReduction red = model_reduction(spec.I, spec.J);
    if (static_cast<int>(spec.b.size()) != 2 * red.r)
        throw Error(Errc::BadParameters, "expected " + std::to_string(2 * red.r) + " parameters b, got " +
                                             std::to_string(spec.b.size()));
    Series sum = Series::zero(spec.truncation);
    for (const auto& s : spec.b) {
        if (s.order() != spec.truncation)
            throw Error(Errc::BadParameters, "parameter b has truncation " + std::to_string(s.order()) +
                                                 ", spec says " + std::to_string(spec.truncation));
        sum += s;
    }
    if (!sum.is_zero()) throw Error(Errc::BadParameters, "parameters must sum to zero, got " + sum.to_string());
    return red;
}

/// Rank one module L_I: x_i = 1, y_i = t on members, x_i = t, y_i = 1 otherwise.
inline QuiverRep build_rank1(const Rim& I, int order = default_truncation) {
    QuiverRep rep(I.n(), I.k(), 1, order);
    const Matrix one = Matrix::identity(1, order);
    const Matrix t = Matrix::scalar(1, Series::t(order));
    for (int i = 1; i <= I.n(); ++i) {
        rep.set_x(i, I.contains(i) ? one : t);
        rep.set_y(i, I.contains(i) ? t : one);
    }
    return rep;
}

/// The rank 2 module with filtration L_I | L_J. The first basis vector spans
/// the submodule L_J, the second maps onto the quotient L_I.
inline QuiverRep build_rank2(const RankTwoSpec& spec) {
    const ModelReduction red = validate(spec);
    const int N = spec.truncation;
    const Series zero = Series::zero(N), one = Series::one(N), t = Series::t(N);
    QuiverRep rep(red.n(), spec.I.k(), 2, N);
    for (int i = 1; i <= red.n(); ++i) {
        const int p = red.label_position[i];
        if (p == 0) {
            const bool common = spec.I.contains(i);
            rep.set_x(i, Matrix::scalar(2, common ? one : t));
            rep.set_y(i, Matrix::scalar(2, common ? t : one));
        } else if (p % 2 == 1) {
            const Series& b = spec.b[p - 1];
            rep.set_x(i, Matrix::of(t, b, zero, one));
            rep.set_y(i, Matrix::of(one, -b, zero, t));
        } else {
            const Series& b = spec.b[p - 1];
            rep.set_x(i, Matrix::of(one, b, zero, t));
            rep.set_y(i, Matrix::of(t, -b, zero, one));
        }
    }
    return rep;
}

/// Composite of the x maps once around the cycle, starting and ending at `vertex`.
inline Matrix x_cycle(const QuiverRep& M, int vertex = 0) {
    Matrix acc = Matrix::identity(M.rank(), M.order());
    for (int s = 1; s <= M.n(); ++s) acc = M.x((vertex + s - 1) % M.n() + 1) * acc;
    return acc;
}

/// Path of `len` x-arrows starting at `vertex`.
inline Matrix x_path(const QuiverRep& M, int vertex, int len) {
    Matrix acc = Matrix::identity(M.rank(), M.order());
    for (int s = 1; s <= len; ++s) acc = M.x((vertex + s - 1) % M.n() + 1) * acc;
    return acc;
}

/// Path of `len` y-arrows starting at `vertex` and walking backwards.
inline Matrix y_path(const QuiverRep& M, int vertex, int len) {
    Matrix acc = Matrix::identity(M.rank(), M.order());
    for (int s = 0; s < len; ++s) {
        const int edge = ((vertex - s) % M.n() + M.n() - 1) % M.n() + 1;
        acc = M.y(edge) * acc;
    }
    return acc;
}

/// Checks x_i y_i = y_i x_i = t Id on every edge and x^k = y^(n-k) from every vertex.
inline bool verify_relations(const QuiverRep& M) {
    const Matrix tid = Matrix::scalar(M.rank(), Series::t(M.order()));
    for (int i = 1; i <= M.n(); ++i) {
        if (M.x(i) * M.y(i) != tid) return false;
        if (M.y(i) * M.x(i) != tid) return false;
    }
    if (M.k() < 0 || M.k() > M.n()) return false;
    for (int v = 0; v < M.n(); ++v)
        if (x_path(M, v, M.k()) != y_path(M, v, M.n() - M.k())) return false;
    return true;
}

inline QuiverRep direct_sum(const QuiverRep& A, const QuiverRep& B) {
    if (A.n() != B.n()) throw Error(Errc::InvalidInput, "direct sum of representations with different n");
    if (A.k() != B.k()) throw Error(Errc::InvalidInput, "direct sum of representations with different k");
    if (A.order() != B.order()) throw Error(Errc::MismatchedOrder, "direct sum of representations with different truncation");
    const int ra = A.rank(), rb = B.rank();
    QuiverRep S(A.n(), A.k(), ra + rb, A.order());
    auto block = [&](const Matrix& a, const Matrix& b) {
        Matrix m(ra + rb, ra + rb, A.order());
        for (int i = 0; i < ra; ++i)
            for (int j = 0; j < ra; ++j) m(i, j) = a(i, j);
        for (int i = 0; i < rb; ++i)
            for (int j = 0; j < rb; ++j) m(ra + i, ra + j) = b(i, j);
        return m;
    };
    for (int i = 1; i <= A.n(); ++i) {
        S.set_x(i, block(A.x(i), B.x(i)));
        S.set_y(i, block(A.y(i), B.y(i)));
    }
    return S;
}

/// Diagonal block [offset, offset+size) of every edge matrix. Only meaningful
/// when that block is a subrepresentation and a quotient, e.g. for direct sums.
inline QuiverRep diagonal_block(const QuiverRep& M, int offset, int size) {
    if (offset < 0 || size < 1 || offset + size > M.rank()) throw Error(Errc::InvalidInput, "block out of range");
    QuiverRep B(M.n(), M.k(), size, M.order());
    auto cut = [&](const Matrix& a) {
        Matrix m(size, size, M.order());
        for (int i = 0; i < size; ++i)
            for (int j = 0; j < size; ++j) m(i, j) = a(offset + i, offset + j);
        return m;
    };
    for (int i = 1; i <= M.n(); ++i) {
        B.set_x(i, cut(M.x(i)));
        B.set_y(i, cut(M.y(i)));
    }
    return B;
}

} // namespace grcm

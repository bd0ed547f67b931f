#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "grcm/error.hpp"

namespace grcm {

/// A k-subset of {1..n} with the cyclic geometry of the n-gon. k = 0 and
/// k > n/2 are both allowed.
class Rim {
public:
    Rim() = default;

    Rim(int n, std::vector<int> members) : n_(n), members_(std::move(members)) {
        if (n_ < 1) throw Error(Errc::InvalidInput, "rim needs n >= 1");
        std::sort(members_.begin(), members_.end());
        for (std::size_t i = 0; i < members_.size(); ++i) {
            if (members_[i] < 1 || members_[i] > n_)
                throw Error(Errc::InvalidInput,
                            "label " + std::to_string(members_[i]) + " outside 1.." + std::to_string(n_));
            if (i && members_[i] == members_[i - 1])
                throw Error(Errc::InvalidInput, "repeated label " + std::to_string(members_[i]));
        }
    }

    int n() const noexcept { return n_; }
    int k() const noexcept { return static_cast<int>(members_.size()); }
    const std::vector<int>& members() const noexcept { return members_; }

    /// Membership with labels read cyclically (0 and n denote the same label).
    bool contains(int label) const {
        const int l = normalize(label);
        return std::binary_search(members_.begin(), members_.end(), l);
    }

    /// Representative of a label in 1..n.
    int normalize(int label) const { return ((label - 1) % n_ + n_) % n_ + 1; }

    std::string to_string() const {
        std::string s = "{";
        for (std::size_t i = 0; i < members_.size(); ++i) s += (i ? "," : "") + std::to_string(members_[i]);
        return s + "}";
    }

    friend bool operator==(const Rim&, const Rim&) = default;
    friend auto operator<=>(const Rim&, const Rim&) = default;

private:
    int n_ = 0;
    std::vector<int> members_;
};

/// i is a peak when i is not in the rim and i+1 is.
inline std::vector<int> peaks(const Rim& rim) {
    std::vector<int> out;
    for (int i = 1; i <= rim.n(); ++i)
        if (!rim.contains(i) && rim.contains(i + 1)) out.push_back(i);
    return out;
}

/// i is a valley when i is in the rim and i+1 is not.
inline std::vector<int> valleys(const Rim& rim) {
    std::vector<int> out;
    for (int i = 1; i <= rim.n(); ++i)
        if (rim.contains(i) && !rim.contains(i + 1)) out.push_back(i);
    return out;
}

/// Heights of the rim at vertices 0..n in half lattice steps: an edge in the
/// rim descends, an edge outside it ascends. The last entry is n - 2k.
inline std::vector<int> height_profile(const Rim& rim) {
    std::vector<int> h(static_cast<std::size_t>(rim.n()) + 1, 0);
    for (int i = 1; i <= rim.n(); ++i) h[i] = h[i - 1] + (rim.contains(i) ? -1 : 1);
    return h;
}

struct InterlacingReport {
    int r = 0;
    bool tight = true;
    // Elements of I\J and J\I listed in the cyclic order met when walking
    // from min(I\J).
    std::vector<int> i_positions;
    std::vector<int> j_positions;

    friend bool operator==(const InterlacingReport&, const InterlacingReport&) = default;
};

inline void require_same_shape(const Rim& I, const Rim& J) {
    if (I.n() != J.n()) throw Error(Errc::InvalidInput, "rims have different n");
    if (I.k() != J.k()) throw Error(Errc::InvalidInput, "rims have different k");
}

inline InterlacingReport interlacing(const Rim& I, const Rim& J) {
    require_same_shape(I, J);
    // Merged labels of the symmetric difference, tagged by origin (true = I).
    std::vector<std::pair<int, bool>> word;
    for (int l = 1; l <= I.n(); ++l) {
        const bool in_i = I.contains(l), in_j = J.contains(l);
        if (in_i != in_j) word.emplace_back(l, in_i);
    }
    InterlacingReport rep;
    if (word.empty()) return rep;

    int changes = 0;
    for (std::size_t p = 0; p < word.size(); ++p) {
        const auto& prev = word[(p + word.size() - 1) % word.size()];
        if (prev.second != word[p].second) ++changes;
    }
    rep.r = changes / 2;

    std::size_t anchor = 0;
    while (!word[anchor].second) ++anchor;
    for (std::size_t s = 0; s < word.size(); ++s) {
        const auto& [label, from_i] = word[(anchor + s) % word.size()];
        (from_i ? rep.i_positions : rep.j_positions).push_back(label);
    }
    rep.tight = static_cast<int>(rep.i_positions.size()) == rep.r;
    return rep;
}

/// Correspondence between a tightly r-interlacing pair (I, J) on n labels and
/// the model pair {1,3,..,2r-1} | {2,4,..,2r} on 2r labels.
struct ModelReduction {
    Rim I;
    Rim J;
    int r = 0;
    // position_map[p] for p = 1..2r is the label of model position p:
    // odd 2l-1 -> i_l, even 2l -> j_l. Entry 0 is unused.
    std::vector<int> position_map;
    std::vector<int> common; // I ∩ J
    std::vector<int> empty;  // complement of I ∪ J
    // For each label 1..n its model position, or 0 on common/empty labels.
    std::vector<int> label_position;
    // For each vertex 0..n-1 the model vertex 0..2r-1 it is identified with.
    // Vertices on scalar stretches share the model vertex of the stretch start.
    std::vector<int> vertex_model;

    int n() const noexcept { return I.n(); }

    friend bool operator==(const ModelReduction&, const ModelReduction&) = default;
};

inline ModelReduction model_reduction(const Rim& I, const Rim& J) {
    const InterlacingReport rep = interlacing(I, J);
    if (!rep.tight) throw Error(Errc::NotTight, "rims " + I.to_string() + " and " + J.to_string() + " are not tightly interlacing");
    if (rep.r < 1) throw Error(Errc::NotTight, "rims coincide (r = 0); no model to reduce to");

    const int n = I.n();
    ModelReduction red;
    red.I = I;
    red.J = J;
    red.r = rep.r;
    red.position_map.assign(static_cast<std::size_t>(2 * rep.r) + 1, 0);
    red.label_position.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int l = 1; l <= rep.r; ++l) {
        red.position_map[2 * l - 1] = rep.i_positions[l - 1];
        red.position_map[2 * l] = rep.j_positions[l - 1];
        red.label_position[rep.i_positions[l - 1]] = 2 * l - 1;
        red.label_position[rep.j_positions[l - 1]] = 2 * l;
    }
    for (int l = 1; l <= n; ++l) {
        if (I.contains(l) && J.contains(l)) red.common.push_back(l);
        if (!I.contains(l) && !J.contains(l)) red.empty.push_back(l);
    }

    red.vertex_model.assign(static_cast<std::size_t>(n), 0);
    const int first = rep.i_positions.front();
    int m = 0;
    for (int s = 0; s < n; ++s) {
        const int label = (first - 1 + s) % n + 1;
        if (red.label_position[label] != 0) ++m;
        red.vertex_model[label % n] = m % (2 * rep.r);
    }
    return red;
}

} // namespace grcm

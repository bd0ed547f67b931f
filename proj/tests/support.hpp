#pragma once

#include <random>
#include <vector>

#include "grcm/series.hpp"

namespace grcm::gen {

// Small random rationals keep products readable when a test fails.
inline Rational small_rational(std::mt19937& rng, int span = 5) {
    std::uniform_int_distribution<int> num(-span, span), den(1, 3);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

inline Series random_series(std::mt19937& rng, int order, int max_degree = -1) {
    const int top = max_degree < 0 ? order - 1 : std::min(max_degree, order - 1);
    Series s = Series::zero(order);
    for (int d = 0; d <= top; ++d) s[d] = small_rational(rng);
    return s;
}

inline Series random_unit(std::mt19937& rng, int order) {
    Series s = random_series(rng, order);
    while (s[0] == 0) s[0] = small_rational(rng);
    return s;
}

} // namespace grcm::gen

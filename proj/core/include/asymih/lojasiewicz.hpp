// Polynomial growth bounds |f(x)| <= c (1 + |x|^2)^p on real points.
#pragma once

#include "asymih/poly.hpp"

namespace asymih {

struct LojBound {
    Rational c;  // >= 0
    int p = 0;   // >= 0
};

/// c = sum over terms of |re| + |im| of the coefficient, p = ceil(deg f / 2).
/// The zero polynomial gives (0, 0).
LojBound lojasiewicz_bound(const Poly& f);

/// Checks |Re f(x)| + |Im f(x)| <= c (1 + |x|^2)^p exactly at a real point.
bool lojasiewicz_holds(const Poly& f, const LojBound& bound, const std::vector<Rational>& point);

}  // namespace asymih

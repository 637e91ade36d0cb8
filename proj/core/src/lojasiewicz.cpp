#include "asymih/lojasiewicz.hpp"

#include <stdexcept>

namespace asymih {

LojBound lojasiewicz_bound(const Poly& f) {
    LojBound b{Rational(0), 0};
    if (f.is_zero()) return b;
    for (const auto& [e, c] : f.terms()) b.c += c.magnitude_bound();
    b.p = (*f.degree() + 1) / 2;
    return b;
}

bool lojasiewicz_holds(const Poly& f, const LojBound& bound, const std::vector<Rational>& point) {
    if (point.size() != f.nvars()) throw std::invalid_argument("point dimension mismatch");
    std::vector<GaussRat> z;
    Rational norm2(1);
    for (const auto& q : point) {
        z.emplace_back(q);
        norm2 += q * q;
    }
    Rational lhs = f.evaluate(z).magnitude_bound();
    Rational rhs = bound.c;
    for (int k = 0; k < bound.p; ++k) rhs *= norm2;
    return lhs <= rhs;
}

}  // namespace asymih

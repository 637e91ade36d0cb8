#include "asymih/corpus.hpp"

namespace asymih {

PolyMap random_elementary(Rng& rng, int max_power) {
    const std::vector<std::string> vars{"x", "y"};
    const Poly x = Poly::variable(vars, "x");
    const Poly y = Poly::variable(vars, "y");
    switch (rng.between(0, 2)) {
        case 0: {
            const GaussRat c(Rational(rng.nonzero(3)));
            return PolyMap({x, y + c * x.pow(static_cast<unsigned>(rng.between(1, max_power)))});
        }
        case 1: {
            const GaussRat c(Rational(rng.nonzero(3)));
            return PolyMap({x + c * y.pow(static_cast<unsigned>(rng.between(1, max_power))), y});
        }
        default: {
            while (true) {
                const long a = rng.between(-2, 2);
                const long b = rng.between(-2, 2);
                const long c = rng.between(-2, 2);
                const long d = rng.between(-2, 2);
                if (a * d - b * c == 0) continue;
                return PolyMap({GaussRat(Rational(a)) * x + GaussRat(Rational(b)) * y,
                                GaussRat(Rational(c)) * x + GaussRat(Rational(d)) * y});
            }
        }
    }
}

std::vector<PolyMap> automorphism_corpus(std::uint64_t seed, int count, int factors, int max_power) {
    Rng rng(seed);
    std::vector<PolyMap> out;
    for (int n = 0; n < count; ++n) {
        PolyMap f = random_elementary(rng, max_power);
        for (int k = 1; k < factors; ++k) f = compose(random_elementary(rng, max_power), f);
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace asymih

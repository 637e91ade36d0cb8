#include "asymih/random.hpp"

#include <stdexcept>

namespace asymih {

long Rng::between(long lo, long hi) {
    if (hi < lo) throw std::invalid_argument("Rng::between: empty range");
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
}

long Rng::nonzero(long bound) {
    long v = between(1, bound);
    return (next() & 1u) ? v : -v;
}

Rational Rng::rational(long max_num, long max_den) {
    Rational q{Integer(between(-max_num, max_num)), Integer(between(1, max_den))};
    q.canonicalize();
    return q;
}

}  // namespace asymih

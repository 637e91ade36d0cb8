#include "asymih/roots.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

namespace asymih {
namespace {

// Above this norm the divisor enumeration is skipped and roots are left unresolved.
const Integer kNormCap("1000000000000");

struct GaussInt {
    Integer re;
    Integer im;
};

Integer norm(const GaussInt& a) { return a.re * a.re + a.im * a.im; }

GaussInt mul(const GaussInt& a, const GaussInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

// a / b when exact.
std::optional<GaussInt> div_exact(const GaussInt& a, const GaussInt& b) {
    Integer n = norm(b);
    Integer re = a.re * b.re + a.im * b.im;
    Integer im = a.im * b.re - a.re * b.im;
    if (!mpz_divisible_p(re.get_mpz_t(), n.get_mpz_t()) || !mpz_divisible_p(im.get_mpz_t(), n.get_mpz_t())) {
        return std::nullopt;
    }
    return GaussInt{re / n, im / n};
}

GaussInt normalize_associate(GaussInt a) {
    for (int k = 0; k < 4; ++k) {
        if (sgn(a.re) > 0 && sgn(a.im) >= 0) return a;
        a = GaussInt{-a.im, a.re};  // multiply by i
    }
    return a;
}

// Gaussian prime factorisation of a nonzero Gaussian integer (up to a unit),
// or nullopt when the norm exceeds the cap.
std::optional<std::vector<std::pair<GaussInt, int>>> factor(GaussInt w) {
    Integer n = norm(w);
    if (n > kNormCap) return std::nullopt;
    std::vector<Integer> rational_primes;
    Integer m = n;
    for (Integer p = 2; p * p <= m; ++p) {
        if (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
            rational_primes.push_back(p);
            while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) m /= p;
        }
    }
    if (m > 1) rational_primes.push_back(m);

    std::vector<GaussInt> gaussian_primes;
    for (const Integer& p : rational_primes) {
        if (p == 2) {
            gaussian_primes.push_back({1, 1});
        } else if (p % 4 == 3) {
            gaussian_primes.push_back({p, 0});
        } else {
            for (Integer a = 1; a * a < p; ++a) {
                Integer rest = p - a * a;
                if (mpz_perfect_square_p(rest.get_mpz_t())) {
                    Integer b = sqrt(rest);
                    gaussian_primes.push_back({a, b});
                    gaussian_primes.push_back({a, -b});
                    break;
                }
            }
        }
    }

    std::vector<std::pair<GaussInt, int>> out;
    for (const GaussInt& pi : gaussian_primes) {
        int e = 0;
        while (auto q = div_exact(w, pi)) {
            w = *q;
            ++e;
        }
        if (e > 0) out.emplace_back(pi, e);
    }
    return out;
}

std::optional<std::vector<GaussInt>> divisors(const GaussInt& w) {
    auto f = factor(w);
    if (!f) return std::nullopt;
    std::vector<GaussInt> divs{{1, 0}};
    for (const auto& [pi, e] : *f) {
        std::vector<GaussInt> next;
        for (const GaussInt& d : divs) {
            GaussInt acc = d;
            next.push_back(acc);
            for (int k = 0; k < e; ++k) {
                acc = mul(acc, pi);
                next.push_back(acc);
            }
        }
        divs = std::move(next);
    }
    for (auto& d : divs) d = normalize_associate(d);
    return divs;
}

std::vector<GaussRat> trimmed(std::vector<GaussRat> c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
    return c;
}

// Divides by (z - r), assuming r is a root.
std::vector<GaussRat> deflate(const std::vector<GaussRat>& c, const GaussRat& r) {
    std::size_t d = c.size() - 1;
    std::vector<GaussRat> q(d);
    GaussRat carry(0);
    for (std::size_t k = d; k-- > 0;) {
        carry = c[k + 1] + carry * r;
        q[k] = carry;
    }
    return q;
}

}  // namespace

GaussRat evaluate_univariate(const std::vector<GaussRat>& coeffs, const GaussRat& z) {
    GaussRat acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

RootSet gaussian_roots(std::vector<GaussRat> coeffs) {
    coeffs = trimmed(std::move(coeffs));
    if (coeffs.empty()) throw std::invalid_argument("roots of the zero polynomial");
    RootSet out;

    int zero_mult = 0;
    while (coeffs.size() > 1 && coeffs.front().is_zero()) {
        coeffs.erase(coeffs.begin());
        ++zero_mult;
    }
    if (zero_mult > 0) out.roots.push_back({GaussRat(0), zero_mult});
    if (coeffs.size() == 1) return out;

    if (coeffs.size() == 2) {
        out.roots.push_back({-coeffs[0] / coeffs[1], 1});
    } else {
        Integer lcm = 1;
        for (const auto& c : coeffs) {
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.re().get_den_mpz_t());
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.im().get_den_mpz_t());
        }
        auto to_int = [&](const GaussRat& c) {
            Rational re = c.re() * lcm;
            Rational im = c.im() * lcm;
            return GaussInt{re.get_num(), im.get_num()};
        };
        auto num_divs = divisors(to_int(coeffs.front()));
        auto den_divs = divisors(to_int(coeffs.back()));
        std::vector<GaussRat> remaining = coeffs;
        if (num_divs && den_divs) {
            std::set<GaussRat> candidates;
            const GaussRat units[4] = {GaussRat(1), GaussRat(-1), GaussRat::i(), -GaussRat::i()};
            for (const auto& p : *num_divs) {
                GaussRat pr(Rational(p.re), Rational(p.im));
                for (const auto& q : *den_divs) {
                    GaussRat base = pr / GaussRat(Rational(q.re), Rational(q.im));
                    for (const auto& u : units) candidates.insert(base * u);
                }
            }
            for (const auto& z : candidates) {
                int mult = 0;
                while (remaining.size() > 1 && evaluate_univariate(remaining, z).is_zero()) {
                    remaining = deflate(remaining, z);
                    ++mult;
                }
                if (mult > 0) out.roots.push_back({z, mult});
                if (remaining.size() == 1) break;
            }
        }
        out.unresolved = static_cast<int>(remaining.size()) - 1;
    }
    std::sort(out.roots.begin(), out.roots.end(), [](const Root& a, const Root& b) { return a.value < b.value; });
    return out;
}

RootSet gaussian_roots(const Poly& p, std::size_t var) {
    for (std::size_t k = 0; k < p.nvars(); ++k) {
        if (k != var && p.uses_var(k)) throw std::invalid_argument("gaussian_roots: polynomial is not univariate");
    }
    std::vector<GaussRat> coeffs;
    for (const auto& c : p.coefficients_in(var)) coeffs.push_back(c.constant_term());
    return gaussian_roots(std::move(coeffs));
}

}  // namespace asymih

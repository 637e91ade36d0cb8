#include "asymih/algebra.hpp"

#include "asymih/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace asymih {
namespace {

bool divides_monomial(const Exponent& d, const Exponent& e) {
    for (std::size_t k = 0; k < d.size(); ++k) {
        if (d[k] > e[k]) return false;
    }
    return true;
}

std::optional<std::size_t> first_used_var(const Poly& a, const Poly& b) {
    for (std::size_t k = 0; k < a.nvars(); ++k) {
        if (a.uses_var(k) || b.uses_var(k)) return k;
    }
    return std::nullopt;
}

std::vector<std::size_t> used_vars(const Poly& p) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < p.nvars(); ++k) {
        if (p.uses_var(k)) out.push_back(k);
    }
    return out;
}

}  // namespace

std::pair<Poly, Poly> divide(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.vars() != b.vars()) throw VariableMismatch("divide: different variable lists");
    Poly q(a.vars());
    Poly r(a.vars());
    Poly p = a;
    const auto& [eb, cb] = b.leading_term();
    while (!p.is_zero()) {
        auto [ep, cp] = p.leading_term();
        if (divides_monomial(eb, ep)) {
            Exponent shift(ep.size());
            for (std::size_t k = 0; k < ep.size(); ++k) shift[k] = ep[k] - eb[k];
            Poly t = Poly::monomial(a.vars(), shift, cp / cb);
            q += t;
            p -= t * b;
        } else {
            r.add_term(ep, cp);
            p.add_term(ep, -cp);
        }
    }
    return {q, r};
}

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
    auto [q, r] = divide(a, b);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

Poly make_monic(const Poly& p) {
    if (p.is_zero()) return p;
    GaussRat lc = p.leading_term().second;
    if (lc.is_one()) return p;
    return p * (GaussRat(1) / lc);
}

Poly content_in(const Poly& p, std::size_t var) {
    if (p.is_zero()) return p;
    std::vector<Poly> coeffs;
    for (auto& c : p.coefficients_in(var)) {
        if (!c.is_zero()) coeffs.push_back(std::move(c));
    }
    return gcd(coeffs);
}

Poly primitive_part_in(const Poly& p, std::size_t var) {
    if (p.is_zero()) return p;
    Poly c = content_in(p, var);
    auto q = divide_exact(p, c);
    if (!q) throw std::logic_error("content does not divide polynomial");
    return *q;
}

Poly pseudo_remainder(const Poly& a, const Poly& b, std::size_t var) {
    if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero");
    int db = *b.degree_in(var);
    Poly lcb = b.leading_coefficient_in(var);
    Poly r = a;
    Exponent shift(a.nvars(), 0);
    while (!r.is_zero() && *r.degree_in(var) >= db) {
        int dr = *r.degree_in(var);
        Poly lcr = r.leading_coefficient_in(var);
        shift[var] = dr - db;
        r = lcb * r - lcr * Poly::monomial(a.vars(), shift, GaussRat(1)) * b;
    }
    return r;
}

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return make_monic(b);
    if (b.is_zero()) return make_monic(a);
    if (a.vars() != b.vars()) throw VariableMismatch("gcd: different variable lists");
    auto v = first_used_var(a, b);
    if (!v) return Poly::constant(a.vars(), GaussRat(1));
    if (!a.uses_var(*v)) return gcd(a, content_in(b, *v));
    if (!b.uses_var(*v)) return gcd(content_in(a, *v), b);

    Poly ca = content_in(a, *v);
    Poly cb = content_in(b, *v);
    Poly c = gcd(ca, cb);
    Poly pa = *divide_exact(a, ca);
    Poly pb = *divide_exact(b, cb);
    if (*pa.degree_in(*v) < *pb.degree_in(*v)) std::swap(pa, pb);
    while (!pb.is_zero() && *pb.degree_in(*v) > 0) {
        Poly r = pseudo_remainder(pa, pb, *v);
        pa = std::move(pb);
        pb = r.is_zero() ? r : primitive_part_in(r, *v);
    }
    if (!pb.is_zero()) return make_monic(c);
    return make_monic(c * primitive_part_in(pa, *v));
}

Poly gcd(const std::vector<Poly>& polys) {
    if (polys.empty()) throw std::invalid_argument("gcd of an empty list");
    Poly g(polys.front().vars());
    for (const auto& p : polys) {
        g = gcd(g, p);
        if (!g.is_zero() && g.is_constant()) break;
    }
    return g;
}

Poly squarefree_part(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree part of zero");
    if (p.is_constant()) return Poly::constant(p.vars(), GaussRat(1));
    std::vector<Poly> gens{p};
    for (std::size_t k = 0; k < p.nvars(); ++k) {
        if (p.uses_var(k)) gens.push_back(p.derivative(k));
    }
    Poly g = gcd(gens);
    return make_monic(*divide_exact(p, g));
}

bool canonical_less(const Poly& a, const Poly& b) {
    auto da = a.degree();
    auto db = b.degree();
    if (da != db) return da < db;
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    GrlexDescending order;
    for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
        if (ia->first != ib->first) return order(ia->first, ib->first);
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return ia == a.terms().end() && ib != b.terms().end();
}

std::vector<Poly> coprime_squarefree_basis(const std::vector<Poly>& polys) {
    std::vector<Poly> items;
    for (const auto& p : polys) {
        if (p.is_zero()) throw std::invalid_argument("coprime basis of zero polynomial");
        if (!p.is_constant()) items.push_back(squarefree_part(p));
    }

    // Split off contents with respect to each variable (e.g. y1 * (y1*y2 - 1)).
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t idx = 0; idx < items.size() && !changed; ++idx) {
            for (std::size_t v = 0; v < items[idx].nvars(); ++v) {
                if (!items[idx].uses_var(v)) continue;
                Poly c = content_in(items[idx], v);
                if (c.is_constant()) continue;
                Poly rest = *divide_exact(items[idx], c);
                items[idx] = make_monic(c);
                if (!rest.is_constant()) items.push_back(make_monic(rest));
                changed = true;
                break;
            }
        }
    }

    // Coprime refinement.
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < items.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < items.size() && !changed; ++j) {
                Poly g = gcd(items[i], items[j]);
                if (g.is_constant()) continue;
                Poly a = *divide_exact(items[i], g);
                Poly b = *divide_exact(items[j], g);
                std::vector<Poly> next;
                for (std::size_t k = 0; k < items.size(); ++k) {
                    if (k != i && k != j) next.push_back(items[k]);
                }
                for (Poly* p : {&a, &b, &g}) {
                    if (!p->is_constant()) next.push_back(make_monic(*p));
                }
                items = std::move(next);
                changed = true;
            }
        }
    }

    // Split univariate items into Gaussian-rational linear factors where possible.
    std::vector<Poly> out;
    for (const auto& p : items) {
        auto vars = used_vars(p);
        if (vars.size() != 1 || *p.degree() < 2) {
            out.push_back(p);
            continue;
        }
        std::size_t v = vars.front();
        RootSet rs = gaussian_roots(p, v);
        Poly rest = p;
        Poly x = Poly::variable(p.vars(), p.vars()[v]);
        for (const auto& r : rs.roots) {
            Poly lin = x - Poly::constant(p.vars(), r.value);
            out.push_back(lin);
            rest = *divide_exact(rest, lin);
        }
        if (!rest.is_constant()) out.push_back(make_monic(rest));
    }
    std::sort(out.begin(), out.end(), canonical_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Poly determinant(std::vector<std::vector<Poly>> m) {
    std::size_t n = m.size();
    if (n == 0) throw std::invalid_argument("determinant of an empty matrix");
    for (const auto& row : m) {
        if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
    }
    const auto& vars = m[0][0].vars();
    bool negate = false;
    Poly prev = Poly::constant(vars, GaussRat(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return Poly(vars);
            std::swap(m[k], m[r]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Poly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                auto q = divide_exact(num, prev);
                if (!q) throw std::logic_error("Bareiss step is not exact");
                m[i][j] = std::move(*q);
            }
            m[i][k] = Poly(vars);
        }
        prev = m[k][k];
    }
    Poly det = m[n - 1][n - 1];
    return negate ? -det : det;
}

std::vector<std::vector<Poly>> sylvester_matrix(const Poly& f, const Poly& g, std::size_t var) {
    auto cf = f.coefficients_in(var);
    auto cg = g.coefficients_in(var);
    std::size_t m = cf.size() - 1;
    std::size_t n = cg.size() - 1;
    std::size_t size = m + n;
    std::vector<std::vector<Poly>> s(size, std::vector<Poly>(size, Poly(f.vars())));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t k = 0; k <= m; ++k) s[r][r + k] = cf[m - k];
    }
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t k = 0; k <= n; ++k) s[n + r][r + k] = cg[n - k];
    }
    return s;
}

Poly resultant(const Poly& f, const Poly& g, std::size_t var) {
    if (f.vars() != g.vars()) throw VariableMismatch("resultant: different variable lists");
    if (f.is_zero() && g.is_zero()) throw std::invalid_argument("resultant of two zero polynomials");
    if (f.is_zero() || g.is_zero()) return Poly(f.vars());
    int m = *f.degree_in(var);
    int n = *g.degree_in(var);
    if (m == 0) return f.pow(static_cast<unsigned>(n));
    if (n == 0) return g.pow(static_cast<unsigned>(m));
    return determinant(sylvester_matrix(f, g, var));
}

Poly resultant(const Poly& f, const Poly& g, const std::string& var) {
    return resultant(f, g, f.require_var(var));
}

}  // namespace asymih

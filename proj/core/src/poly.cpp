#include "asymih/poly.hpp"

#include <algorithm>
#include <numeric>

namespace asymih {

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool GrlexDescending::operator()(const Exponent& a, const Exponent& b) const {
    int da = total_degree(a);
    int db = total_degree(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Poly::Poly(std::vector<std::string> vars) : vars_(std::move(vars)) {
    for (const auto& v : vars_) {
        if (v == "i") throw std::invalid_argument("'i' is reserved for the imaginary unit");
    }
}

Poly Poly::constant(std::vector<std::string> vars, const GaussRat& c) {
    Poly p(std::move(vars));
    p.add_term(Exponent(p.nvars(), 0), c);
    return p;
}

Poly Poly::variable(std::vector<std::string> vars, const std::string& name) {
    Poly p(std::move(vars));
    Exponent e(p.nvars(), 0);
    e[p.require_var(name)] = 1;
    p.add_term(e, GaussRat(1));
    return p;
}

Poly Poly::monomial(std::vector<std::string> vars, Exponent exp, const GaussRat& c) {
    Poly p(std::move(vars));
    if (exp.size() != p.nvars()) throw std::invalid_argument("exponent length mismatch");
    for (int k : exp) {
        if (k < 0) throw std::invalid_argument("negative exponent");
    }
    p.add_term(exp, c);
    return p;
}

std::optional<std::size_t> Poly::var_index(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vars_.begin());
}

std::size_t Poly::require_var(const std::string& name) const {
    auto idx = var_index(name);
    if (!idx) throw std::invalid_argument("unknown variable '" + name + "'");
    return *idx;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

GaussRat Poly::constant_term() const { return coefficient(Exponent(nvars(), 0)); }

GaussRat Poly::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? GaussRat(0) : it->second;
}

Degree Poly::degree() const {
    if (terms_.empty()) return std::nullopt;
    return total_degree(terms_.begin()->first);
}

Degree Poly::degree_in(std::size_t var) const {
    if (terms_.empty()) return std::nullopt;
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

bool Poly::uses_var(std::size_t var) const {
    return std::any_of(terms_.begin(), terms_.end(), [var](const auto& t) { return t.first[var] > 0; });
}

const std::pair<const Exponent, GaussRat>& Poly::leading_term() const {
    if (terms_.empty()) throw std::invalid_argument("leading term of zero polynomial");
    return *terms_.begin();
}

void Poly::add_term(const Exponent& e, const GaussRat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Poly::check_compatible(const Poly& o) const {
    if (vars_ != o.vars_) throw VariableMismatch("polynomials over different variable lists");
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.check_compatible(b);
    Poly r(a.vars_);
    Exponent e(a.nvars());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Poly& Poly::operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
}

Poly& Poly::operator*=(const GaussRat& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
}

Poly Poly::pow(unsigned e) const {
    Poly result = constant(vars_, GaussRat(1));
    Poly base = *this;
    while (e != 0) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e != 0) base *= base;
    }
    return result;
}

Poly Poly::derivative(std::size_t var) const {
    Poly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponent f = e;
        --f[var];
        r.add_term(f, c * GaussRat(e[var]));
    }
    return r;
}

GaussRat Poly::evaluate(const std::vector<GaussRat>& point) const {
    if (point.size() != nvars()) throw std::invalid_argument("evaluation point has wrong dimension");
    GaussRat sum(0);
    for (const auto& [e, c] : terms_) {
        GaussRat t = c;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] != 0) t *= point[k].pow(static_cast<unsigned>(e[k]));
        }
        sum += t;
    }
    return sum;
}

Poly Poly::specialize(std::size_t var, const GaussRat& value) const {
    Poly r(vars_);
    std::vector<GaussRat> powers{GaussRat(1)};
    for (const auto& [e, c] : terms_) {
        while (static_cast<int>(powers.size()) <= e[var]) powers.push_back(powers.back() * value);
        Exponent f = e;
        f[var] = 0;
        r.add_term(f, c * powers[static_cast<std::size_t>(e[var])]);
    }
    return r;
}

Poly Poly::substitute(std::size_t var, const Poly& value) const {
    check_compatible(value);
    auto coeffs = coefficients_in(var);
    Poly r(vars_);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        r = r * value + *it;
    }
    return r;
}

std::vector<Poly> Poly::coefficients_in(std::size_t var) const {
    auto d = degree_in(var);
    if (!d) return {};
    std::vector<Poly> out(static_cast<std::size_t>(*d) + 1, Poly(vars_));
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        f[var] = 0;
        out[static_cast<std::size_t>(e[var])].add_term(f, c);
    }
    return out;
}

Poly Poly::leading_coefficient_in(std::size_t var) const {
    auto coeffs = coefficients_in(var);
    if (coeffs.empty()) throw std::invalid_argument("leading coefficient of zero polynomial");
    return coeffs.back();
}

Poly Poly::embed(const std::vector<std::string>& vars) const {
    Poly r(vars);
    std::vector<std::size_t> target(nvars());
    for (std::size_t k = 0; k < nvars(); ++k) {
        auto idx = r.var_index(vars_[k]);
        if (!idx) {
            if (uses_var(k)) throw std::invalid_argument("cannot embed: variable '" + vars_[k] + "' missing");
            target[k] = vars.size();
        } else {
            target[k] = *idx;
        }
    }
    for (const auto& [e, c] : terms_) {
        Exponent f(vars.size(), 0);
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] != 0) f[target[k]] = e[k];
        }
        r.add_term(f, c);
    }
    return r;
}

Poly Poly::initial_form() const {
    if (is_zero()) throw std::invalid_argument("initial form of the zero polynomial");
    int top = *degree();
    Poly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (total_degree(e) == top) r.terms_.emplace(e, c);
    }
    return r;
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = *degree();
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return total_degree(t.first) == d; });
}

namespace {

std::string monomial_string(const std::vector<std::string>& vars, const Exponent& e) {
    std::string s;
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        if (!s.empty()) s += '*';
        s += vars[k];
        if (e[k] > 1) s += '^' + std::to_string(e[k]);
    }
    return s;
}

std::string term_string(const std::vector<std::string>& vars, const Exponent& e, const GaussRat& c) {
    std::string mono = monomial_string(vars, e);
    if (mono.empty()) return c.to_string();
    if (c.is_one()) return mono;
    if (c == GaussRat(-1)) return "-" + mono;
    return c.to_string() + "*" + mono;
}

}  // namespace

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string t = term_string(vars_, e, c);
        if (first) {
            out = t;
            first = false;
        } else if (t.front() == '-') {
            out += " - " + t.substr(1);
        } else {
            out += " + " + t;
        }
    }
    return out;
}

}  // namespace asymih

#include "asymih/ih.hpp"

#include "asymih/linalg.hpp"
#include "asymih/pseudomanifold.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace asymih {

Perversity::Perversity(int m, std::vector<int> values) : m_(m), values_(std::move(values)) {
    if (m < 2) throw PerversityError("perversities need m >= 2");
    if (static_cast<int>(values_.size()) != m - 1) {
        throw PerversityError("perversity for m=" + std::to_string(m) + " needs " + std::to_string(m - 1) + " values");
    }
    if (values_[0] != 0) throw PerversityError("perversity must start with p_2 = 0");
    for (std::size_t k = 1; k < values_.size(); ++k) {
        const int step = values_[k] - values_[k - 1];
        if (step != 0 && step != 1) throw PerversityError("perversity steps must be 0 or 1");
    }
}

int Perversity::at(int k) const {
    if (k < 2 || k > m_) throw std::out_of_range("perversity index out of range");
    return values_[static_cast<std::size_t>(k - 2)];
}

std::string Perversity::to_string() const {
    std::string out = "(";
    for (std::size_t k = 0; k < values_.size(); ++k) out += (k ? "," : "") + std::to_string(values_[k]);
    return out + ")";
}

StandardPerversities standard_perversities(int m) {
    if (m < 2) throw PerversityError("perversities need m >= 2");
    std::vector<int> zero, lower, upper, top;
    for (int k = 2; k <= m; ++k) {
        zero.push_back(0);
        lower.push_back((k - 2) / 2);
        upper.push_back((k - 1) / 2);
        top.push_back(k - 2);
    }
    return {Perversity(m, zero), Perversity(m, lower), Perversity(m, upper), Perversity(m, top)};
}

Perversity parse_perversity(const std::string& text, int m) {
    const auto std_p = standard_perversities(m);
    if (text == "0") return std_p.zero;
    if (text == "m") return std_p.lower_middle;
    if (text == "n") return std_p.upper_middle;
    if (text == "t") return std_p.top;
    std::vector<int> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            values.push_back(std::stoi(item, &used));
            while (used < item.size() && item[used] == ' ') ++used;
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw PerversityError("cannot parse perversity '" + text + "'");
        }
    }
    return Perversity(m, values);
}

bool complementary(const Perversity& p, const Perversity& q) {
    if (p.m() != q.m()) return false;
    for (int k = 2; k <= p.m(); ++k) {
        if (p.at(k) + q.at(k) != k - 2) return false;
    }
    return true;
}

bool dominated(const Perversity& p, const Perversity& q) {
    if (p.m() != q.m()) return false;
    for (int k = 2; k <= p.m(); ++k) {
        if (p.at(k) > q.at(k)) return false;
    }
    return true;
}

Filtration::Filtration(SimplicialComplex base, std::vector<std::vector<int>> members)
    : base_(std::move(base)), m_(base_.dim()) {
    if (m_ < 1) throw FiltrationError("filtered complex must have dimension >= 1");
    if (static_cast<int>(members.size()) != m_) {
        throw FiltrationError("filtration needs members X_0..X_" + std::to_string(m_ - 1));
    }
    std::vector<std::set<int>> sets;
    for (const auto& mem : members) sets.emplace_back(mem.begin(), mem.end());
    for (std::size_t j = 0; j + 1 < sets.size(); ++j) {
        if (!std::includes(sets[j + 1].begin(), sets[j + 1].end(), sets[j].begin(), sets[j].end())) {
            throw FiltrationError("filtration members are not nested at X_" + std::to_string(j));
        }
    }
    level_.assign(static_cast<std::size_t>(base_.vertex_count()), m_);
    for (int j = m_ - 1; j >= 0; --j) {
        for (int v : sets[static_cast<std::size_t>(j)]) {
            if (v < 0 || v >= base_.vertex_count()) throw FiltrationError("filtration vertex out of range");
            level_[static_cast<std::size_t>(v)] = j;
        }
    }
    for (int v = 0; v < base_.vertex_count(); ++v) {
        if (level_[static_cast<std::size_t>(v)] == m_ - 1 && m_ >= 2) {
            throw FiltrationError("filtration has a codimension-one stratum (X_{m-1} != X_{m-2})");
        }
    }
    for (int j = 0; j < m_; ++j) {
        auto d = stratum_dim(j);
        if (d && *d != j) {
            throw FiltrationError("stratum X_" + std::to_string(j) + " \\ X_" + std::to_string(j - 1) +
                                  " has dimension " + std::to_string(*d));
        }
    }
}

Filtration Filtration::trivial(SimplicialComplex base) {
    const int m = base.dim();
    return Filtration(std::move(base), std::vector<std::vector<int>>(static_cast<std::size_t>(std::max(m, 0))));
}

Filtration Filtration::from_subcomplexes(SimplicialComplex base, const std::map<int, std::string>& indices) {
    const int m = base.dim();
    for (const auto& [j, name] : indices) {
        if (j < 0 || j > m) throw FiltrationError("filtration index " + std::to_string(j) + " out of range");
        base.subcomplex(name);
    }
    auto all_full = [&](const SimplicialComplex& x) {
        for (const auto& [j, name] : indices) {
            if (j < m && !x.is_full(x.subcomplex(name))) return false;
        }
        return true;
    };
    bool subdivided = false;
    if (!all_full(base)) {
        base = barycentric_subdivision(base);
        subdivided = true;
        if (!all_full(base)) throw FiltrationError("filtration members are not full after subdivision");
    }
    std::vector<std::vector<int>> members;
    std::vector<int> current;
    for (int j = 0; j < m; ++j) {
        auto it = indices.find(j);
        if (it != indices.end()) current = base.subcomplex(it->second).vertices();
        members.push_back(current);
    }
    Filtration f(std::move(base), std::move(members));
    f.subdivided_ = subdivided;
    return f;
}

std::vector<int> Filtration::member(int j) const {
    std::vector<int> out;
    for (int v = 0; v < base_.vertex_count(); ++v) {
        if (level_[static_cast<std::size_t>(v)] <= j) out.push_back(v);
    }
    return out;
}

bool Filtration::in_member(int vertex, int j) const { return level_.at(static_cast<std::size_t>(vertex)) <= j; }

int Filtration::vertices_in(const Simplex& s, int j) const {
    int n = 0;
    for (int v : s) n += in_member(v, j) ? 1 : 0;
    return n;
}

std::optional<int> Filtration::stratum_dim(int j) const {
    std::optional<int> out;
    for (int d = 0; d <= base_.dim(); ++d) {
        for (const auto& s : base_.simplices(d)) {
            int top = -1;
            for (int v : s) top = std::max(top, level_[static_cast<std::size_t>(v)]);
            if (top == j) out = std::max(out.value_or(-1), d);
        }
    }
    return out;
}

bool is_allowable(const Filtration& f, const Perversity& p, const Simplex& sigma, int i) {
    const int m = f.m();
    if (p.m() != m) throw PerversityError("perversity length does not match the filtration");
    for (int k = 2; k <= m; ++k) {
        const int n = f.vertices_in(sigma, m - k);
        if (n > 0 && n - 1 > i - k + p.at(k)) return false;
    }
    return true;
}

std::vector<std::size_t> allowable_simplices(const Filtration& f, const Perversity& p, int i) {
    std::vector<std::size_t> out;
    const auto& all = f.base().simplices(i);
    for (std::size_t k = 0; k < all.size(); ++k) {
        if (is_allowable(f, p, all[k], i)) out.push_back(k);
    }
    return out;
}

namespace {

struct DegreeData {
    std::vector<std::size_t> allowable;
    std::vector<char> non_allowable;  // flag per simplex
};

std::vector<DegreeData> degree_data(const Filtration& f, const Perversity& p) {
    std::vector<DegreeData> out;
    for (int i = 0; i <= f.m(); ++i) {
        DegreeData d;
        d.allowable = allowable_simplices(f, p, i);
        d.non_allowable.assign(f.base().count(i), 1);
        for (std::size_t k : d.allowable) d.non_allowable[k] = 0;
        out.push_back(std::move(d));
    }
    return out;
}

// Boundary_i restricted to allowable columns.
SparseMatrix allowable_boundary(const Filtration& f, const std::vector<DegreeData>& dd, int i) {
    return boundary_matrix(f.base(), i).select_columns(dd[static_cast<std::size_t>(i)].allowable);
}

// Basis of IC_i as integer vectors over the simplex indices.
std::vector<SparseVec> ic_vectors(const Filtration& f, const std::vector<DegreeData>& dd, int i) {
    const auto& allowed = dd[static_cast<std::size_t>(i)].allowable;
    std::vector<SparseVec> raw;
    if (i == 0) {
        for (std::size_t k : allowed) raw.push_back({{k, Integer(1)}});
        return raw;
    }
    auto projected = allowable_boundary(f, dd, i).select_rows(dd[static_cast<std::size_t>(i - 1)].non_allowable);
    for (auto& v : kernel_basis(projected)) {
        for (auto& [k, c] : v) k = allowed[k];
        raw.push_back(std::move(v));
    }
    return raw;
}

ChainVector to_chain(int degree, RatVec v) { return ChainVector{degree, std::move(v)}; }

}  // namespace

std::vector<AllowableBasis> ic_complex(const Filtration& f, const Perversity& p) {
    const auto dd = degree_data(f, p);
    std::vector<AllowableBasis> out;
    for (int i = 0; i <= f.m(); ++i) {
        AllowableBasis b;
        b.degree = i;
        b.allowable = dd[static_cast<std::size_t>(i)].allowable;
        for (auto& v : rref_basis(ic_vectors(f, dd, i))) b.ic_basis.push_back(to_chain(i, std::move(v)));
        out.push_back(std::move(b));
    }
    for (int i = 1; i <= f.m(); ++i) {
        Reducer span;
        for (const auto& c : out[static_cast<std::size_t>(i - 1)].ic_basis) span.add(clear_denominators(c.coefficients));
        for (const auto& c : out[static_cast<std::size_t>(i)].ic_basis) {
            ChainVector bd = boundary(f.base(), c);
            if (!bd.is_zero() && !span.in_span(clear_denominators(bd.coefficients))) {
                throw std::logic_error("boundary of IC_" + std::to_string(i) + " is not contained in IC_" +
                                       std::to_string(i - 1));
            }
        }
    }
    return out;
}

std::vector<long> ih_betti(const Filtration& f, const Perversity& p) {
    const auto dd = degree_data(f, p);
    const int m = f.m();
    // full[i] = rank of boundary_i on A_i; proj[i] = rank of its projection to non-allowable faces.
    std::vector<long> full(static_cast<std::size_t>(m) + 2, 0);
    std::vector<long> proj(static_cast<std::size_t>(m) + 2, 0);
    for (int i = 1; i <= m; ++i) {
        auto b = allowable_boundary(f, dd, i);
        full[static_cast<std::size_t>(i)] = static_cast<long>(rank(b));
        proj[static_cast<std::size_t>(i)] =
            static_cast<long>(rank(b.select_rows(dd[static_cast<std::size_t>(i - 1)].non_allowable)));
    }
    std::vector<long> out;
    for (int i = 0; i <= m; ++i) {
        const auto u = static_cast<std::size_t>(i);
        out.push_back(static_cast<long>(dd[u].allowable.size()) - full[u] - full[u + 1] + proj[u + 1]);
    }
    return out;
}

std::vector<ChainVector> ih_generators(const Filtration& f, const Perversity& p, int i) {
    std::vector<ChainVector> out;
    if (i < 0 || i > f.m()) return out;
    const auto dd = degree_data(f, p);
    const auto& allowed = dd[static_cast<std::size_t>(i)].allowable;
    std::vector<SparseVec> cycles;
    if (i == 0) {
        for (std::size_t k : allowed) cycles.push_back({{k, Integer(1)}});
    } else {
        for (auto& v : kernel_basis(allowable_boundary(f, dd, i))) {
            for (auto& [k, c] : v) k = allowed[k];
            cycles.push_back(std::move(v));
        }
    }
    Reducer image;
    if (i < f.m()) {
        const auto bd = boundary_matrix(f.base(), i + 1);
        for (const auto& v : ic_vectors(f, dd, i + 1)) image.add(multiply(bd, v));
    }
    for (auto& z : rref_basis(cycles)) {
        if (image.add(clear_denominators(z))) out.push_back(to_chain(i, std::move(z)));
    }
    return out;
}

DualityReport duality_check(const Filtration& f, const Perversity& p, const Perversity& q) {
    if (!complementary(p, q)) throw PerversityError("perversities " + p.to_string() + " and " + q.to_string() +
                                                    " are not complementary");
    DualityReport rep;
    if (f.base().boundary_name()) {
        rep.reason = "complex has a boundary";
        return rep;
    }
    const auto pm = validate_pseudomanifold(f.base());
    if (!pm.is_pseudomanifold()) {
        rep.reason = "not a closed pseudomanifold";
        return rep;
    }
    if (!is_orientable(f.base())) {
        rep.reason = "not orientable";
        return rep;
    }
    rep.applicable = true;
    rep.p_ranks = ih_betti(f, p);
    rep.q_ranks = ih_betti(f, q);
    rep.passed = std::equal(rep.p_ranks.begin(), rep.p_ranks.end(), rep.q_ranks.rbegin(), rep.q_ranks.rend());
    return rep;
}

bool independence_check(const Filtration& a, const Filtration& b, const Perversity& p) {
    if (!(a.base().vertex_count() == b.base().vertex_count() && a.base().maximal_simplices() == b.base().maximal_simplices())) {
        throw FiltrationError("filtrations live on different complexes");
    }
    return ih_betti(a, p) == ih_betti(b, p);
}

}  // namespace asymih

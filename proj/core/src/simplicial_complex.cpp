#include "asymih/simplicial_complex.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace asymih {
namespace {

void check_simplex(const Simplex& s, int vertex_count) {
    if (s.empty()) throw ComplexError("empty simplex");
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (s[k] < 0 || s[k] >= vertex_count) {
            throw ComplexError("vertex " + std::to_string(s[k]) + " out of range");
        }
        if (k > 0 && s[k] <= s[k - 1]) throw ComplexError("simplex vertices must be strictly increasing");
    }
}

std::string simplex_text(const Simplex& s) {
    std::string out = "[";
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (k) out += ",";
        out += std::to_string(s[k]);
    }
    return out + "]";
}

std::vector<Simplex> maximal_of(const std::set<Simplex>& all) {
    std::set<Simplex> covered;
    for (const auto& s : all) {
        if (s.size() < 2) continue;
        for (auto& f : facets_of(s)) covered.insert(std::move(f));
    }
    std::vector<Simplex> out;
    for (const auto& s : all) {
        if (!covered.count(s)) out.push_back(s);
    }
    return out;
}

}  // namespace

std::vector<int> Subcomplex::vertices() const {
    std::vector<int> out;
    for (const auto& s : simplices) {
        if (s.size() == 1) out.push_back(s[0]);
    }
    return out;
}

std::vector<Simplex> Subcomplex::maximal_simplices() const { return maximal_of(simplices); }

int Subcomplex::dim() const {
    int d = -1;
    for (const auto& s : simplices) d = std::max(d, static_cast<int>(s.size()) - 1);
    return d;
}

std::vector<Simplex> facets_of(const Simplex& s) {
    std::vector<Simplex> out;
    out.reserve(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) {
        Simplex f;
        f.reserve(s.size() - 1);
        for (std::size_t j = 0; j < s.size(); ++j) {
            if (j != k) f.push_back(s[j]);
        }
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<Simplex> all_faces(const Simplex& s) {
    std::vector<Simplex> out;
    const std::size_t n = s.size();
    for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
        Simplex f;
        for (std::size_t j = 0; j < n; ++j) {
            if (mask & (1UL << j)) f.push_back(s[j]);
        }
        out.push_back(std::move(f));
    }
    return out;
}

SimplicialComplex SimplicialComplex::from_top_simplices(int vertex_count, const std::vector<Simplex>& tops) {
    if (vertex_count < 0) throw ComplexError("negative vertex count");
    std::set<Simplex> closure;
    for (const auto& t : tops) {
        check_simplex(t, vertex_count);
        if (t.size() > 20) throw ComplexError("simplex dimension too large");
        for (auto& f : all_faces(t)) closure.insert(std::move(f));
    }
    SimplicialComplex x;
    x.vertex_count_ = vertex_count;
    for (const auto& s : closure) {
        const std::size_t d = s.size() - 1;
        if (x.by_dim_.size() <= d) x.by_dim_.resize(d + 1);
        x.by_dim_[d].push_back(s);
    }
    x.index_.resize(x.by_dim_.size());
    for (std::size_t d = 0; d < x.by_dim_.size(); ++d) {
        for (std::size_t i = 0; i < x.by_dim_[d].size(); ++i) x.index_[d].emplace(x.by_dim_[d][i], i);
    }
    return x;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int d) const {
    static const std::vector<Simplex> none;
    if (d < 0 || d >= static_cast<int>(by_dim_.size())) return none;
    return by_dim_[static_cast<std::size_t>(d)];
}

std::size_t SimplicialComplex::size() const {
    std::size_t n = 0;
    for (const auto& v : by_dim_) n += v.size();
    return n;
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
    if (s.empty() || s.size() > index_.size()) return std::nullopt;
    const auto& idx = index_[s.size() - 1];
    auto it = idx.find(s);
    if (it == idx.end()) return std::nullopt;
    return it->second;
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
    std::set<Simplex> all;
    for (const auto& v : by_dim_) all.insert(v.begin(), v.end());
    return maximal_of(all);
}

void SimplicialComplex::add_subcomplex(const std::string& name, const std::vector<Simplex>& tops) {
    Subcomplex sub;
    for (const auto& t : tops) {
        check_simplex(t, vertex_count_);
        for (auto& f : all_faces(t)) sub.simplices.insert(std::move(f));
    }
    add_subcomplex(name, std::move(sub));
}

void SimplicialComplex::add_subcomplex(const std::string& name, Subcomplex sub) {
    for (const auto& s : sub.simplices) {
        if (!contains(s)) {
            throw ComplexError("subcomplex '" + name + "' contains " + simplex_text(s) + " which is not in the complex");
        }
        if (s.size() > 1) {
            for (const auto& f : facets_of(s)) {
                if (!sub.contains(f)) throw ComplexError("subcomplex '" + name + "' is not closed under faces");
            }
        }
    }
    subcomplexes_[name] = std::move(sub);
}

const Subcomplex& SimplicialComplex::subcomplex(const std::string& name) const {
    auto it = subcomplexes_.find(name);
    if (it == subcomplexes_.end()) throw ComplexError("unknown subcomplex '" + name + "'");
    return it->second;
}

void SimplicialComplex::set_boundary(const std::string& name) {
    if (!has_subcomplex(name)) throw ComplexError("boundary refers to unknown subcomplex '" + name + "'");
    boundary_ = name;
}

const Subcomplex* SimplicialComplex::boundary() const {
    if (!boundary_) return nullptr;
    return &subcomplexes_.at(*boundary_);
}

Subcomplex SimplicialComplex::full_subcomplex(const std::vector<int>& vertices) const {
    std::vector<char> in(static_cast<std::size_t>(vertex_count_), 0);
    for (int v : vertices) {
        if (v < 0 || v >= vertex_count_) throw ComplexError("vertex out of range");
        in[static_cast<std::size_t>(v)] = 1;
    }
    Subcomplex sub;
    for (const auto& dimv : by_dim_) {
        for (const auto& s : dimv) {
            if (std::all_of(s.begin(), s.end(), [&](int v) { return in[static_cast<std::size_t>(v)] != 0; })) {
                sub.simplices.insert(s);
            }
        }
    }
    return sub;
}

bool SimplicialComplex::is_full(const Subcomplex& sub) const {
    return full_subcomplex(sub.vertices()).simplices == sub.simplices;
}

long SimplicialComplex::euler_characteristic() const {
    long chi = 0;
    for (std::size_t d = 0; d < by_dim_.size(); ++d) {
        chi += (d % 2 == 0 ? 1L : -1L) * static_cast<long>(by_dim_[d].size());
    }
    return chi;
}

std::map<std::string, std::set<Simplex>> SimplicialComplex::subcomplex_tops() const {
    std::map<std::string, std::set<Simplex>> out;
    for (const auto& [name, sub] : subcomplexes_) {
        auto tops = maximal_of(sub.simplices);
        out[name] = std::set<Simplex>(tops.begin(), tops.end());
    }
    return out;
}

std::string SimplicialComplex::canonical_dump() const {
    std::ostringstream os;
    os << "complex vertices=" << vertex_count_ << " dim=" << dim() << "\n";
    for (std::size_t d = 0; d < by_dim_.size(); ++d) os << "f" << d << "=" << by_dim_[d].size() << "\n";
    os << "top";
    for (const auto& s : maximal_simplices()) os << " " << simplex_text(s);
    os << "\n";
    for (const auto& [name, tops] : subcomplex_tops()) {
        os << "sub " << name;
        for (const auto& s : tops) os << " " << simplex_text(s);
        os << "\n";
    }
    if (boundary_) os << "boundary " << *boundary_ << "\n";
    return os.str();
}

int barycenter_id(const SimplicialComplex& x, const Simplex& s) {
    auto idx = x.index_of(s);
    if (!idx) throw ComplexError("simplex " + simplex_text(s) + " not in complex");
    std::size_t offset = 0;
    for (int d = 0; d + 1 < static_cast<int>(s.size()); ++d) offset += x.count(d);
    return static_cast<int>(offset + *idx);
}

namespace {

// Flags sigma_0 < ... < sigma_k = s, one per ordering of the vertices of s.
void append_flags(const SimplicialComplex& x, const Simplex& s, std::vector<Simplex>& out) {
    Simplex order = s;
    do {
        Simplex flag;
        Simplex prefix;
        for (int v : order) {
            prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), v), v);
            flag.push_back(barycenter_id(x, prefix));
        }
        std::sort(flag.begin(), flag.end());
        out.push_back(std::move(flag));
    } while (std::next_permutation(order.begin(), order.end()));
}

}  // namespace

SimplicialComplex barycentric_subdivision(const SimplicialComplex& x) {
    std::vector<Simplex> tops;
    for (const auto& s : x.maximal_simplices()) append_flags(x, s, tops);
    auto out = SimplicialComplex::from_top_simplices(static_cast<int>(x.size()), tops);
    for (const auto& [name, sub] : x.subcomplexes()) {
        std::vector<Simplex> subtops;
        for (const auto& s : maximal_of(sub.simplices)) append_flags(x, s, subtops);
        out.add_subcomplex(name, subtops);
    }
    if (x.boundary_name()) out.set_boundary(*x.boundary_name());
    return out;
}

std::vector<Simplex> product_tops(const std::vector<Simplex>& sa, const std::vector<Simplex>& sb, int nb) {
    std::vector<Simplex> tops;
    for (const auto& s : sa) {
        for (const auto& t : sb) {
            // Monotone lattice paths from (0,0) to (p,q) in the grid s x t.
            const std::size_t p = s.size() - 1;
            const std::size_t q = t.size() - 1;
            std::vector<char> steps(p + q, 0);
            std::fill(steps.begin() + static_cast<long>(p), steps.end(), 1);
            do {
                Simplex simplex;
                std::size_t i = 0;
                std::size_t j = 0;
                simplex.push_back(s[i] * nb + t[j]);
                for (char step : steps) {
                    if (step == 0) ++i;
                    else ++j;
                    simplex.push_back(s[i] * nb + t[j]);
                }
                tops.push_back(std::move(simplex));
            } while (std::next_permutation(steps.begin(), steps.end()));
        }
    }
    return tops;
}

SimplicialComplex product(const SimplicialComplex& a, const SimplicialComplex& b) {
    return SimplicialComplex::from_top_simplices(
        a.vertex_count() * b.vertex_count(),
        product_tops(a.maximal_simplices(), b.maximal_simplices(), b.vertex_count()));
}

SimplicialComplex suspension(const SimplicialComplex& x) {
    const int n = x.vertex_count();
    std::vector<Simplex> tops;
    for (auto s : x.maximal_simplices()) {
        for (int apex : {n, n + 1}) {
            Simplex t = s;
            t.push_back(apex);
            tops.push_back(std::move(t));
        }
    }
    return SimplicialComplex::from_top_simplices(n + 2, tops);
}

SimplicialComplex cone(const SimplicialComplex& x) {
    const int n = x.vertex_count();
    std::vector<Simplex> tops;
    for (auto s : x.maximal_simplices()) {
        s.push_back(n);
        tops.push_back(std::move(s));
    }
    if (tops.empty()) tops.push_back({n});
    return SimplicialComplex::from_top_simplices(n + 1, tops);
}

}  // namespace asymih

#include "asymih/homology.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace asymih {

std::vector<Simplex> ChainVector::support(const SimplicialComplex& x) const {
    std::vector<Simplex> out;
    const auto& all = x.simplices(degree);
    for (const auto& [k, c] : coefficients) out.push_back(all.at(k));
    return out;
}

std::string ChainVector::to_string(const SimplicialComplex& x) const {
    if (coefficients.empty()) return "0";
    std::string out;
    const auto& all = x.simplices(degree);
    bool first = true;
    for (const auto& [k, c] : coefficients) {
        const bool neg = c < 0;
        if (first) out += neg ? "-" : "";
        else out += neg ? " - " : " + ";
        first = false;
        Rational a = abs(c);
        out += a.get_str() + "*[";
        const auto& s = all.at(k);
        for (std::size_t j = 0; j < s.size(); ++j) out += (j ? "," : "") + std::to_string(s[j]);
        out += "]";
    }
    return out;
}

SparseMatrix boundary_matrix(const SimplicialComplex& x, int i) {
    if (i < 1 || i > x.dim()) throw std::out_of_range("boundary degree " + std::to_string(i) + " out of range");
    const auto& cols = x.simplices(i);
    SparseMatrix m(x.count(i - 1), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        auto faces = facets_of(cols[c]);
        SparseVec col;
        for (std::size_t k = 0; k < faces.size(); ++k) {
            col.emplace_back(*x.index_of(faces[k]), Integer(k % 2 == 0 ? 1 : -1));
        }
        std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        m.columns[c] = std::move(col);
    }
    return m;
}

ChainVector boundary(const SimplicialComplex& x, const ChainVector& c) {
    ChainVector out;
    out.degree = c.degree - 1;
    if (c.degree == 0) return out;
    const auto& all = x.simplices(c.degree);
    for (const auto& [k, a] : c.coefficients) {
        auto faces = facets_of(all.at(k));
        for (std::size_t j = 0; j < faces.size(); ++j) {
            Rational& t = out.coefficients[*x.index_of(faces[j])];
            if (j % 2 == 0) t += a;
            else t -= a;
        }
    }
    std::erase_if(out.coefficients, [](const auto& e) { return e.second == 0; });
    return out;
}

std::vector<long> betti(const SimplicialComplex& x) {
    const int d = x.dim();
    if (d < 0) return {};
    std::vector<long> ranks(static_cast<std::size_t>(d) + 2, 0);  // ranks[i] = rank of boundary_i
    for (int i = 1; i <= d; ++i) ranks[static_cast<std::size_t>(i)] = static_cast<long>(rank(boundary_matrix(x, i)));
    std::vector<long> out;
    for (int i = 0; i <= d; ++i) {
        const auto u = static_cast<std::size_t>(i);
        out.push_back(static_cast<long>(x.count(i)) - ranks[u] - ranks[u + 1]);
    }
    return out;
}

std::vector<ChainVector> homology_generators(const SimplicialComplex& x, int i) {
    std::vector<ChainVector> out;
    if (i < 0 || i > x.dim()) return out;
    std::vector<SparseVec> cycles;
    if (i == 0) {
        for (std::size_t k = 0; k < x.count(0); ++k) cycles.push_back({{k, Integer(1)}});
    } else {
        cycles = kernel_basis(boundary_matrix(x, i));
    }
    Reducer image;
    if (i < x.dim()) {
        for (const auto& c : boundary_matrix(x, i + 1).columns) image.add(c);
    }
    for (auto& z : rref_basis(cycles)) {
        if (image.add(clear_denominators(z))) out.push_back({i, std::move(z)});
    }
    return out;
}

bool is_orientable(const SimplicialComplex& x) {
    const int d = x.dim();
    if (d < 0) return true;
    const auto& tops = x.simplices(d);
    for (const auto& s : x.maximal_simplices()) {
        if (static_cast<int>(s.size()) - 1 != d) return false;
    }
    if (d == 0) return true;
    // facet index -> (top index, sign of the facet in its boundary)
    std::vector<std::vector<std::pair<std::size_t, int>>> cof(x.count(d - 1));
    for (std::size_t t = 0; t < tops.size(); ++t) {
        auto faces = facets_of(tops[t]);
        for (std::size_t k = 0; k < faces.size(); ++k) {
            cof[*x.index_of(faces[k])].emplace_back(t, k % 2 == 0 ? 1 : -1);
        }
    }
    std::vector<std::vector<std::pair<std::size_t, int>>> adj(tops.size());  // neighbour, required relative sign
    for (const auto& c : cof) {
        if (c.size() > 2) return false;
        if (c.size() == 2) {
            // Orientations o_a, o_b must satisfy s_a o_a = -s_b o_b.
            const int rel = -c[0].second * c[1].second;
            adj[c[0].first].emplace_back(c[1].first, rel);
            adj[c[1].first].emplace_back(c[0].first, rel);
        }
    }
    std::vector<int> orient(tops.size(), 0);
    for (std::size_t start = 0; start < tops.size(); ++start) {
        if (orient[start] != 0) continue;
        orient[start] = 1;
        std::deque<std::size_t> queue{start};
        while (!queue.empty()) {
            const std::size_t a = queue.front();
            queue.pop_front();
            for (const auto& [b, rel] : adj[a]) {
                const int want = orient[a] * rel;
                if (orient[b] == 0) {
                    orient[b] = want;
                    queue.push_back(b);
                } else if (orient[b] != want) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace asymih

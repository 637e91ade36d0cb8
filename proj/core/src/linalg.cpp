#include "asymih/linalg.hpp"

#include <algorithm>

namespace asymih {
namespace {

// a * x + b * y
SparseVec combine(const Integer& a, const SparseVec& x, const Integer& b, const SparseVec& y) {
    SparseVec out;
    out.reserve(x.size() + y.size());
    auto i = x.begin();
    auto j = y.begin();
    while (i != x.end() || j != y.end()) {
        if (j == y.end() || (i != x.end() && i->first < j->first)) {
            out.emplace_back(i->first, a * i->second);
            ++i;
        } else if (i == x.end() || j->first < i->first) {
            out.emplace_back(j->first, b * j->second);
            ++j;
        } else {
            Integer s = a * i->second + b * j->second;
            if (s != 0) out.emplace_back(i->first, std::move(s));
            ++i;
            ++j;
        }
    }
    return out;
}

Integer content(const SparseVec& v, Integer g = 0) {
    for (const auto& [k, c] : v) {
        g = gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

void divide(SparseVec& v, const Integer& g) {
    for (auto& [k, c] : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

SparseMatrix SparseMatrix::select_columns(const std::vector<std::size_t>& keep) const {
    SparseMatrix out(rows, keep.size());
    for (std::size_t k = 0; k < keep.size(); ++k) out.columns[k] = columns.at(keep[k]);
    return out;
}

SparseMatrix SparseMatrix::select_rows(const std::vector<char>& keep) const {
    std::vector<std::size_t> renumber(rows, 0);
    std::size_t n = 0;
    for (std::size_t r = 0; r < rows; ++r) {
        if (keep.at(r)) renumber[r] = n++;
    }
    SparseMatrix out(n, cols);
    for (std::size_t c = 0; c < cols; ++c) {
        for (const auto& [r, v] : columns[c]) {
            if (keep[r]) out.columns[c].emplace_back(renumber[r], v);
        }
    }
    return out;
}

bool Reducer::add(SparseVec v) {
    SparseVec combo;
    if (track_) combo.emplace_back(added_, Integer(1));
    ++added_;
    while (!v.empty()) {
        const std::size_t low = v.back().first;
        auto it = pivots_.find(low);
        if (it == pivots_.end()) {
            pivots_.emplace(low, Entry{std::move(v), std::move(combo)});
            return true;
        }
        const Entry& p = it->second;
        const Integer a = p.vec.back().second;
        const Integer b = -v.back().second;
        v = combine(a, v, b, p.vec);
        if (track_) combo = combine(a, combo, b, p.combo);
        Integer g = content(v);
        if (track_) g = content(combo, g);
        if (g > 1) {
            divide(v, g);
            if (track_) divide(combo, g);
        }
    }
    if (track_) {
        Integer g = content(combo);
        if (g > 1) divide(combo, g);
        kernel_.push_back(std::move(combo));
    }
    return false;
}

bool Reducer::in_span(SparseVec v) const {
    while (!v.empty()) {
        auto it = pivots_.find(v.back().first);
        if (it == pivots_.end()) return false;
        const SparseVec& p = it->second.vec;
        v = combine(p.back().second, v, -v.back().second, p);
        Integer g = content(v);
        if (g > 1) divide(v, g);
    }
    return true;
}

std::size_t rank(const SparseMatrix& m) {
    Reducer r;
    for (const auto& c : m.columns) r.add(c);
    return r.rank();
}

std::vector<SparseVec> kernel_basis(const SparseMatrix& m) {
    Reducer r(true);
    for (const auto& c : m.columns) r.add(c);
    return r.kernel();
}

std::vector<RatVec> rref_basis(const std::vector<SparseVec>& vectors) {
    std::map<std::size_t, RatVec> rows;  // leading index -> row
    for (const auto& iv : vectors) {
        RatVec v;
        for (const auto& [k, c] : iv) v.emplace(k, Rational(c));
        // Clear every stored pivot column from v.
        for (const auto& [lead, row] : rows) {
            auto it = v.find(lead);
            if (it == v.end()) continue;
            const Rational f = it->second;
            for (const auto& [k, c] : row) {
                Rational& t = v[k];
                t -= f * c;
                if (t == 0) v.erase(k);
            }
        }
        if (v.empty()) continue;
        const std::size_t lead = v.begin()->first;
        const Rational inv = 1 / v.begin()->second;
        for (auto& [k, c] : v) c *= inv;
        for (auto& [l, row] : rows) {
            auto it = row.find(lead);
            if (it == row.end()) continue;
            const Rational f = it->second;
            for (const auto& [k, c] : v) {
                Rational& t = row[k];
                t -= f * c;
                if (t == 0) row.erase(k);
            }
        }
        rows.emplace(lead, std::move(v));
    }
    std::vector<RatVec> out;
    out.reserve(rows.size());
    for (auto& [lead, row] : rows) out.push_back(std::move(row));
    return out;
}

SparseVec multiply(const SparseMatrix& m, const SparseVec& v) {
    std::map<std::size_t, Integer> acc;
    for (const auto& [c, x] : v) {
        for (const auto& [r, a] : m.columns.at(c)) acc[r] += a * x;
    }
    SparseVec out;
    for (auto& [r, x] : acc) {
        if (x != 0) out.emplace_back(r, std::move(x));
    }
    return out;
}

SparseVec clear_denominators(const RatVec& v) {
    Integer l = 1;
    for (const auto& [k, c] : v) l = lcm(l, Integer(c.get_den()));
    SparseVec out;
    for (const auto& [k, c] : v) {
        Rational s = c * l;
        out.emplace_back(k, s.get_num());
    }
    return out;
}

}  // namespace asymih

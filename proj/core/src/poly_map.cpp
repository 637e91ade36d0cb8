#include "asymih/poly_map.hpp"

#include "asymih/algebra.hpp"
#include "asymih/parse.hpp"

#include <cctype>
#include <stdexcept>

namespace asymih {

PolyMap::PolyMap(std::vector<Poly> components) : components_(std::move(components)) {
    if (components_.empty()) throw std::invalid_argument("polynomial map needs at least one component");
    for (const auto& c : components_) {
        if (c.vars() != components_.front().vars()) {
            throw std::invalid_argument("map components must share one variable list");
        }
    }
}

std::string PolyMap::to_string() const {
    std::string out = "(";
    for (std::size_t k = 0; k < components_.size(); ++k) {
        if (k != 0) out += ", ";
        out += components_[k].to_string();
    }
    return out + ")";
}

PolyMap parse_map(std::string_view text, const std::vector<std::string>& vars) {
    std::size_t start = 0;
    while (start < text.size() && std::isspace(static_cast<unsigned char>(text[start]))) ++start;
    std::size_t offset = start;
    std::string_view body = text.substr(start);
    // Optional "NAME =" prefix.
    if (auto eq = body.find('='); eq != std::string_view::npos) {
        offset += eq + 1;
        body = body.substr(eq + 1);
    }
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front()))) {
        body.remove_prefix(1);
        ++offset;
    }
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.remove_suffix(1);

    // Strip one pair of enclosing parentheses if they wrap the whole literal.
    if (body.size() >= 2 && body.front() == '(' && body.back() == ')') {
        int depth = 0;
        bool wraps = true;
        for (std::size_t k = 0; k < body.size(); ++k) {
            if (body[k] == '(') ++depth;
            if (body[k] == ')') --depth;
            if (depth == 0 && k + 1 < body.size()) {
                wraps = false;
                break;
            }
        }
        if (wraps) {
            body = body.substr(1, body.size() - 2);
            ++offset;
        }
    }

    std::vector<Poly> comps;
    int depth = 0;
    std::size_t piece = 0;
    for (std::size_t k = 0; k <= body.size(); ++k) {
        if (k < body.size()) {
            char c = body[k];
            if (c == '(') ++depth;
            if (c == ')') --depth;
            if (depth < 0) throw ParseError("unbalanced ')'", offset + k);
            if (!(depth == 0 && (c == ',' || c == ';'))) continue;
        }
        try {
            comps.push_back(parse_poly(body.substr(piece, k - piece), vars));
        } catch (const ParseError& e) {
            throw ParseError(std::string("map component ") + std::to_string(comps.size() + 1) + ": " + e.message(),
                             offset + piece + e.position());
        }
        piece = k + 1;
    }
    if (depth != 0) throw ParseError("unbalanced '('", offset + body.size());
    return PolyMap(std::move(comps));
}

std::vector<std::vector<Poly>> jacobian_matrix(const PolyMap& f) {
    std::vector<std::vector<Poly>> m;
    for (const auto& c : f.components()) {
        std::vector<Poly> row;
        for (std::size_t j = 0; j < c.nvars(); ++j) row.push_back(c.derivative(j));
        m.push_back(std::move(row));
    }
    return m;
}

Poly jacobian_det(const PolyMap& f) {
    if (f.size() != f.source_vars().size()) {
        throw std::invalid_argument("jacobian determinant needs as many components as variables");
    }
    return determinant(jacobian_matrix(f));
}

PolyMap compose(const PolyMap& outer, const PolyMap& inner) {
    if (outer.source_vars().size() != inner.size()) {
        throw std::invalid_argument("compose: outer map needs one variable per inner component");
    }
    const auto& vars = inner.source_vars();
    std::vector<Poly> out;
    for (const Poly& f : outer.components()) {
        Poly acc(vars);
        for (const auto& [e, c] : f.terms()) {
            Poly term = Poly::constant(vars, c);
            for (std::size_t k = 0; k < e.size(); ++k) {
                if (e[k] > 0) term *= inner[k].pow(static_cast<unsigned>(e[k]));
            }
            acc += term;
        }
        out.push_back(std::move(acc));
    }
    return PolyMap(std::move(out));
}

std::vector<std::string> target_vars(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t k = 1; k <= n; ++k) out.push_back("y" + std::to_string(k));
    return out;
}

}  // namespace asymih

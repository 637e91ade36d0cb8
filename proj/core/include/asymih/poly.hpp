// Sparse multivariate polynomials over the Gaussian rationals.
//
// Terms are stored in a map keyed by exponent vectors and sorted in
// descending graded-lexicographic order, so iteration and printing are
// canonical. Zero coefficients are never stored.
#pragma once

#include "asymih/gauss_rational.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace asymih {

using Exponent = std::vector<int>;

/// Degree of a polynomial; std::nullopt is the degree of the zero polynomial (-infinity).
using Degree = std::optional<int>;

int total_degree(const Exponent& e);

/// Strict weak order placing graded-lex larger exponents first.
struct GrlexDescending {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

class Poly {
public:
    using TermMap = std::map<Exponent, GaussRat, GrlexDescending>;

    Poly() = default;
    explicit Poly(std::vector<std::string> vars);

    static Poly constant(std::vector<std::string> vars, const GaussRat& c);
    static Poly variable(std::vector<std::string> vars, const std::string& name);
    static Poly monomial(std::vector<std::string> vars, Exponent exp, const GaussRat& c);

    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    std::optional<std::size_t> var_index(const std::string& name) const;
    /// Like var_index but throws std::invalid_argument for unknown names.
    std::size_t require_var(const std::string& name) const;

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    GaussRat constant_term() const;
    GaussRat coefficient(const Exponent& e) const;

    Degree degree() const;
    Degree degree_in(std::size_t var) const;
    bool uses_var(std::size_t var) const;

    /// Largest term in graded-lex order. Precondition: nonzero.
    const std::pair<const Exponent, GaussRat>& leading_term() const;

    /// Adds c * x^e, dropping the term if the sum cancels.
    void add_term(const Exponent& e, const GaussRat& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const GaussRat& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const GaussRat& c) { return a *= c; }
    friend Poly operator*(const GaussRat& c, Poly a) { return a *= c; }
    friend bool operator==(const Poly& a, const Poly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    Poly pow(unsigned e) const;
    Poly derivative(std::size_t var) const;

    GaussRat evaluate(const std::vector<GaussRat>& point) const;
    /// Replaces variable `var` by the constant `value`; the variable list is kept.
    Poly specialize(std::size_t var, const GaussRat& value) const;
    /// Replaces variable `var` by `value` (same variable list).
    Poly substitute(std::size_t var, const Poly& value) const;

    /// Coefficients c_k with this = sum_k c_k * var^k; c_k do not involve var.
    std::vector<Poly> coefficients_in(std::size_t var) const;
    /// Leading coefficient with respect to `var`. Precondition: nonzero.
    Poly leading_coefficient_in(std::size_t var) const;

    /// Re-expresses the polynomial over another variable list, matching by name.
    /// Throws std::invalid_argument if a used variable is missing from `vars`.
    Poly embed(const std::vector<std::string>& vars) const;

    /// Top-degree homogeneous component. Throws std::invalid_argument on zero.
    Poly initial_form() const;
    bool is_homogeneous() const;

    /// Canonical text in descending graded-lex order, e.g. "x^2 + 2*i*x*y - y^2".
    std::string to_string() const;

private:
    void check_compatible(const Poly& o) const;
    std::vector<std::string> vars_;
    TermMap terms_;
};

/// Throws std::invalid_argument when two polynomials live over different variable lists.
struct VariableMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace asymih

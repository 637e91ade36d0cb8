// Plane algebraic sets given by certified / candidate / refuted curve components.
#pragma once

#include "asymih/arcs.hpp"
#include "asymih/random.hpp"
#include "asymih/solve.hpp"

#include <optional>
#include <string>
#include <vector>

namespace asymih {

enum class ComponentStatus { certified, candidate, refuted };

std::string to_string(ComponentStatus s);

/// A monomial arc whose image under F converges to `target`.
struct Witness {
    MonomialArc arc;
    Point target;
};

struct SampleRecord {
    Point target;
    /// e.g. "witness", "refusal:fiber-escape", "refusal:no-escape", "sing-preimage", "no-sing-preimage".
    std::string outcome;
};

struct Component {
    Poly equation;  // squarefree, monic, in the ambient (target) variables
    ComponentStatus status = ComponentStatus::candidate;
    std::vector<Witness> witnesses;
    std::vector<SampleRecord> samples;
};

struct AlgebraicSet {
    std::vector<std::string> ambient_vars;
    std::vector<Component> components;
    /// Extra equations produced by elimination: the set described also lies
    /// in their common zero locus (may be empty).
    std::vector<Poly> auxiliary;

    bool empty() const { return components.empty(); }
    std::size_t count(ComponentStatus s) const;
};

/// Up to `count` distinct Q(i)-points on the plane curve h = 0 (h uses
/// variables 0 and 1 only). Lines tried: the two coordinate axes first, then
/// seeded random axis-parallel and general rational lines; irrational
/// intersections are skipped.
std::vector<Point> sample_curve_points(const Poly& h, int count, Rng& rng);

}  // namespace asymih

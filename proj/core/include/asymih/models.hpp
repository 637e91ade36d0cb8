// Curated catalog pairing polynomial maps with simplicial models of the
// associated pseudomanifold, and the checks run on each pairing.
#pragma once

#include "asymih/asymptotic.hpp"
#include "asymih/homology.hpp"
#include "asymih/ih.hpp"
#include "asymih/pseudomanifold.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace asymih {

/// Data directory: $ASYMIH_DATA_DIR if set, else the directory compiled in.
std::filesystem::path data_dir();

/// Resolves a complex argument: an existing file path, or a name under
/// <data_dir>/complexes (with or without ".json").
std::filesystem::path resolve_complex(const std::string& name_or_path);

/// Loads a complex document and its filtration (trivial when none is declared).
Filtration load_filtration(const std::filesystem::path& path);

struct CatalogEntry {
    std::string id;
    /// "map" (map paired with a model) or "topology" (model only).
    std::string kind;
    std::optional<PolyMap> map;
    std::string model_name;
    Filtration model;
    /// Subcomplex carrying the J_F u K_0(F) label; empty when nothing is labeled.
    std::string label;
    std::optional<bool> expected_proper;
    /// Negative controls are expected to come out inconsistent.
    bool control = false;
    std::string notes;
};

struct CatalogError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Reads <dir>/catalog.json. Throws CatalogError on malformed entries.
std::vector<CatalogEntry> catalog(const std::filesystem::path& dir = data_dir());

const CatalogEntry& find_entry(const std::vector<CatalogEntry>& entries, const std::string& id);

/// Every nonempty stratum X_i \ X_{i-1} has even i.
bool even_strata_check(const Filtration& f);

/// Singular simplices of the model (as detected by validate_pseudomanifold)
/// and the strata X_{m-2} all lie in the labeled subcomplex.
bool singular_locus_contained(const CatalogEntry& entry, const PMReport& report);

struct RankByPerversity {
    std::string name;  // "0", "m", "n", "t"
    std::string values;
    long rank = 0;
};

struct EquivalenceReport {
    std::string id;
    std::string kind;
    std::optional<Properness> verdict;
    std::vector<long> betti;
    long b2 = 0;
    std::vector<RankByPerversity> ih2;
    bool pseudomanifold = false;
    bool even_strata = false;
    bool locus_contained = false;
    /// The equivalence holds on this entry (map-paired: all three
    /// conditions; topology: homology against every perversity).
    bool consistent = false;
    /// An `unknown` verdict: only the topological face is judged.
    bool excluded = false;
    bool control = false;
    /// consistent == !control.
    bool as_expected = false;
    std::vector<std::string> diagnostics;
};

struct ModelRejected : std::runtime_error {
    ModelRejected(const std::string& what, PMReport report) : std::runtime_error(what), report_(std::move(report)) {}
    const PMReport& report() const { return report_; }

private:
    PMReport report_;
};

/// Runs is_proper on the map (if any), betti and ih_betti for the four
/// standard perversities on the model. Throws ModelRejected when the model is
/// not a pseudomanifold.
EquivalenceReport verify_equivalence(const CatalogEntry& entry, const JelonekOptions& opts = {});

struct ArcCycle {
    std::optional<ChainVector> cycle;
    std::string diagnostic;
};

/// A 2-cycle meeting `singular` (a vertex set) in at most one vertex per
/// simplex, nonzero in H_2; searched in the kernel of the boundary on such
/// triangles, in echelon order, modulo the image of the 3-simplices.
ArcCycle allowable_arc_cycle(const SimplicialComplex& x, const std::vector<int>& singular);

/// Same for a catalog entry, with the singular set X_{m-2}. Proper entries
/// (by expectation) give no cycle.
ArcCycle allowable_arc_cycle(const CatalogEntry& entry);

}  // namespace asymih

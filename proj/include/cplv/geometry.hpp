#pragma once
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cplv/catalog.hpp"

namespace cplv {

struct WitnessCorrection {
    RatSubst param_subst;
    BasisChange basis;
    std::string note;
};

struct DegenerationWitness {
    std::string name;
    Variety variety = Variety::CompatiblePreLie;  // where the arrow is stated
    std::string provenance;                       // "listed" or "derived"
    std::string printed;
    std::string source;
    RatSubst param_subst;
    BasisChange basis;
    std::string target;
    RatSubst target_params;
    std::vector<Constraint> target_constraints;
    std::optional<WitnessCorrection> corrected;
};

// c(i,j,k) or c'(i,j,k), 1-based as written; indices may be out of range
struct RelSymbol {
    bool prime = false;
    int i = 0, j = 0, k = 0;
    std::string str() const;
    friend bool operator==(const RelSymbol&, const RelSymbol&) = default;
};
struct RelTerm {
    Scalar coef;
    std::vector<RelSymbol> syms;
};
using RelPoly = std::vector<RelTerm>;

std::string rel_poly_str(const RelPoly& p);

struct RelationSet {
    std::string name;
    Variety variety = Variety::CompatiblePreLie;
    std::string source;
    std::vector<std::string> targets;
    std::string printed;
    std::vector<RelPoly> equalities;
    std::optional<std::vector<RelPoly>> corrected;
    std::string correction_note;
    std::string stability;  // "upper"
};

// v and every larger variety; an arrow inside v is an arrow in each of them
std::vector<Variety> containing_varieties(Variety v);

struct DegenerationOutcome {
    bool pass = false;
    std::string failure;  // NoFiniteLimit, MismatchedConstant, SingularMatrix, MalformedSubstitution, ...
    std::string detail;
};

TwoProductAlgebra apply_witness(const Catalog& cat, const DegenerationWitness& w, bool use_correction = false);
DegenerationOutcome verify_degeneration(const Catalog& cat, const DegenerationWitness& w, bool use_correction = false);
TwoProductAlgebra target_algebra(const Catalog& cat, const DegenerationWitness& w);

Vec relation_residuals(const std::vector<RelPoly>& eqs, const TwoProductAlgebra& a);
bool check_relation(const std::vector<RelPoly>& eqs, const TwoProductAlgebra& a);
bool check_relation(const RelationSet& r, const TwoProductAlgebra& a);

// Equalities actually used for a relation set: out-of-range indices are
// repaired when exactly one repair vanishes on the source, and a stored
// correction is used when the printed form fails on the source.
struct ResolvedRelation {
    std::vector<RelPoly> equalities;
    std::vector<std::string> notes;
    bool altered = false;
};
ResolvedRelation resolve_relation(const RelationSet& r, const TwoProductAlgebra& source);

struct NonDegenerationOutcome {
    bool pass = false;
    bool altered = false;
    bool source_holds = false;
    bool target_excluded = false;
    int stability_samples = 0;
    int stability_failures = 0;
    std::vector<std::string> residuals;
    std::vector<std::string> notes;
};

// residual nonvanishing wherever the constraints hold
bool nonvanishing_on(const RatFunc& r, const std::vector<Constraint>& constraints);

NonDegenerationOutcome verify_non_degeneration(const Catalog& cat, const std::string& source, const std::string& target,
                                               const RelationSet& r, std::uint64_t seed, int samples = 50);

struct GenericDimension {
    int params = 0;
    int der = 0;  // minimum over the samples
    int family_dimension = 0;
    std::vector<std::pair<Assignment, int>> samples;
};
GenericDimension generic_dimension(const FamilySpec& f, std::uint64_t seed, int samples = 5);

struct ComponentEntry {
    std::string family;
    int params = 0;
    int generic_der = 0;
    int family_dimension = 0;
    bool rigid = false;
};
struct ClaimCheck {
    DimensionClaim claim;
    int computed = 0;
    bool matches = false;
};
struct ComponentReport {
    Variety variety;
    std::vector<ComponentEntry> components;
    std::vector<std::string> rigid;
    std::vector<ClaimCheck> claims;
    int max_family_dimension = 0;
};
ComponentReport component_report(const Catalog& cat, Variety v, std::uint64_t seed, int samples = 5);

struct DegenerationGraph {
    std::vector<std::string> nodes;
    std::vector<std::pair<std::string, std::string>> edges;  // (source, target), sorted, unique
    std::vector<std::string> unreached;                      // non-components with no path from a component
    bool has_self_loop = false;
};
// witnesses: the ones that verified (printed or corrected form)
DegenerationGraph degeneration_graph(const Catalog& cat, Variety v, const std::vector<const DegenerationWitness*>& witnesses);

}  // namespace cplv

namespace cplv {

// dimDer must strictly grow along a proper degeneration. Witnesses whose
// parameter substitution is free of t are compared point by point; the others
// compare the target orbit with the closure of the source family.
struct MonotonicityOutcome {
    bool pass = false;
    std::string mode;  // "pointwise" or "family"
    int samples = 0;
    std::string detail;
};
MonotonicityOutcome check_monotonicity(const Catalog& cat, const DegenerationWitness& w, bool use_correction,
                                       std::uint64_t seed, int samples = 5);

}  // namespace cplv

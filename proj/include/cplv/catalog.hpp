#pragma once
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cplv/algebra.hpp"

namespace cplv {

struct Constraint {
    enum class Kind { NonZero, NotEqual, NotAllZero };
    Kind kind = Kind::NonZero;
    std::vector<RatFunc> polys;

    bool satisfied(const Assignment& a) const;
    Constraint subst(const RatSubst& s) const;
    // polynomial whose nonvanishing this constraint asserts; none for NotAllZero
    std::optional<Poly> excluded_locus() const;
    std::string str() const;
};

bool all_satisfied(const std::vector<Constraint>& cs, const Assignment& a);

struct FamilySpec {
    std::string name;
    std::string base;          // as written, e.g. "C05^{1/2}"
    std::string base_name;     // "C05"
    Assignment base_params;    // {alpha: 1/2}
    std::vector<Var> params;
    std::vector<Constraint> constraints;
    std::string display;
    TwoProductAlgebra algebra;
    std::set<Variety> varieties;

    bool admissible(const Assignment& a) const { return all_satisfied(constraints, a); }
};

struct VarietyEntry {
    std::string label;
    std::string family;
    RatSubst subst;
    std::vector<Constraint> constraints;
};

struct AutBranch {
    Var param;
    bool equal;  // branch applies when param == value (else when !=)
    Scalar value;
};

struct AutFamily {
    std::string base;
    int item = 0;
    std::optional<AutBranch> branch;
    std::vector<BasisChange> templates;  // entries in xi, nu
    std::vector<Constraint> side;

    bool applies(const Assignment& base_params) const;
};

struct DimensionClaim {
    std::string family;
    int dimension = 0;
    bool suspect = false;
    std::string note;
};

struct GeometryClaims {
    int variety_dimension = 0;
    std::vector<std::string> components;
    std::vector<std::string> rigid;
    std::vector<DimensionClaim> dimension_claims;
    std::vector<std::string> zero_line_with, zero_line_without;
};

struct IsoSide {
    std::string family;
    RatSubst params;
};

struct IsoException {
    std::string name;
    std::vector<Variety> varieties;
    std::string base;
    Assignment base_params;
    IsoSide left, right;
    BasisChange witness;
    std::vector<Constraint> constraints;
    std::string provenance;
};

class Catalog {
public:
    int dimension = 2;
    std::vector<FamilySpec> families;
    std::map<Variety, std::vector<VarietyEntry>> entries;
    std::vector<AutFamily> automorphisms;
    std::map<Variety, GeometryClaims> geometry;
    std::vector<IsoException> iso_exceptions;

    bool has(const std::string& name) const;
    const FamilySpec& family(const std::string& name) const;  // UnknownName

    // constants at the given parameter values
    TwoProductAlgebra instantiate(const std::string& name, const Assignment& values) const;
    // specialised families admitted by the variety's classification list
    std::vector<FamilySpec> list_catalog(Variety v) const;
    FamilySpec specialise(const VarietyEntry& e, Variety v) const;
    AutFamily automorphism_family(const std::string& base, const Assignment& base_params = {}) const;
    // the pre-Lie product a family is built over
    Product base_product(const FamilySpec& f) const;
};

}  // namespace cplv

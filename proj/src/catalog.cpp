#include "cplv/catalog.hpp"

#include "cplv/error.hpp"

namespace cplv {

bool Constraint::satisfied(const Assignment& a) const {
    switch (kind) {
        case Kind::NonZero: return !polys.at(0).eval(a).is_zero();
        case Kind::NotEqual: return !(polys.at(0).eval(a) == polys.at(1).eval(a));
        case Kind::NotAllZero:
            for (auto& p : polys)
                if (!p.eval(a).is_zero()) return true;
            return false;
    }
    return false;
}

Constraint Constraint::subst(const RatSubst& s) const {
    Constraint c{kind, {}};
    for (auto& p : polys) c.polys.push_back(p.subst(s));
    return c;
}

std::optional<Poly> Constraint::excluded_locus() const {
    switch (kind) {
        case Kind::NonZero: return polys.at(0).num();
        case Kind::NotEqual: return (polys.at(0) - polys.at(1)).num();
        case Kind::NotAllZero: return std::nullopt;
    }
    return std::nullopt;
}

std::string Constraint::str() const {
    switch (kind) {
        case Kind::NonZero: return polys.at(0).str() + " != 0";
        case Kind::NotEqual: return polys.at(0).str() + " != " + polys.at(1).str();
        case Kind::NotAllZero: {
            std::string s = "(";
            for (size_t k = 0; k < polys.size(); ++k) s += (k ? ", " : "") + polys[k].str();
            return s + ") != 0";
        }
    }
    return "";
}

bool all_satisfied(const std::vector<Constraint>& cs, const Assignment& a) {
    for (auto& c : cs)
        if (!c.satisfied(a)) return false;
    return true;
}

bool AutFamily::applies(const Assignment& base_params) const {
    if (!branch) return true;
    auto it = base_params.find(branch->param);
    if (it == base_params.end()) return !branch->equal;
    return (it->second == branch->value) == branch->equal;
}

bool Catalog::has(const std::string& name) const {
    for (auto& f : families)
        if (f.name == name) return true;
    return false;
}

const FamilySpec& Catalog::family(const std::string& name) const {
    for (auto& f : families)
        if (f.name == name) return f;
    throw Error(Errc::UnknownName, "no family named '" + name + "'");
}

TwoProductAlgebra Catalog::instantiate(const std::string& name, const Assignment& values) const {
    const FamilySpec& f = family(name);
    Assignment own;
    for (Var v : f.params) {
        auto it = values.find(v);
        if (it == values.end()) throw Error(Errc::MissingParameter, name + " needs a value for " + var_name(v));
        own[v] = it->second;
    }
    if (!f.admissible(own)) {
        for (auto& c : f.constraints)
            if (!c.satisfied(own)) throw Error(Errc::ConstraintViolated, name + " requires " + c.str());
    }
    return f.algebra.subst(own);
}

FamilySpec Catalog::specialise(const VarietyEntry& e, Variety v) const {
    const FamilySpec& f = family(e.family);
    FamilySpec s;
    s.name = e.label;
    s.base = f.base;
    s.base_name = f.base_name;
    s.base_params = f.base_params;
    s.display = f.display;
    s.algebra = f.algebra.subst(e.subst);
    std::set<Var> ps;
    for (Var p : f.params)
        if (!e.subst.count(p)) ps.insert(p);
    for (auto& [k, val] : e.subst)
        for (Var w : {Var::alpha, Var::beta, Var::gamma})
            if (val.contains(w)) ps.insert(w);
    s.params.assign(ps.begin(), ps.end());
    for (auto& c : f.constraints) s.constraints.push_back(c.subst(e.subst));
    for (auto& c : e.constraints) s.constraints.push_back(c);
    s.varieties = {v};
    return s;
}

std::vector<FamilySpec> Catalog::list_catalog(Variety v) const {
    auto it = entries.find(v);
    if (it == entries.end()) throw Error(Errc::UnknownVariety, variety_name(v));
    std::vector<FamilySpec> out;
    for (auto& e : it->second) out.push_back(specialise(e, v));
    return out;
}

AutFamily Catalog::automorphism_family(const std::string& base, const Assignment& base_params) const {
    bool known = false;
    for (auto& a : automorphisms) {
        if (a.base != base) continue;
        known = true;
        if (a.applies(base_params)) return a;
    }
    throw Error(Errc::UnknownName, known ? "no automorphism branch of " + base + " matches" : "no base algebra '" + base + "'");
}

Product Catalog::base_product(const FamilySpec& f) const {
    const FamilySpec& b = family(f.base_name);
    return b.algebra.second.subst(f.base_params);
}

}  // namespace cplv

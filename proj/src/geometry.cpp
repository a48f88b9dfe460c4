#include "cplv/geometry.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "cplv/error.hpp"
#include "cplv/sampling.hpp"

namespace cplv {

std::string RelSymbol::str() const {
    return std::string(prime ? "c'" : "c") + std::to_string(i) + std::to_string(j) + "^" + std::to_string(k);
}

std::string rel_poly_str(const RelPoly& p) {
    std::string s;
    for (auto& t : p) {
        std::string c = t.coef.str();
        bool neg = !c.empty() && c[0] == '-';
        if (neg) c.erase(0, 1);
        std::string body = c == "1" ? "" : c + "*";
        for (size_t k = 0; k < t.syms.size(); ++k) body += (k ? "*" : "") + t.syms[k].str();
        if (s.empty())
            s = (neg ? "-" : "") + body;
        else
            s += (neg ? " - " : " + ") + body;
    }
    return s.empty() ? "0" : s;
}

std::vector<Variety> containing_varieties(Variety v) {
    switch (v) {
        case Variety::CompatibleCommAssoc:
            return {v, Variety::CompatibleAssoc, Variety::CompatibleNovikov, Variety::CompatiblePreLie};
        case Variety::CompatibleAssoc:
        case Variety::CompatibleNovikov:
            return {v, Variety::CompatiblePreLie};
        case Variety::CompatiblePreLie:
            break;
    }
    return {Variety::CompatiblePreLie};
}

namespace {

std::string index_str(bool prime, int i, int j, int k) {
    return RelSymbol{prime, i + 1, j + 1, k + 1}.str();
}

void check_vars(const RatFunc& f, const std::set<Var>& allowed, const std::string& where) {
    for (Var v : kAllVars)
        if (f.contains(v) && !allowed.count(v))
            throw Error(Errc::MalformedSubstitution, where + " uses " + var_name(v) + " which is neither t nor a target parameter");
}

}  // namespace

TwoProductAlgebra target_algebra(const Catalog& cat, const DegenerationWitness& w) {
    return cat.family(w.target).algebra.subst(w.target_params);
}

TwoProductAlgebra apply_witness(const Catalog& cat, const DegenerationWitness& w, bool use_correction) {
    const FamilySpec& src = cat.family(w.source);
    const FamilySpec& tgt = cat.family(w.target);
    if (use_correction && !w.corrected) throw Error(Errc::MalformedSubstitution, w.name + " has no correction");
    const RatSubst& subst = use_correction ? w.corrected->param_subst : w.param_subst;
    const BasisChange& basis = use_correction ? w.corrected->basis : w.basis;
    std::set<Var> allowed(tgt.params.begin(), tgt.params.end());
    allowed.insert(Var::t);
    for (auto& [v, f] : subst) {
        if (std::find(src.params.begin(), src.params.end(), v) == src.params.end())
            throw Error(Errc::MalformedSubstitution, std::string(var_name(v)) + " is not a parameter of " + src.name);
        check_vars(f, allowed, "substitution");
    }
    for (Var v : src.params)
        if (!subst.count(v) && !allowed.count(v))
            throw Error(Errc::MalformedSubstitution, std::string(var_name(v)) + " of " + src.name + " is left free");
    if (basis.rows() != src.algebra.dim() || basis.cols() != src.algebra.dim())
        throw Error(Errc::MalformedSubstitution, "basis has wrong shape");
    for (int i = 0; i < basis.rows(); ++i)
        for (int j = 0; j < basis.cols(); ++j) check_vars(basis(i, j), allowed, "basis");
    TwoProductAlgebra a = subst.empty() ? src.algebra : src.algebra.subst(subst);
    return transport(a, basis);
}

DegenerationOutcome verify_degeneration(const Catalog& cat, const DegenerationWitness& w, bool use_correction) {
    DegenerationOutcome out;
    TwoProductAlgebra moved;
    try {
        moved = apply_witness(cat, w, use_correction);
    } catch (const Error& e) {
        out.failure = errc_name(e.code());
        out.detail = e.what();
        return out;
    }
    TwoProductAlgebra want = target_algebra(cat, w);
    int n = moved.dim();
    // each product on its own; the pair limit is the pair of these
    for (int which = 0; which < 2; ++which) {
        const Product& p = which ? moved.second : moved.first;
        const Product& q = which ? want.second : want.first;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    RatFunc lim;
                    try {
                        lim = limit_at_zero(p.at(i, j, k), Var::t);
                    } catch (const Error& e) {
                        out.failure = "NoFiniteLimit";
                        out.detail = index_str(which, i, j, k) + " = " + p.at(i, j, k).str() + " has no limit at t=0";
                        return out;
                    }
                    if (!(lim - q.at(i, j, k)).is_zero()) {
                        out.failure = "MismatchedConstant";
                        out.detail = index_str(which, i, j, k) + " tends to " + lim.str() + ", target has " + q.at(i, j, k).str();
                        return out;
                    }
                }
    }
    out.pass = true;
    return out;
}

namespace {

bool in_range(const RelSymbol& s, int n) {
    return s.i >= 1 && s.i <= n && s.j >= 1 && s.j <= n && s.k >= 1 && s.k <= n;
}

bool eq_in_range(const RelPoly& p, int n) {
    for (auto& t : p)
        for (auto& s : t.syms)
            if (!in_range(s, n)) return false;
    return true;
}

RatFunc residual(const RelPoly& p, const TwoProductAlgebra& a) {
    int n = a.dim();
    RatFunc r;
    for (auto& t : p) {
        RatFunc term(t.coef);
        for (auto& s : t.syms) {
            if (!in_range(s, n)) throw Error(Errc::UnsupportedDimension, "symbol " + s.str() + " is out of range");
            const Product& pr = s.prime ? a.second : a.first;
            term *= pr.at(s.i - 1, s.j - 1, s.k - 1);
        }
        r += term;
    }
    return r;
}

}  // namespace

Vec relation_residuals(const std::vector<RelPoly>& eqs, const TwoProductAlgebra& a) {
    Vec out;
    for (auto& e : eqs) out.push_back(residual(e, a));
    return out;
}

bool check_relation(const std::vector<RelPoly>& eqs, const TwoProductAlgebra& a) {
    for (auto& e : eqs)
        if (!eq_in_range(e, a.dim()) || !residual(e, a).is_zero()) return false;
    return true;
}

bool check_relation(const RelationSet& r, const TwoProductAlgebra& a) { return check_relation(r.equalities, a); }

ResolvedRelation resolve_relation(const RelationSet& r, const TwoProductAlgebra& source) {
    ResolvedRelation out;
    int n = source.dim();
    out.equalities = r.equalities;
    for (auto& eq : out.equalities) {
        if (eq_in_range(eq, n)) continue;
        // every out-of-range index is a slot to re-fill with 1..n
        std::vector<int*> slots;
        RelPoly trial = eq;
        for (auto& t : trial)
            for (auto& s : t.syms)
                for (int* x : {&s.i, &s.j, &s.k})
                    if (*x < 1 || *x > n) slots.push_back(x);
        std::vector<RelPoly> fits;
        std::function<void(size_t)> go = [&](size_t d) {
            if (d == slots.size()) {
                if (residual(trial, source).is_zero()) fits.push_back(trial);
                return;
            }
            for (int v = 1; v <= n; ++v) {
                *slots[d] = v;
                go(d + 1);
            }
        };
        go(0);
        if (fits.size() == 1) {
            out.notes.push_back("index repair: " + rel_poly_str(eq) + " read as " + rel_poly_str(fits[0]));
            eq = fits[0];
            out.altered = true;
        } else {
            out.notes.push_back("no unique index repair for " + rel_poly_str(eq) + " (" + std::to_string(fits.size()) +
                                " candidates vanish on the source)");
        }
    }
    if (!check_relation(out.equalities, source) && r.corrected) {
        out.equalities = *r.corrected;
        out.notes.push_back("printed form fails on " + r.source + "; stored correction used: " + r.correction_note);
        out.altered = true;
    }
    return out;
}

bool nonvanishing_on(const RatFunc& r, const std::vector<Constraint>& constraints) {
    if (r.is_zero()) return false;
    Poly rem = r.num();
    if (rem.is_constant()) return true;
    Poly locus(1);
    for (auto& c : constraints)
        if (auto p = c.excluded_locus()) locus *= *p;
    // every irreducible factor of the numerator must divide the excluded locus
    for (;;) {
        Poly g = gcd(rem, locus);
        if (g.is_constant()) break;
        rem = *exact_div(rem, g);
    }
    return rem.is_constant();
}

NonDegenerationOutcome verify_non_degeneration(const Catalog& cat, const std::string& source, const std::string& target,
                                               const RelationSet& r, std::uint64_t seed, int samples) {
    NonDegenerationOutcome out;
    const FamilySpec& sf = cat.family(source);
    const FamilySpec& tf = cat.family(target);
    ResolvedRelation rr = resolve_relation(r, sf.algebra);
    out.altered = rr.altered;
    out.notes = rr.notes;
    out.source_holds = check_relation(rr.equalities, sf.algebra);
    bool in_range_all = true;
    for (auto& e : rr.equalities) in_range_all = in_range_all && eq_in_range(e, tf.algebra.dim());
    if (in_range_all) {
        for (auto& res : relation_residuals(rr.equalities, tf.algebra)) {
            out.residuals.push_back(res.str());
            if (nonvanishing_on(res, tf.constraints)) out.target_excluded = true;
        }
    }
    Rng rng(derive_seed(seed, r.name + ":" + source + "->" + target));
    bool upper = r.stability != "lower";
    for (int s = 0; s < samples && in_range_all; ++s) {
        Assignment pt = random_point(sf, rng);
        TwoProductAlgebra a = sf.algebra.subst(pt);
        BasisChange g = random_invertible(a.dim(), rng, upper);
        ++out.stability_samples;
        if (!check_relation(rr.equalities, transport(a, g))) ++out.stability_failures;
    }
    out.pass = out.source_holds && out.target_excluded && in_range_all && out.stability_failures == 0;
    return out;
}

GenericDimension generic_dimension(const FamilySpec& f, std::uint64_t seed, int samples) {
    GenericDimension g;
    Rng rng(derive_seed(seed, "dim:" + f.name));
    int n = f.algebra.dim();
    g.params = static_cast<int>(f.params.size());
    g.der = n * n;
    for (int s = 0; s < samples; ++s) {
        Assignment pt = random_point(f, rng);
        int d = derivation_dimension(f.algebra, pt);
        g.samples.emplace_back(pt, d);
        g.der = std::min(g.der, d);
    }
    g.family_dimension = g.params + n * n - g.der;
    return g;
}

ComponentReport component_report(const Catalog& cat, Variety v, std::uint64_t seed, int samples) {
    ComponentReport rep;
    rep.variety = v;
    const GeometryClaims& gc = cat.geometry.at(v);
    std::map<std::string, GenericDimension> cache;
    auto dim_of = [&](const std::string& name) -> const GenericDimension& {
        auto it = cache.find(name);
        if (it == cache.end()) it = cache.emplace(name, generic_dimension(cat.family(name), seed, samples)).first;
        return it->second;
    };
    for (auto& name : gc.components) {
        const GenericDimension& g = dim_of(name);
        ComponentEntry e{name, g.params, g.der, g.family_dimension, g.params == 0};
        if (e.rigid) rep.rigid.push_back(name);
        rep.max_family_dimension = std::max(rep.max_family_dimension, e.family_dimension);
        rep.components.push_back(e);
    }
    for (auto& c : gc.dimension_claims) {
        int got = dim_of(c.family).family_dimension;
        rep.claims.push_back({c, got, got == c.dimension});
    }
    return rep;
}

DegenerationGraph degeneration_graph(const Catalog& cat, Variety v, const std::vector<const DegenerationWitness*>& witnesses) {
    DegenerationGraph g;
    std::set<std::string> nodes;
    for (auto& e : cat.entries.at(v)) nodes.insert(e.family);
    g.nodes.assign(nodes.begin(), nodes.end());
    std::set<std::pair<std::string, std::string>> edges;
    for (auto* w : witnesses) {
        auto vs = containing_varieties(w->variety);
        if (std::find(vs.begin(), vs.end(), v) == vs.end()) continue;
        if (!nodes.count(w->source) || !nodes.count(w->target)) continue;
        edges.emplace(w->source, w->target);
        if (w->source == w->target) g.has_self_loop = true;
    }
    g.edges.assign(edges.begin(), edges.end());
    const auto& comps = cat.geometry.at(v).components;
    std::set<std::string> seen(comps.begin(), comps.end());
    std::vector<std::string> stack(comps.begin(), comps.end());
    while (!stack.empty()) {
        std::string x = stack.back();
        stack.pop_back();
        for (auto& [a, b] : g.edges)
            if (a == x && seen.insert(b).second) stack.push_back(b);
    }
    for (auto& n : g.nodes)
        if (!seen.count(n)) g.unreached.push_back(n);
    return g;
}

}  // namespace cplv

namespace cplv {

MonotonicityOutcome check_monotonicity(const Catalog& cat, const DegenerationWitness& w, bool use_correction,
                                       std::uint64_t seed, int samples) {
    MonotonicityOutcome out;
    const FamilySpec& src = cat.family(w.source);
    const FamilySpec& tgt = cat.family(w.target);
    const RatSubst& subst = use_correction && w.corrected ? w.corrected->param_subst : w.param_subst;
    bool uses_t = false;
    for (auto& [v, f] : subst) uses_t = uses_t || f.contains(Var::t);
    out.mode = uses_t ? "family" : "pointwise";
    TwoProductAlgebra talg = target_algebra(cat, w);
    std::vector<Constraint> tcons = tgt.constraints;
    tcons.insert(tcons.end(), w.target_constraints.begin(), w.target_constraints.end());
    Rng rng(derive_seed(seed, "mono:" + w.name));
    int n = src.algebra.dim();
    GenericDimension gs;
    if (uses_t) gs = generic_dimension(src, seed);
    int attempts = 0;
    out.pass = true;
    while (out.samples < samples) {
        if (++attempts > 200) throw Error(Errc::BadConfig, "no admissible sample for " + w.name);
        Assignment tp = random_point(tgt.params, tcons, rng);
        int dt;
        try {
            dt = derivation_dimension(talg, tp);
        } catch (const Error&) {
            continue;
        }
        std::string line;
        if (uses_t) {
            int orbit = n * n - dt;
            line = "orbit " + std::to_string(orbit) + " < family " + std::to_string(gs.family_dimension);
            if (!(orbit < gs.family_dimension)) out.pass = false;
        } else {
            Assignment sp;
            try {
                for (Var v : src.params) sp[v] = subst.count(v) ? subst.at(v).eval(tp) : tp.at(v);
                if (!src.admissible(sp)) continue;
            } catch (const Error&) {
                continue;
            }
            int ds = derivation_dimension(src.algebra, sp);
            line = "der " + std::to_string(ds) + " < " + std::to_string(dt);
            if (!(ds < dt)) out.pass = false;
        }
        ++out.samples;
        if (out.detail.find(line) == std::string::npos) out.detail += (out.detail.empty() ? "" : "; ") + line;
    }
    return out;
}

}  // namespace cplv

#include "cplv/suites.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <sstream>
#include <set>
#include <thread>

#include "cplv/error.hpp"
#include "cplv/morphisms.hpp"
#include "cplv/sampling.hpp"

namespace cplv {

using ojson = nlohmann::ordered_json;

const char* status_name(Status s) {
    switch (s) {
        case Status::Pass: return "Pass";
        case Status::Fail: return "Fail";
        case Status::Flagged: return "Flagged";
    }
    return "?";
}

int Report::count(Status s) const {
    return static_cast<int>(std::count_if(items.begin(), items.end(), [&](const ItemResult& r) { return r.status == s; }));
}

void parallel_for(size_t n, const std::function<void(size_t)>& fn) {
    size_t workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, n);
    if (workers <= 1) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::exception_ptr> errors(n);
    std::vector<std::thread> pool;
    for (size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (size_t i; (i = next++) < n;) {
                try {
                    fn(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep = "; ") {
    std::string s;
    for (size_t k = 0; k < parts.size(); ++k) s += (k ? sep : "") + parts[k];
    return s;
}

std::string point_str(const Assignment& a) {
    std::string s = "{";
    bool first = true;
    for (auto& [v, x] : a) {
        s += (first ? "" : ", ") + std::string(var_name(v)) + "=" + x.str();
        first = false;
    }
    return s + "}";
}

struct Task {
    std::string name;
    std::vector<std::string> aliases;
    std::vector<Variety> varieties;  // empty: not tied to one variety
    std::function<ItemResult()> run;
};

bool selected(const Task& t, const RunConfig& cfg) {
    if (cfg.variety && !t.varieties.empty() &&
        std::find(t.varieties.begin(), t.varieties.end(), *cfg.variety) == t.varieties.end())
        return false;
    if (cfg.variety && t.varieties.empty()) return false;
    if (cfg.only) {
        if (t.name == *cfg.only) return true;
        return std::find(t.aliases.begin(), t.aliases.end(), *cfg.only) != t.aliases.end();
    }
    return true;
}

Report run_tasks(const std::string& suite, const std::vector<Task>& all, const RunConfig& cfg) {
    std::vector<const Task*> chosen;
    for (auto& t : all)
        if (selected(t, cfg)) chosen.push_back(&t);
    if (cfg.only && chosen.empty()) throw Error(Errc::BadConfig, "--only " + *cfg.only + " matches nothing");
    Report r;
    r.suite = suite;
    r.items.resize(chosen.size());
    parallel_for(chosen.size(), [&](size_t i) {
        try {
            r.items[i] = chosen[i]->run();
        } catch (const Error& e) {
            r.items[i].status = Status::Fail;
            r.items[i].detail = e.what();
        }
        r.items[i].name = chosen[i]->name;
    });
    return r;
}

}  // namespace

ItemResult catalog_family_item(const Catalog& cat, const FamilySpec& f, std::optional<Variety> only_variety) {
    ItemResult r;
    r.suite = "catalog";
    r.name = f.name;
    std::vector<std::string> bad, good;
    auto note = [&](bool ok, const std::string& what) { (ok ? good : bad).push_back(what); };
    if (!only_variety || *only_variety == Variety::CompatiblePreLie)
        note(check_compatible_variety(f.algebra, Variety::CompatiblePreLie), "compatible pre-Lie");
    note(z2_membership(f.algebra.first, f.algebra.second), "Z2 of base");
    if (f.base_name != f.name) note(f.algebra.first == cat.base_product(f), "first product is " + f.base);
    for (auto& [v, list] : cat.entries) {
        if (v == Variety::CompatiblePreLie) continue;
        if (only_variety && *only_variety != v) continue;
        for (auto& e : list) {
            if (e.family != f.name) continue;
            FamilySpec s = cat.specialise(e, v);
            note(check_compatible_variety(s.algebra, v), std::string(variety_name(v)) + "[" + e.label + "]");
        }
    }
    r.status = bad.empty() ? Status::Pass : Status::Fail;
    r.detail = bad.empty() ? "ok: " + join(good) : "failed: " + join(bad);
    r.extra["checks"] = good.size() + bad.size();
    return r;
}

ItemResult automorphism_item(const Catalog& cat, const AutFamily& a) {
    ItemResult r;
    r.suite = "automorphisms";
    r.name = "aut:" + a.base + "#" + std::to_string(a.item);
    Product base = cat.family(a.base).algebra.second;
    if (a.branch && a.branch->equal) base = base.subst(Assignment{{a.branch->param, a.branch->value}});
    std::vector<std::string> bad;
    for (size_t k = 0; k < a.templates.size(); ++k) {
        const BasisChange& g = a.templates[k];
        if (!(transport(base, g) == base)) bad.push_back("template " + std::to_string(k + 1) + " is not an automorphism");
    }
    bool continuous = false;
    for (auto& g : a.templates)
        for (int i = 0; i < g.rows(); ++i)
            for (int j = 0; j < g.cols(); ++j) continuous = continuous || g(i, j).contains(Var::xi) || g(i, j).contains(Var::nu);
    if (continuous) {
        BasisChange id = a.templates[0].map([](const RatFunc& f) { return f.subst(Assignment{{Var::xi, Scalar(1)}, {Var::nu, Scalar(0)}}); });
        if (!(id == BasisChange::identity(id.rows()))) bad.push_back("(xi, nu) = (1, 0) is not the identity");
    }
    r.status = bad.empty() ? Status::Pass : Status::Fail;
    r.detail = bad.empty() ? std::to_string(a.templates.size()) + " template(s) verified symbolically" : join(bad);
    return r;
}

ItemResult iso_item(const Catalog& cat, const IsoException& e, std::uint64_t seed, int points) {
    ItemResult r;
    r.suite = "isomorphisms";
    r.name = "iso:" + e.name;
    const FamilySpec& lf = cat.family(e.left.family);
    const FamilySpec& rf = cat.family(e.right.family);
    TwoProductAlgebra L = lf.algebra.subst(e.left.params);
    TwoProductAlgebra R = rf.algebra.subst(e.right.params);
    std::vector<std::string> bad, good;
    if (verify_isomorphism(L, R, e.witness))
        good.push_back("witness transports left to right symbolically");
    else
        bad.push_back("witness does not transport left to right");
    auto winv = inverse(e.witness);
    if (winv && verify_isomorphism(R, L, *winv))
        good.push_back("inverse transports back");
    else
        bad.push_back("inverse check failed");
    std::vector<Constraint> cons = e.constraints;
    for (auto& c : lf.constraints) cons.push_back(c.subst(e.left.params));
    for (auto& c : rf.constraints) cons.push_back(c.subst(e.right.params));
    std::vector<Var> vars;
    for (Var v : {Var::alpha, Var::beta, Var::gamma}) {
        bool used = false;
        for (const Product* p : {&L.first, &L.second, &R.first, &R.second})
            for (auto& c : p->entries()) used = used || c.contains(v);
        for (auto& c : cons)
            for (auto& q : c.polys) used = used || q.contains(v);
        for (int i = 0; i < e.witness.rows(); ++i)
            for (int j = 0; j < e.witness.cols(); ++j) used = used || e.witness(i, j).contains(v);
        if (used) vars.push_back(v);
    }
    Rng rng(derive_seed(seed, r.name));
    int agree = 0;
    bool searched = false;
    for (int k = 0; k < points; ++k) {
        Assignment pt = random_point(vars, cons, rng);
        TwoProductAlgebra Lp = L.subst(pt), Rp = R.subst(pt);
        int dl = derivation_dimension(Lp), dr = derivation_dimension(Rp);
        if (dl == dr)
            ++agree;
        else
            bad.push_back("dimDer differs at " + point_str(pt));
        if (!searched) {
            searched = true;
            auto g = search_isomorphism(cat, e.base, e.base_params, Lp, Rp);
            if (g)
                good.push_back("search inside Aut(" + e.base + ") finds a witness at " + point_str(pt));
            else
                bad.push_back("search found nothing at " + point_str(pt));
        }
    }
    good.push_back("dimDer agrees at " + std::to_string(agree) + "/" + std::to_string(points) + " points");
    r.status = bad.empty() ? Status::Pass : Status::Fail;
    r.detail = bad.empty() ? join(good) : join(bad);
    r.extra["provenance"] = e.provenance;
    return r;
}

ItemResult witness_item(const Catalog& cat, const DegenerationWitness& w, std::uint64_t seed, int samples) {
    ItemResult r;
    r.suite = "degenerations";
    r.name = "witness:" + w.name;
    r.extra["printed"] = w.printed;
    r.extra["provenance"] = w.provenance;
    DegenerationOutcome printed = verify_degeneration(cat, w, false);
    bool corrected = false;
    std::vector<std::string> parts;
    if (printed.pass) {
        r.status = Status::Pass;
        parts.push_back("all limits exist and match " + w.target);
    } else if (w.corrected && verify_degeneration(cat, w, true).pass) {
        corrected = true;
        r.status = Status::Flagged;
        parts.push_back("printed form fails (" + printed.failure + ": " + printed.detail + "); corrected form verifies: " +
                        w.corrected->note);
    } else {
        r.status = Status::Fail;
        r.detail = printed.failure + ": " + printed.detail;
        r.extra["failure"] = printed.failure;
        return r;
    }
    Variety v = w.variety;
    if (!check_compatible_variety(target_algebra(cat, w), v)) {
        r.status = Status::Fail;
        parts.push_back(std::string("limit is not in ") + variety_name(v));
    }
    MonotonicityOutcome m = check_monotonicity(cat, w, corrected, seed, samples);
    r.extra["monotonicity"] = {{"mode", m.mode}, {"pass", m.pass}, {"detail", m.detail}};
    if (!m.pass) {
        r.status = Status::Fail;
        parts.push_back("dimDer does not increase (" + m.detail + ")");
    } else {
        parts.push_back("dimDer increases (" + m.mode + ": " + m.detail + ")");
    }
    r.detail = join(parts);
    return r;
}

ItemResult relation_item(const Catalog& cat, const RelationSet& rs, const std::string& target, std::uint64_t seed) {
    ItemResult r;
    r.suite = "non-degenerations";
    r.name = "relation:" + rs.name + ":" + rs.source + "-/->" + target;
    NonDegenerationOutcome o = verify_non_degeneration(cat, rs.source, target, rs, seed, 50);
    std::vector<std::string> parts;
    parts.push_back(o.source_holds ? "holds on " + rs.source : "does not hold on " + rs.source);
    parts.push_back("residuals on " + target + ": [" + join(o.residuals, ", ") + "]");
    parts.push_back(o.target_excluded ? "nonzero for all admissible parameters" : "target not excluded");
    parts.push_back("triangular stability " + std::to_string(o.stability_samples - o.stability_failures) + "/" +
                    std::to_string(o.stability_samples));
    for (auto& n : o.notes) parts.push_back(n);
    r.status = o.pass ? (o.altered ? Status::Flagged : Status::Pass) : Status::Fail;
    r.detail = join(parts);
    r.extra["printed"] = rs.printed;
    r.extra["residuals"] = o.residuals;
    return r;
}

Report cmd_verify_catalog(const DataSet& data, const RunConfig& cfg) {
    const Catalog& cat = data.catalog;
    std::vector<Task> tasks;
    for (auto& f : cat.families) {
        std::vector<Variety> vs(f.varieties.begin(), f.varieties.end());
        tasks.push_back({f.name, {}, vs, [&cat, &f, &cfg] { return catalog_family_item(cat, f, cfg.variety); }});
    }
    for (auto& a : cat.automorphisms) {
        std::string name = "aut:" + a.base + "#" + std::to_string(a.item);
        tasks.push_back({name, {}, {Variety::CompatiblePreLie}, [&cat, &a] { return automorphism_item(cat, a); }});
    }
    for (auto& e : cat.iso_exceptions)
        tasks.push_back({"iso:" + e.name, {e.name}, e.varieties,
                         [&cat, &e, &cfg] { return iso_item(cat, e, cfg.seed); }});
    return run_tasks("verify-catalog", tasks, cfg);
}

Report cmd_verify_geometry(const DataSet& data, const RunConfig& cfg) {
    const Catalog& cat = data.catalog;
    std::vector<Task> tasks;
    for (auto& w : data.witnesses)
        tasks.push_back({"witness:" + w.name, {w.name}, {w.variety},
                         [&cat, &w, &cfg] { return witness_item(cat, w, cfg.seed, cfg.samples); }});
    for (auto& rs : data.relations)
        for (auto& t : rs.targets)
            tasks.push_back({"relation:" + rs.name + ":" + rs.source + "-/->" + t, {rs.name}, {rs.variety},
                             [&cat, &rs, t, &cfg] { return relation_item(cat, rs, t, cfg.seed); }});
    for (auto& [v, gc] : cat.geometry) {
        Variety var = v;
        for (auto& claim : gc.dimension_claims) {
            std::string name = "dimension:" + std::string(variety_name(var)) + ":" + claim.family;
            tasks.push_back({name, {}, {var}, [&cat, claim, &cfg, name] {
                                 ItemResult r;
                                 r.suite = "dimensions";
                                 GenericDimension g = generic_dimension(cat.family(claim.family), cfg.seed, cfg.samples);
                                 std::string line = "params " + std::to_string(g.params) + " + 4 - dimDer " +
                                                    std::to_string(g.der) + " = " + std::to_string(g.family_dimension) +
                                                    ", claimed " + std::to_string(claim.dimension);
                                 if (g.family_dimension == claim.dimension)
                                     r.status = Status::Pass;
                                 else if (claim.suspect)
                                     r.status = Status::Flagged;
                                 else
                                     r.status = Status::Fail;
                                 r.detail = line + (r.status == Status::Flagged ? "; " + claim.note : "");
                                 r.extra["computed"] = g.family_dimension;
                                 r.extra["claimed"] = claim.dimension;
                                 return r;
                             }});
        }
        tasks.push_back({"components:" + std::string(variety_name(var)), {}, {var}, [&cat, var, &cfg] {
                             ItemResult r;
                             r.suite = "components";
                             const GeometryClaims& gc = cat.geometry.at(var);
                             ComponentReport rep = component_report(cat, var, cfg.seed, cfg.samples);
                             std::vector<std::string> bad;
                             std::vector<std::string> listing;
                             for (auto& c : rep.components)
                                 listing.push_back(c.family + ":" + std::to_string(c.family_dimension));
                             std::vector<std::string> rigid = rep.rigid, want = gc.rigid;
                             std::sort(rigid.begin(), rigid.end());
                             std::sort(want.begin(), want.end());
                             if (rigid != want) bad.push_back("rigid set " + join(rigid, ",") + " differs from " + join(want, ","));
                             if (rep.max_family_dimension != gc.variety_dimension)
                                 bad.push_back("variety dimension " + std::to_string(rep.max_family_dimension) + " vs " +
                                               std::to_string(gc.variety_dimension));
                             r.status = bad.empty() ? Status::Pass : Status::Fail;
                             r.detail = std::to_string(rep.components.size()) + " components [" + join(listing, ", ") +
                                        "], rigid [" + join(rigid, ", ") + "], dimension " +
                                        std::to_string(rep.max_family_dimension) + (bad.empty() ? "" : "; " + join(bad));
                             return r;
                         }});
        tasks.push_back({"graph:" + std::string(variety_name(var)), {}, {var}, [&data, &cat, var] {
                             ItemResult r;
                             r.suite = "graph";
                             std::vector<const DegenerationWitness*> ok;
                             for (auto& w : data.witnesses) {
                                 if (verify_degeneration(cat, w, false).pass ||
                                     (w.corrected && verify_degeneration(cat, w, true).pass))
                                     ok.push_back(&w);
                             }
                             DegenerationGraph g = degeneration_graph(cat, var, ok);
                             r.status = g.unreached.empty() && !g.has_self_loop ? Status::Pass : Status::Fail;
                             r.detail = std::to_string(g.nodes.size()) + " nodes, " + std::to_string(g.edges.size()) +
                                        " edges" + (g.unreached.empty() ? ", every node lies below a component"
                                                                        : ", unreached: " + join(g.unreached, ", "));
                             ojson edges = ojson::array();
                             for (auto& [a, b] : g.edges) edges.push_back({a, b});
                             r.extra["edges"] = edges;
                             return r;
                         }});
        auto line_task = [&](const std::string& fam, bool expect) {
            tasks.push_back({"zero-line:" + fam, {}, {var}, [&cat, fam, expect, &cfg] {
                                 ItemResult r;
                                 r.suite = "zero-line";
                                 const FamilySpec& f = cat.family(fam);
                                 Rng rng(derive_seed(cfg.seed, "zero-line:" + fam));
                                 int hits = 0, n = f.params.empty() ? 1 : cfg.samples;
                                 for (int k = 0; k < n; ++k)
                                     if (has_zero_mult_line(f.algebra, random_point(f, rng)) == expect) ++hits;
                                 r.status = hits == n ? Status::Pass : Status::Fail;
                                 r.detail = std::string(expect ? "has" : "lacks") + " a line with zero multiplication at " +
                                            std::to_string(hits) + "/" + std::to_string(n) + " points";
                                 return r;
                             }});
        };
        for (auto& fam : gc.zero_line_with) line_task(fam, true);
        for (auto& fam : gc.zero_line_without) line_task(fam, false);
    }
    Report rep = run_tasks("verify-geometry", tasks, cfg);
    if (!cfg.only) {
        ojson dims = ojson::array();
        std::vector<GenericDimension> gd(cat.families.size());
        parallel_for(gd.size(), [&](size_t i) { gd[i] = generic_dimension(cat.families[i], cfg.seed, cfg.samples); });
        for (size_t i = 0; i < gd.size(); ++i) {
            ojson pts = ojson::array();
            for (auto& [pt, d] : gd[i].samples) pts.push_back({{"point", point_str(pt)}, {"der", d}});
            dims.push_back({{"family", cat.families[i].name},
                            {"params", gd[i].params},
                            {"generic_der", gd[i].der},
                            {"family_dimension", gd[i].family_dimension},
                            {"samples", pts}});
        }
        rep.tables["dimensions"] = dims;
    }
    return rep;
}

ojson report_json(const Report& r, const DataSet& data, const RunConfig& cfg) {
    ojson out;
    out["suite"] = r.suite;
    out["seed"] = cfg.seed;
    out["samples"] = cfg.samples;
    out["filters"] = {{"variety", cfg.variety ? variety_name(*cfg.variety) : ""}, {"only", cfg.only.value_or("")}};
    ojson hashes = ojson::object();
    for (auto& [k, v] : data.sha256) hashes[k] = v;
    out["data"] = {{"origin", data.origin == "builtin" ? "builtin" : "directory"}, {"sha256", hashes}};
    ojson items = ojson::array();
    for (auto& it : r.items) {
        ojson o = {{"suite", it.suite}, {"name", it.name}, {"status", status_name(it.status)}, {"detail", it.detail}};
        if (!it.extra.empty()) o["extra"] = it.extra;
        items.push_back(o);
    }
    out["items"] = items;
    for (auto& [k, v] : r.tables.items()) out[k] = v;
    out["summary"] = {{"pass", r.count(Status::Pass)}, {"flagged", r.count(Status::Flagged)}, {"fail", r.count(Status::Fail)}};
    return out;
}

std::string report_text(const Report& r, const DataSet& data, const RunConfig& cfg) {
    std::ostringstream os;
    os << r.suite << "  seed=" << cfg.seed << "  samples=" << cfg.samples << "\n";
    for (auto& [k, v] : data.sha256) os << "  " << k << " sha256 " << v.substr(0, 16) << "\n";
    for (auto& it : r.items) {
        std::string s = status_name(it.status);
        s.resize(8, ' ');
        os << s << it.name << "\n        " << it.detail << "\n";
    }
    os << "pass " << r.count(Status::Pass) << ", flagged " << r.count(Status::Flagged) << ", fail " << r.count(Status::Fail)
       << "\n";
    return os.str();
}

std::string Mutation::str() const {
    return family + (second ? " *" : " .") + " c" + std::to_string(i + 1) + std::to_string(j + 1) + "^" +
           std::to_string(k + 1) + " + (" + delta.str() + ")";
}

namespace {

ItemResult perturbed_item(const Catalog& cat, const Mutation& m, const RatFunc& delta) {
    FamilySpec f = cat.family(m.family);
    Product& p = m.second ? f.algebra.second : f.algebra.first;
    p.at(m.i, m.j, m.k) += delta;
    // specialisations of the mutated family are checked against the mutated table
    Catalog mutated = cat;
    for (auto& g : mutated.families)
        if (g.name == f.name) g = f;
    ItemResult r = catalog_family_item(mutated, f, std::nullopt);
    r.name = "mutation:" + m.str();
    return r;
}

}  // namespace

std::vector<Mutation> random_mutations(const Catalog& cat, std::uint64_t seed, int n) {
    // A position is usable only if the line c + xi leaves the variety. Moving
    // along a line inside it (rescaling e1.e1 of C07, say) gives another
    // legitimate algebra, which no identity can object to.
    Rng rng(derive_seed(seed, "mutations"));
    std::vector<Mutation> out;
    std::set<std::string> tried;
    size_t total = cat.families.size() * 16;
    while (static_cast<int>(out.size()) < n && tried.size() < total) {
        const FamilySpec& f = cat.families[static_cast<size_t>(rng.range(0, static_cast<long>(cat.families.size()) - 1))];
        Mutation m;
        m.family = f.name;
        // a base algebra's first slot is empty by convention, not data
        m.second = f.name == f.base_name || rng.range(0, 1) == 1;
        m.i = static_cast<int>(rng.range(0, 1));
        m.j = static_cast<int>(rng.range(0, 1));
        m.k = static_cast<int>(rng.range(0, 1));
        m.delta = rng.nonzero_scalar();
        std::string key = m.family + (m.second ? "*" : ".") + std::to_string(m.i * 4 + m.j * 2 + m.k);
        if (!tried.insert(key).second) continue;
        if (perturbed_item(cat, m, RatFunc::var(Var::xi)).status != Status::Fail) continue;
        out.push_back(m);
    }
    return out;
}

ItemResult mutation_item(const Catalog& cat, const Mutation& m) { return perturbed_item(cat, m, RatFunc(m.delta)); }

}  // namespace cplv

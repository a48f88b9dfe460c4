#include "cplv/serialize.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <regex>
#include <sstream>

#include "cplv/error.hpp"

namespace cplv {

using nlohmann::json;

std::string sha256_hex(std::string_view bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw Error(Errc::DataFileMissing, "sha256 failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 15];
    }
    return out;
}

Scalar scalar_from_json(const json& j) { return Scalar::parse(j.get<std::string>()); }

Poly poly_from_json(const json& j) {
    Poly p;
    for (auto& term : j) {
        Exponents e{};
        for (auto& [name, exp] : term.at(1).items()) {
            auto v = var_from_name(name);
            if (!v) throw Error(Errc::ParseError, "unknown variable '" + name + "'");
            e[static_cast<int>(*v)] = exp.get<std::uint16_t>();
        }
        p += Poly::monomial(scalar_from_json(term.at(0)), e);
    }
    return p;
}

RatFunc ratfunc_from_json(const json& j) {
    Poly num = poly_from_json(j.at("num"));
    if (!j.contains("den")) return RatFunc(num);
    return RatFunc(num, poly_from_json(j.at("den")));
}

json to_json(const Poly& p) {
    json out = json::array();
    for (auto& [e, c] : p.terms()) {
        json ex = json::object();
        for (int k = 0; k < kNumVars; ++k)
            if (e[k]) ex[var_name(static_cast<Var>(k))] = e[k];
        out.push_back(json::array({c.str(), ex}));
    }
    return out;
}

json to_json(const RatFunc& f) {
    json out = {{"num", to_json(f.num())}};
    if (!(f.den() == Poly(1))) out["den"] = to_json(f.den());
    return out;
}

namespace {

Var var_named(const std::string& s) {
    auto v = var_from_name(s);
    if (!v) throw Error(Errc::ParseError, "unknown variable '" + s + "'");
    return *v;
}

RatSubst subst_from_json(const json& j) {
    RatSubst s;
    for (auto& [k, v] : j.items()) s[var_named(k)] = ratfunc_from_json(v);
    return s;
}

json to_json(const RatSubst& s) {
    json out = json::object();
    for (auto& [k, v] : s) out[var_name(k)] = to_json(v);
    return out;
}

BasisChange matrix_from_json(const json& j) {
    std::vector<std::vector<RatFunc>> rows;
    for (auto& r : j) {
        rows.emplace_back();
        for (auto& x : r) rows.back().push_back(ratfunc_from_json(x));
    }
    return BasisChange(rows);
}

json to_json(const BasisChange& m) {
    json out = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (int j = 0; j < m.cols(); ++j) r.push_back(to_json(m(i, j)));
        out.push_back(r);
    }
    return out;
}

Constraint constraint_from_json(const json& j) {
    Constraint c;
    std::string k = j.at("kind");
    if (k == "nonzero")
        c.kind = Constraint::Kind::NonZero;
    else if (k == "not_equal")
        c.kind = Constraint::Kind::NotEqual;
    else if (k == "not_all_zero")
        c.kind = Constraint::Kind::NotAllZero;
    else
        throw Error(Errc::ParseError, "unknown constraint kind '" + k + "'");
    for (auto& p : j.at("polys")) c.polys.push_back(RatFunc(poly_from_json(p)));
    return c;
}

json to_json(const Constraint& c) {
    static const char* kinds[] = {"nonzero", "not_equal", "not_all_zero"};
    json polys = json::array();
    for (auto& p : c.polys) polys.push_back(to_json(p.num()));
    return {{"kind", kinds[static_cast<int>(c.kind)]}, {"polys", polys}};
}

std::vector<Constraint> constraints_from_json(const json& j) {
    std::vector<Constraint> out;
    for (auto& c : j) out.push_back(constraint_from_json(c));
    return out;
}

json to_json(const std::vector<Constraint>& cs) {
    json out = json::array();
    for (auto& c : cs) out.push_back(to_json(c));
    return out;
}

Product product_from_json(const json& j, int n) {
    Product p(n);
    for (auto& e : j) {
        int i = e.at("i").get<int>() - 1, jj = e.at("j").get<int>() - 1;
        if (i < 0 || i >= n || jj < 0 || jj >= n) throw Error(Errc::ParseError, "product index out of range");
        const json& c = e.at("c");
        if (static_cast<int>(c.size()) != n) throw Error(Errc::ParseError, "product entry has wrong length");
        for (int k = 0; k < n; ++k) p.at(i, jj, k) = ratfunc_from_json(c[k]);
    }
    return p;
}

json to_json(const Product& p) {
    json out = json::array();
    int n = p.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            bool any = false;
            json c = json::array();
            for (int k = 0; k < n; ++k) {
                any = any || !p.at(i, j, k).is_zero();
                c.push_back(to_json(p.at(i, j, k)));
            }
            if (any) out.push_back({{"i", i + 1}, {"j", j + 1}, {"c", c}});
        }
    return out;
}

// "C05^{1/2}" -> ("C05", {alpha: 1/2})
void split_base(const std::string& base, std::string& name, Assignment& params) {
    auto hat = base.find('^');
    name = base.substr(0, hat);
    params.clear();
    if (hat == std::string::npos) return;
    std::string inner = base.substr(hat + 1);
    if (inner.size() < 2 || inner.front() != '{' || inner.back() != '}')
        throw Error(Errc::ParseError, "bad base '" + base + "'");
    params[Var::alpha] = RatFunc::parse(inner.substr(1, inner.size() - 2)).constant();
}

std::vector<std::string> strings(const json& j) { return j.get<std::vector<std::string>>(); }

RelPoly relpoly_from_json(const json& j) {
    static const std::regex sym(R"(^c('?)(\d)(\d)\^(\d)$)");
    RelPoly p;
    for (auto& t : j) {
        RelTerm term{scalar_from_json(t.at(0)), {}};
        for (auto& s : t.at(1)) {
            std::smatch m;
            std::string str = s.get<std::string>();
            if (!std::regex_match(str, m, sym)) throw Error(Errc::ParseError, "bad relation symbol '" + str + "'");
            term.syms.push_back({m[1].length() > 0, std::stoi(m[2]), std::stoi(m[3]), std::stoi(m[4])});
        }
        p.push_back(std::move(term));
    }
    return p;
}

std::vector<RelPoly> relpolys_from_json(const json& j) {
    std::vector<RelPoly> out;
    for (auto& e : j) out.push_back(relpoly_from_json(e));
    return out;
}

DegenerationWitness witness_from_json(const json& j) {
    DegenerationWitness w;
    w.name = j.at("name");
    w.variety = variety_from_name(j.at("variety").get<std::string>());
    w.provenance = j.at("provenance");
    w.printed = j.value("printed", "");
    w.source = j.at("source");
    w.param_subst = subst_from_json(j.at("param_subst"));
    w.basis = matrix_from_json(j.at("basis"));
    w.target = j.at("target");
    w.target_params = subst_from_json(j.at("target_params"));
    w.target_constraints = constraints_from_json(j.at("target_constraints"));
    if (j.contains("corrected")) {
        const json& c = j.at("corrected");
        w.corrected = WitnessCorrection{subst_from_json(c.at("param_subst")), matrix_from_json(c.at("basis")), c.at("note")};
    }
    return w;
}

RelationSet relation_from_json(const json& j) {
    RelationSet r;
    r.name = j.at("name");
    r.variety = variety_from_name(j.at("variety").get<std::string>());
    r.source = j.at("source");
    r.targets = strings(j.at("targets"));
    r.printed = j.value("printed", "");
    r.equalities = relpolys_from_json(j.at("equalities"));
    if (j.contains("corrected")) {
        r.corrected = relpolys_from_json(j.at("corrected").at("equalities"));
        r.correction_note = j.at("corrected").at("note");
    }
    r.stability = j.value("stability", "upper");
    return r;
}

IsoException iso_from_json(const json& j) {
    IsoException e;
    e.name = j.at("name");
    for (auto& v : strings(j.at("varieties"))) e.varieties.push_back(variety_from_name(v));
    e.base = j.at("base");
    for (auto& [k, v] : subst_from_json(j.at("base_params"))) e.base_params[k] = v.constant();
    e.left = {j.at("left").at("family"), subst_from_json(j.at("left").at("params"))};
    e.right = {j.at("right").at("family"), subst_from_json(j.at("right").at("params"))};
    e.witness = matrix_from_json(j.at("witness"));
    e.constraints = constraints_from_json(j.at("constraints"));
    e.provenance = j.at("provenance");
    return e;
}

}  // namespace

Catalog catalog_from_json(const json& j) {
    if (j.at("schema") != "cplv-catalog/1") throw Error(Errc::ParseError, "unexpected catalog schema");
    Catalog c;
    c.dimension = j.at("dimension");
    for (auto& f : j.at("families")) {
        FamilySpec s;
        s.name = f.at("name");
        s.base = f.at("base");
        split_base(s.base, s.base_name, s.base_params);
        for (auto& p : f.at("params")) s.params.push_back(var_named(p));
        s.constraints = constraints_from_json(f.at("constraints"));
        s.display = f.at("display");
        s.algebra = TwoProductAlgebra(product_from_json(f.at("first"), c.dimension), product_from_json(f.at("second"), c.dimension));
        c.families.push_back(std::move(s));
    }
    for (auto& [vname, list] : j.at("varieties").items()) {
        Variety v = variety_from_name(vname);
        auto& out = c.entries[v];
        for (auto& e : list) {
            VarietyEntry ve{e.at("label"), e.at("family"), subst_from_json(e.at("subst")), constraints_from_json(e.at("constraints"))};
            out.push_back(std::move(ve));
            for (auto& f : c.families)
                if (f.name == out.back().family) f.varieties.insert(v);
        }
    }
    for (auto& a : j.at("automorphisms")) {
        AutFamily af;
        af.base = a.at("base");
        af.item = a.at("item");
        if (a.contains("branch")) {
            const json& b = a.at("branch");
            af.branch = AutBranch{var_named(b.at("param")), b.at("op") == "eq", Scalar::parse(b.at("value").get<std::string>())};
        }
        for (auto& t : a.at("templates")) af.templates.push_back(matrix_from_json(t));
        af.side = constraints_from_json(a.at("side"));
        c.automorphisms.push_back(std::move(af));
    }
    if (j.contains("geometry")) {
        for (auto& [vname, g] : j.at("geometry").items()) {
            GeometryClaims gc;
            gc.variety_dimension = g.at("variety_dimension");
            gc.components = strings(g.at("components"));
            gc.rigid = strings(g.at("rigid"));
            for (auto& d : g.at("dimension_claims"))
                gc.dimension_claims.push_back({d.at("family"), d.at("dimension"), d.value("suspect", false), d.value("note", "")});
            if (g.contains("zero_mult_line")) {
                gc.zero_line_with = strings(g.at("zero_mult_line").at("with"));
                gc.zero_line_without = strings(g.at("zero_mult_line").at("without"));
            }
            c.geometry[variety_from_name(vname)] = std::move(gc);
        }
    }
    return c;
}

json catalog_to_json(const Catalog& c) {
    json fams = json::array();
    for (auto& f : c.families) {
        json params = json::array();
        for (Var v : f.params) params.push_back(var_name(v));
        fams.push_back({{"name", f.name},
                        {"base", f.base},
                        {"params", params},
                        {"constraints", to_json(f.constraints)},
                        {"display", f.display},
                        {"first", to_json(f.algebra.first)},
                        {"second", to_json(f.algebra.second)}});
    }
    json vars = json::object();
    for (auto& [v, list] : c.entries) {
        json arr = json::array();
        for (auto& e : list)
            arr.push_back({{"label", e.label}, {"family", e.family}, {"subst", to_json(e.subst)}, {"constraints", to_json(e.constraints)}});
        vars[variety_name(v)] = arr;
    }
    json auts = json::array();
    for (auto& a : c.automorphisms) {
        json t = json::array();
        for (auto& m : a.templates) t.push_back(to_json(m));
        json o = {{"base", a.base}, {"item", a.item}, {"templates", t}, {"side", to_json(a.side)}};
        if (a.branch)
            o["branch"] = {{"param", var_name(a.branch->param)}, {"op", a.branch->equal ? "eq" : "ne"}, {"value", a.branch->value.str()}};
        auts.push_back(o);
    }
    json out = {{"schema", "cplv-catalog/1"}, {"dimension", c.dimension}, {"families", fams}, {"varieties", vars}, {"automorphisms", auts}};
    if (!c.geometry.empty()) {
        json geo = json::object();
        for (auto& [v, g] : c.geometry) {
            json claims = json::array();
            for (auto& d : g.dimension_claims) {
                json o = {{"family", d.family}, {"dimension", d.dimension}};
                if (d.suspect) o["suspect"] = true;
                if (!d.note.empty()) o["note"] = d.note;
                claims.push_back(o);
            }
            json o = {{"variety_dimension", g.variety_dimension},
                      {"components", g.components},
                      {"rigid", g.rigid},
                      {"dimension_claims", claims}};
            if (!g.zero_line_with.empty() || !g.zero_line_without.empty())
                o["zero_mult_line"] = {{"with", g.zero_line_with}, {"without", g.zero_line_without}};
            geo[variety_name(v)] = o;
        }
        out["geometry"] = geo;
    }
    return out;
}

DataSet load_texts(const std::map<std::string, std::string>& texts, std::string origin) {
    DataSet d;
    d.origin = std::move(origin);
    auto parse = [&](const char* name) {
        auto it = texts.find(name);
        if (it == texts.end()) throw Error(Errc::DataFileMissing, std::string(name) + " not provided");
        d.sha256[name] = sha256_hex(it->second);
        try {
            return json::parse(it->second);
        } catch (const json::exception& e) {
            throw Error(Errc::DataFileMissing, std::string(name) + " is corrupted: " + e.what());
        }
    };
    auto guarded = [&](const char* name, auto fn) {
        try {
            fn();
        } catch (const Error& e) {
            if (e.code() == Errc::DataFileMissing) throw;
            throw Error(Errc::DataFileMissing, std::string(name) + " is corrupted: " + e.what());
        } catch (const json::exception& e) {
            throw Error(Errc::DataFileMissing, std::string(name) + " is corrupted: " + e.what());
        }
    };
    json cat = parse("catalog.json"), wit = parse("witnesses.json"), rel = parse("relations.json"),
         iso = parse("iso_exceptions.json");
    guarded("catalog.json", [&] { d.catalog = catalog_from_json(cat); });
    guarded("witnesses.json", [&] {
        for (auto& w : wit.at("witnesses")) d.witnesses.push_back(witness_from_json(w));
    });
    guarded("relations.json", [&] {
        for (auto& r : rel.at("relations")) d.relations.push_back(relation_from_json(r));
    });
    guarded("iso_exceptions.json", [&] {
        for (auto& e : iso.at("exceptions")) d.catalog.iso_exceptions.push_back(iso_from_json(e));
    });
    return d;
}

DataSet load_builtin() {
    std::map<std::string, std::string> texts;
    for (auto& [k, v] : embedded_data()) texts[k] = std::string(v);
    return load_texts(texts, "builtin");
}

DataSet load_directory(const std::string& dir) {
    std::map<std::string, std::string> texts;
    for (const char* name : kDataFiles) {
        std::string path = dir + "/" + name;
        std::ifstream in(path, std::ios::binary);
        if (!in) throw Error(Errc::DataFileMissing, "cannot read " + path);
        std::ostringstream ss;
        ss << in.rdbuf();
        texts[name] = ss.str();
    }
    return load_texts(texts, dir);
}

}  // namespace cplv

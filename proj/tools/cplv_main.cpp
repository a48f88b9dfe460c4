// cplv: verification driver for the 2-dimensional compatible pre-Lie catalog.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "cplv/error.hpp"
#include "cplv/geometry.hpp"
#include "cplv/suites.hpp"

using namespace cplv;

namespace {

DataSet load(const RunConfig& cfg) { return cfg.data_dir.empty() ? load_builtin() : load_directory(cfg.data_dir); }

int emit(const Report& r, const DataSet& data, const RunConfig& cfg) {
    std::string text = cfg.format == "json" ? report_json(r, data, cfg).dump(2) + "\n" : report_text(r, data, cfg);
    if (cfg.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(cfg.out, std::ios::binary);
        if (!f) throw Error(Errc::BadConfig, "cannot write " + cfg.out);
        f << text;
    }
    return r.any_fail() ? 1 : 0;
}

Assignment parse_params(const std::vector<std::string>& args) {
    Assignment a;
    for (auto& s : args) {
        auto eq = s.find('=');
        if (eq == std::string::npos) throw Error(Errc::BadConfig, "expected name=value, got " + s);
        auto v = var_from_name(s.substr(0, eq));
        if (!v) throw Error(Errc::BadConfig, "unknown parameter " + s.substr(0, eq));
        if (*v != Var::alpha && *v != Var::beta && *v != Var::gamma)
            throw Error(Errc::BadConfig, "not a family parameter: " + s);
        a[*v] = Scalar::parse(s.substr(eq + 1));
    }
    return a;
}

int show(const RunConfig& cfg, const std::string& name, const std::vector<std::string>& args) {
    DataSet data = load(cfg);
    const Catalog& cat = data.catalog;
    const FamilySpec& f = cat.family(name);
    Assignment values = parse_params(args);
    std::cout << f.name << "  over " << f.base << "\n";
    if (!f.params.empty() && values.empty()) {
        std::cout << "symbolic in";
        for (Var v : f.params) std::cout << " " << var_name(v);
        if (!f.constraints.empty()) {
            std::cout << ", requires";
            for (auto& c : f.constraints) std::cout << " " << c.str();
        }
        std::cout << "\n. table\n" << table_text(f.algebra.first, ".") << "\n* table\n" << table_text(f.algebra.second, "*") << "\n";
        GenericDimension g = generic_dimension(f, cfg.seed, cfg.samples);
        std::cout << "dimDer " << g.der << " at a generic point\n";
        return 0;
    }
    TwoProductAlgebra a = cat.instantiate(name, values);
    if (f.name == f.base_name) {
        // base algebras carry their product in the second slot
        std::cout << "product\n" << table_text(a.second, ".") << "\n";
        std::cout << "dimDer " << derivation_dimension(a) << "\n";
        return 0;
    }
    std::cout << ". table\n" << table_text(a.first, ".") << "\n* table\n" << table_text(a.second, "*") << "\n";
    std::cout << "dimDer " << derivation_dimension(a) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verify the catalog and geometry of 2-dimensional compatible pre-Lie algebras"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string variety;
    std::string only;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--variety", variety, "CompatiblePreLie, CompatibleCommAssoc, CompatibleAssoc or CompatibleNovikov");
        sub->add_option("--only", only, "restrict to one family, witness or item name");
        sub->add_option("--seed", cfg.seed, "seed for every randomized check");
        sub->add_option("--samples", cfg.samples, "sample points per randomized check")->check(CLI::Range(1, 1000));
        sub->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--out", cfg.out, "write the report here instead of stdout");
        sub->add_option("--data-dir", cfg.data_dir, "read data files from this directory instead of the built-in copy");
    };
    auto* vc = app.add_subcommand("verify-catalog", "identity, Z2, automorphism and isomorphism suites");
    auto* vg = app.add_subcommand("verify-geometry", "degenerations, non-degenerations, dimensions, components");
    auto* sh = app.add_subcommand("show", "print both tables of an algebra and its derivation dimension");
    add_common(vc);
    add_common(vg);
    std::string name;
    std::vector<std::string> params;
    sh->add_option("name", name, "family name, e.g. C08")->required();
    sh->add_option("params", params, "parameter values, e.g. alpha=1 beta=1/2");
    sh->add_option("--seed", cfg.seed);
    sh->add_option("--data-dir", cfg.data_dir);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (!variety.empty()) cfg.variety = variety_from_name(variety);
        if (!only.empty()) cfg.only = only;
        if (sh->parsed()) {
            cfg.command = "show";
            return show(cfg, name, params);
        }
        cfg.command = vc->parsed() ? "verify-catalog" : "verify-geometry";
        DataSet data = load(cfg);
        Report r = vc->parsed() ? cmd_verify_catalog(data, cfg) : cmd_verify_geometry(data, cfg);
        return emit(r, data, cfg);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

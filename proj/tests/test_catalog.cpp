#include <doctest.h>

#include "cplv/error.hpp"
#include "cplv/suites.hpp"

using namespace cplv;

namespace {

const DataSet& data() {
    static const DataSet d = load_builtin();
    return d;
}
const Catalog& cat() { return data().catalog; }

Product table(std::initializer_list<std::tuple<int, int, int, long>> es) {
    Product p(2);
    for (auto& [i, j, k, v] : es) p.at(i - 1, j - 1, k - 1) = RatFunc(v);
    return p;
}

Errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::BadConfig;
}

}  // namespace

TEST_CASE("instantiate") {
    // base algebras keep their product in the second slot
    TwoProductAlgebra c07 = cat().instantiate("C07", {});
    CHECK(c07.first.is_zero());
    CHECK(c07.second == table({{1, 1, 1, 1}, {2, 2, 2, 1}}));
    CHECK(code_of([] { cat().instantiate("C39", {{Var::alpha, 1}, {Var::beta, 1}}); }) == Errc::ConstraintViolated);
    CHECK(code_of([] { cat().instantiate("C39", {{Var::alpha, 1}}); }) == Errc::MissingParameter);
    CHECK(code_of([] { cat().instantiate("C99", {}); }) == Errc::UnknownName);
    TwoProductAlgebra c15 = cat().instantiate("C15", {{Var::alpha, 0}});
    CHECK(c15.first == table({{1, 1, 2, 1}}));
    CHECK(c15.second.is_zero());
}

TEST_CASE("family names and bases") {
    REQUIRE(cat().families.size() == 41);
    for (auto& f : cat().families) {
        CAPTURE(f.name);
        CHECK(cat().has(f.base_name));
        if (f.name != f.base_name) CHECK(f.algebra.first == cat().base_product(f));
    }
}

TEST_CASE("variety lists") {
    CHECK(cat().list_catalog(Variety::CompatiblePreLie).size() == 41);
    CHECK(cat().list_catalog(Variety::CompatibleCommAssoc).size() == 18);
    CHECK(cat().list_catalog(Variety::CompatibleAssoc).size() == 24);
    CHECK(cat().list_catalog(Variety::CompatibleNovikov).size() == 32);
    for (Variety v : kAllVarieties)
        for (auto& f : cat().list_catalog(v)) {
            CAPTURE(f.name);
            CHECK(check_compatible_variety(f.algebra, v));
        }
}

TEST_CASE("commutative associative list runs from C03 to C39") {
    auto l = cat().list_catalog(Variety::CompatibleCommAssoc);
    CHECK(l.front().name.rfind("C03", 0) == 0);
    CHECK(l.back().name.rfind("C39", 0) == 0);
}

TEST_CASE("automorphism families") {
    AutFamily c03 = cat().automorphism_family("C03");
    REQUIRE(c03.templates.size() == 1);
    RatFunc xi = RatFunc::var(Var::xi), nu = RatFunc::var(Var::nu);
    CHECK(c03.templates[0] == BasisChange({{xi, nu}, {0, xi * xi}}));
    AutFamily c07 = cat().automorphism_family("C07");
    REQUIRE(c07.templates.size() == 2);
    CHECK(c07.templates[0] == BasisChange::identity(2));
    CHECK(c07.templates[1] == BasisChange({{0, 1}, {1, 0}}));
    for (auto& a : cat().automorphisms) {
        CAPTURE(a.base);
        CHECK(automorphism_item(cat(), a).status == Status::Pass);
    }
}

TEST_CASE("every family passes its identity suite") {
    for (auto& f : cat().families) {
        ItemResult r = catalog_family_item(cat(), f, std::nullopt);
        CAPTURE(r.detail);
        CHECK(r.status == Status::Pass);
    }
}

TEST_CASE("json round trip") {
    for (auto& [name, text] : embedded_data()) {
        if (name != "catalog.json") continue;
        nlohmann::json j = nlohmann::json::parse(text);
        Catalog c = catalog_from_json(j);
        nlohmann::json back = catalog_to_json(c);
        CHECK(catalog_to_json(catalog_from_json(back)) == back);
        CHECK(back["families"] == j["families"]);
        CHECK(back["varieties"] == j["varieties"]);
        CHECK(back["automorphisms"] == j["automorphisms"]);
        REQUIRE(c.families.size() == cat().families.size());
        for (size_t k = 0; k < c.families.size(); ++k) CHECK(c.families[k].algebra == cat().families[k].algebra);
    }
}

TEST_CASE("embedded data matches the files on disk") {
    DataSet disk = load_directory(CPLV_DATA_DIR);
    CHECK(disk.sha256 == data().sha256);
}

TEST_CASE("mutations break an identity") {
    auto ms = random_mutations(cat(), 20240601, 10);
    REQUIRE(ms.size() == 10);
    for (auto& m : ms) {
        CAPTURE(m.str());
        CHECK(mutation_item(cat(), m).status == Status::Fail);
    }
    // the spec's hand mutation: e2*e2 of C18 doubled
    FamilySpec c18 = cat().family("C18");
    c18.algebra.second.at(1, 1, 1) = RatFunc(2);
    CHECK(catalog_family_item(cat(), c18, std::nullopt).status == Status::Fail);
}

TEST_CASE("mutations are deterministic") {
    auto a = random_mutations(cat(), 5, 10), b = random_mutations(cat(), 5, 10);
    for (size_t k = 0; k < a.size(); ++k) CHECK(a[k].str() == b[k].str());
}

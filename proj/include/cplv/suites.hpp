#pragma once
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cplv/serialize.hpp"

namespace cplv {

enum class Status { Pass, Fail, Flagged };
const char* status_name(Status s);

struct ItemResult {
    std::string suite;
    std::string name;
    Status status = Status::Fail;
    std::string detail;
    nlohmann::ordered_json extra = nlohmann::ordered_json::object();
};

struct RunConfig {
    std::string command;
    std::optional<Variety> variety;
    std::optional<std::string> only;
    std::uint64_t seed = 20240601;
    int samples = 5;
    std::string format = "text";
    std::string out;
    std::string data_dir;
};

struct Report {
    std::string suite;
    std::vector<ItemResult> items;
    nlohmann::ordered_json tables = nlohmann::ordered_json::object();
    int count(Status s) const;
    bool any_fail() const { return count(Status::Fail) > 0; }
};

Report cmd_verify_catalog(const DataSet& data, const RunConfig& cfg);
Report cmd_verify_geometry(const DataSet& data, const RunConfig& cfg);

nlohmann::ordered_json report_json(const Report& r, const DataSet& data, const RunConfig& cfg);
std::string report_text(const Report& r, const DataSet& data, const RunConfig& cfg);

// runs fn(0..n-1) over the available cores
void parallel_for(size_t n, const std::function<void(size_t)>& fn);

// individual items, also used by the tests
ItemResult catalog_family_item(const Catalog& cat, const FamilySpec& f, std::optional<Variety> only_variety);
ItemResult automorphism_item(const Catalog& cat, const AutFamily& a);
ItemResult iso_item(const Catalog& cat, const IsoException& e, std::uint64_t seed, int points = 10);
ItemResult witness_item(const Catalog& cat, const DegenerationWitness& w, std::uint64_t seed, int samples);
ItemResult relation_item(const Catalog& cat, const RelationSet& r, const std::string& target, std::uint64_t seed);

// Mutation control: one structure constant of one family shifted by a random
// nonzero Gaussian rational.
struct Mutation {
    std::string family;
    bool second = false;  // which product
    int i = 0, j = 0, k = 0;
    Scalar delta;
    std::string str() const;
};
std::vector<Mutation> random_mutations(const Catalog& cat, std::uint64_t seed, int n);
// family item run on the mutated family; Fail means the mutation was caught
ItemResult mutation_item(const Catalog& cat, const Mutation& m);

}  // namespace cplv

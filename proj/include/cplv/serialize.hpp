#pragma once
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cplv/catalog.hpp"
#include "cplv/geometry.hpp"

namespace cplv {

struct DataSet {
    Catalog catalog;
    std::vector<DegenerationWitness> witnesses;
    std::vector<RelationSet> relations;
    std::map<std::string, std::string> sha256;  // file name -> hex digest
    std::string origin;                         // "builtin" or the directory
};

inline constexpr const char* kDataFiles[] = {"catalog.json", "witnesses.json", "relations.json", "iso_exceptions.json"};

// Files compiled into the binary.
const std::map<std::string, std::string_view>& embedded_data();

DataSet load_builtin();
// DataFileMissing when a file is absent, unreadable or does not parse
DataSet load_directory(const std::string& dir);
DataSet load_texts(const std::map<std::string, std::string>& texts, std::string origin);

std::string sha256_hex(std::string_view bytes);

Scalar scalar_from_json(const nlohmann::json& j);
Poly poly_from_json(const nlohmann::json& j);
RatFunc ratfunc_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Poly& p);
nlohmann::json to_json(const RatFunc& f);

Catalog catalog_from_json(const nlohmann::json& j);
nlohmann::json catalog_to_json(const Catalog& c);

}  // namespace cplv

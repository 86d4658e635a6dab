#pragma once
// Shared test fixtures: certified fields loaded once from the data
// directory baked in at configure time (FS19_DATA_DIR).

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "fs19/number_field.hpp"

namespace fs19::testing {

inline std::string data_path(const std::string& rel) {
    return std::string(FS19_DATA_DIR) + "/" + rel;
}

inline std::string slurp_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Cached by file name; certificates are immutable, so sharing is safe.
inline const NumberField& field(const std::string& file) {
    static std::map<std::string, NumberField> cache;
    auto it = cache.find(file);
    if (it == cache.end()) {
        FieldCertificate cert =
            parse_field_certificate(slurp_file(data_path("fields/" + file)));
        it = cache.emplace(file, NumberField(std::move(cert))).first;
    }
    return it->second;
}

}  // namespace fs19::testing

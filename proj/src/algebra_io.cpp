#include "chromcoh/algebra_io.hpp"

#include <filesystem>
#include <fstream>

namespace chromcoh {

namespace {

using nlohmann::json;

BigInt json_int(const json& v, const char* what) {
    if (v.is_number_integer()) return BigInt(v.get<long>());
    if (v.is_string()) {
        BigInt out;
        if (out.set_str(v.get<std::string>(), 10) == 0) return out;
    }
    throw AlgebraError(std::string("expected an integer in '") + what + "'");
}

IntMatrix json_square(const json& v, std::size_t m, const char* what) {
    if (!v.is_array() || v.size() != m) throw AlgebraError(std::string("'") + what + "' must be an m x m array");
    IntMatrix out(m, m);
    for (std::size_t r = 0; r < m; ++r) {
        if (!v[r].is_array() || v[r].size() != m) throw AlgebraError(std::string("'") + what + "' must be an m x m array");
        for (std::size_t c = 0; c < m; ++c) out(r, c) = json_int(v[r][c], what);
    }
    return out;
}

json int_json(const BigInt& v) {
    if (fits_int64(v)) return v.get_si();
    return v.get_str();
}

}  // namespace

AlgebraSpec parse_algebra_json(const json& doc, const std::string& name) {
    if (!doc.is_object()) throw AlgebraError("algebra document must be a JSON object");
    for (const char* key : {"dim", "degrees", "mult"})
        if (!doc.contains(key)) throw AlgebraError(std::string("algebra document is missing '") + key + "'");
    if (!doc["dim"].is_number_integer() || doc["dim"].get<long>() < 1) throw AlgebraError("'dim' must be a positive integer");
    const auto m = static_cast<std::size_t>(doc["dim"].get<long>());
    const json& deg = doc["degrees"];
    if (!deg.is_array() || deg.size() != m) throw AlgebraError("'degrees' must hold dim integers");
    std::vector<int> degrees;
    for (const auto& d : deg) {
        if (!d.is_number_integer()) throw AlgebraError("'degrees' must hold integers");
        degrees.push_back(d.get<int>());
    }
    const json& mult = doc["mult"];
    std::vector<BigInt> constants;
    constants.reserve(m * m * m);
    if (!mult.is_array() || mult.size() != m) throw AlgebraError("'mult' must be an m x m x m array");
    for (const auto& plane : mult) {
        if (!plane.is_array() || plane.size() != m) throw AlgebraError("'mult' must be an m x m x m array");
        for (const auto& row : plane) {
            if (!row.is_array() || row.size() != m) throw AlgebraError("'mult' must be an m x m x m array");
            for (const auto& c : row) constants.push_back(json_int(c, "mult"));
        }
    }
    std::optional<Coords> unit;
    if (doc.contains("unit") && !doc["unit"].is_null()) {
        const json& u = doc["unit"];
        if (!u.is_array() || u.size() != m) throw AlgebraError("'unit' must hold dim integers");
        unit.emplace();
        for (const auto& c : u) unit->push_back(json_int(c, "unit"));
    }
    AlgebraSpec spec{GradedAlgebra(std::move(degrees), std::move(constants), std::move(unit), name), std::nullopt};
    if (doc.contains("twist") && !doc["twist"].is_null()) spec.twist = Endomorphism{json_square(doc["twist"], m, "twist")};
    return spec;
}

AlgebraSpec load_algebra(const std::string& name_or_path) {
    if (!std::filesystem::exists(name_or_path)) return {builtin_algebra(name_or_path), std::nullopt};
    std::ifstream in(name_or_path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw AlgebraError("cannot parse algebra file " + name_or_path + ": " + e.what());
    }
    return parse_algebra_json(doc, std::filesystem::path(name_or_path).filename().string());
}

Endomorphism load_twist(const std::string& name_or_path, const GradedAlgebra& a) {
    if (name_or_path == "zero") return Endomorphism::zero(a.dim());
    if (name_or_path == "identity") return Endomorphism::identity(a.dim());
    std::ifstream in(name_or_path);
    if (!in) throw AlgebraError("unknown twist '" + name_or_path + "' (expected zero, identity or a JSON file)");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw AlgebraError("cannot parse twist file " + name_or_path + ": " + e.what());
    }
    const json& body = doc.is_object() && doc.contains("twist") ? doc["twist"] : doc;
    return Endomorphism{json_square(body, static_cast<std::size_t>(a.dim()), "twist")};
}

json algebra_to_json(const GradedAlgebra& a) {
    json doc;
    doc["name"] = a.name();
    doc["dim"] = a.dim();
    doc["degrees"] = a.degrees();
    json mult = json::array();
    for (int i = 0; i < a.dim(); ++i) {
        json plane = json::array();
        for (int j = 0; j < a.dim(); ++j) {
            json row = json::array();
            for (int k = 0; k < a.dim(); ++k) row.push_back(int_json(a.mult(i, j, k)));
            plane.push_back(std::move(row));
        }
        mult.push_back(std::move(plane));
    }
    doc["mult"] = std::move(mult);
    if (a.unit()) {
        json u = json::array();
        for (const auto& c : *a.unit()) u.push_back(int_json(c));
        doc["unit"] = std::move(u);
    }
    return doc;
}

}  // namespace chromcoh

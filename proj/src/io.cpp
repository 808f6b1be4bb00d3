#include "factorlens/io.hpp"

#include <fstream>
#include <sstream>

namespace factorlens {

using nlohmann::json;

LengthSet lengthset_from_json(const json& j) {
    if (!j.is_array()) throw SpecError("expected an array of integers");
    std::vector<Int> v;
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw SpecError("expected an array of integers");
        v.push_back(e.get<Int>());
    }
    return LengthSet::from_values(std::move(v));
}

json to_json(const LengthSet& l) {
    return json(l.values());
}

namespace {

std::vector<Vec> vectors_from_json(const json& j, const char* what) {
    if (!j.is_array()) throw SpecError(std::string(what) + " must be an array of integer vectors");
    std::vector<Vec> out;
    for (const auto& row : j) {
        if (!row.is_array()) throw SpecError(std::string(what) + " entries must be arrays");
        Vec v;
        for (const auto& e : row) {
            if (!e.is_number_integer()) throw SpecError(std::string(what) + " must be integral");
            v.push_back(e.get<Int>());
        }
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

ParsedSpec parse_spec(const json& j) {
    if (!j.is_object()) throw SpecError("spec must be a JSON object");
    std::string kind = j.value("kind", j.contains("depth") ? "family" : "");
    ParsedSpec spec;
    if (kind == "lattice") {
        if (!j.contains("dim") || !j.contains("atoms")) throw SpecError("lattice spec needs dim and atoms");
        int dim = j.at("dim").get<int>();
        std::optional<Vec> grading;
        if (j.contains("grading")) {
            auto g = vectors_from_json(json::array({j.at("grading")}), "grading");
            grading = g.at(0);
        }
        spec.kind = ParsedSpec::Kind::lattice;
        try {
            spec.lattice = make_presentation(dim, vectors_from_json(j.at("atoms"), "atoms"),
                                             std::move(grading));
        } catch (const UnsupportedPresentation& e) {
            throw SpecError(e.what());
        }
    } else if (kind == "zero-sum") {
        if (!j.contains("factors")) throw SpecError("zero-sum spec needs factors");
        std::vector<Int> factors;
        for (const auto& e : j.at("factors")) factors.push_back(e.get<Int>());
        spec.kind = ParsedSpec::Kind::lattice;
        if (j.contains("subset")) {
            auto subset = vectors_from_json(j.at("subset"), "subset");
            spec.lattice = zero_sum_presentation(factors, &subset).pres;
        } else {
            spec.lattice = zero_sum_presentation(factors).pres;
        }
    } else if (kind == "power") {
        if (!j.contains("generators")) throw SpecError("power spec needs generators");
        spec.kind = ParsedSpec::Kind::power;
        for (const auto& g : j.at("generators"))
            spec.power_generators.push_back(lengthset_from_json(g));
        if (spec.power_generators.empty()) throw SpecError("power spec needs >= 1 generator");
    } else if (kind == "family") {
        if (!j.contains("generators") || !j.contains("depth"))
            throw SpecError("family spec needs generators and depth");
        spec.kind = ParsedSpec::Kind::family;
        for (const auto& g : j.at("generators"))
            spec.family.generators.push_back(lengthset_from_json(g));
        spec.family.closure_depth = j.at("depth").get<int>();
    } else {
        throw SpecError("unknown spec kind '" + kind + "'");
    }
    return spec;
}

ParsedSpec parse_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("cannot open spec file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw SpecError(std::string("malformed JSON: ") + e.what());
    }
    return parse_spec(j);
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    out += "\"";
    return out;
}

std::string csv_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += csv_field(fields[i]);
    }
    out += "\r\n";
    return out;
}

}  // namespace factorlens

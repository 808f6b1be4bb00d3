#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "factorlens/family.hpp"
#include "factorlens/monoid.hpp"

namespace factorlens {

struct SpecError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A parsed input spec. Kinds:
///   {"kind":"lattice","dim":D,"atoms":[[..],..],"grading":[..]?}
///   {"kind":"zero-sum","factors":[n1,..],"subset":[[..],..]?}
///   {"kind":"power","generators":[[0,1],[0,1,2,4]]}
///   {"generators":[[1],[2,3]],"depth":12}  (family; "kind":"family" optional)
struct ParsedSpec {
    enum class Kind { lattice, power, family } kind = Kind::lattice;
    AtomPresentation lattice;         // lattice & zero-sum specs land here
    std::vector<FinSet> power_generators;
    FamilySpec family;
};

ParsedSpec parse_spec(const nlohmann::json& j);
ParsedSpec parse_spec_file(const std::string& path);

nlohmann::json to_json(const LengthSet& l);  // sorted array of integers
LengthSet lengthset_from_json(const nlohmann::json& j);

/// RFC-4180 field quoting (quotes fields containing comma/quote/newline).
std::string csv_field(const std::string& s);
std::string csv_row(const std::vector<std::string>& fields);

}  // namespace factorlens

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hopfcyc/group.hpp"
#include "hopfcyc/hopf.hpp"
#include "hopfcyc/report.hpp"

namespace hopfcyc {

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Hopf algebra spec file. Coefficients are fraction strings or integers; "antipode" entries
// [i, j, c] give the e_j-coefficient of S(e_i). `field` overrides the file's field.
HopfAlgebra hopf_from_json(const nlohmann::json& j, const std::optional<Field>& field = std::nullopt);
nlohmann::ordered_json hopf_to_json(const HopfAlgebra& h);

// {"generators": [[c_0, ..., c_{dim-1}], ...]}
std::vector<SVec> vectors_from_json(const nlohmann::json& j, Index dim, const Field& f);
nlohmann::ordered_json vectors_to_json(const std::vector<SVec>& v, Index dim);

// {"name", "elements": [...], "table": [[...]]} with table[a][b] the index of ab.
FiniteGroup group_from_json(const nlohmann::json& j);

nlohmann::ordered_json report_to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);

nlohmann::json read_json_file(const std::string& path);

}  // namespace hopfcyc

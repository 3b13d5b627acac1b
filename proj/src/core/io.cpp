#include "hopfcyc/io.hpp"

#include <fstream>
#include <sstream>

namespace hopfcyc {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

Scalar coefficient(const json& v, const Field& f, const std::string& where) {
    try {
        if (v.is_string()) return f.parse(v.get<std::string>());
        if (v.is_number_integer()) return f.from_int(v.get<long long>());
    } catch (const std::invalid_argument& e) {
        throw InputError(where + ": " + e.what());
    }
    throw InputError(where + ": coefficient must be an integer or a fraction string");
}

Index index_in(const json& v, Index bound, const std::string& where) {
    if (!v.is_number_integer()) throw InputError(where + ": index must be an integer");
    long long i = v.get<long long>();
    if (i < 0 || i >= static_cast<long long>(bound))
        throw InputError(where + ": index " + std::to_string(i) + " out of range [0, " + std::to_string(bound) + ")");
    return static_cast<Index>(i);
}

const json& member(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
    return j.at(key);
}

const json& array_member(const json& j, const char* key) {
    const json& a = member(j, key);
    if (!a.is_array()) throw InputError(std::string("field '") + key + "' must be an array");
    return a;
}

Field field_from_json(const json& j) {
    if (!j.contains("field")) return Field::rationals();
    const json& f = j.at("field");
    std::string type = f.is_object() && f.contains("type") && f.at("type").is_string() ? f.at("type").get<std::string>() : "";
    if (type == "Q") return Field::rationals();
    if (type == "Fp") {
        if (!f.contains("p") || !f.at("p").is_number_unsigned()) throw InputError("field Fp needs a prime 'p'");
        auto p = f.at("p").get<std::uint64_t>();
        if (!is_prime(p)) throw InputError("field modulus " + std::to_string(p) + " is not prime");
        return Field::prime(p);
    }
    throw InputError("field type must be \"Q\" or \"Fp\"");
}

ordered_json field_to_json(const Field& f) {
    ordered_json o;
    if (f.is_rational()) {
        o["type"] = "Q";
    } else {
        o["type"] = "Fp";
        o["p"] = f.modulus();
    }
    return o;
}

SVec dense_vector(const json& a, Index dim, const Field& f, const std::string& where) {
    if (!a.is_array() || a.size() != dim)
        throw InputError(where + ": expected " + std::to_string(dim) + " coefficients");
    std::vector<SVec::Entry> e;
    for (Index i = 0; i < dim; ++i) e.emplace_back(i, coefficient(a[i], f, where));
    return SVec::from_pairs(std::move(e));
}

ordered_json dense_to_json(const SVec& v, Index dim, const Field& f) {
    ordered_json a = ordered_json::array();
    for (Index i = 0; i < dim; ++i) a.push_back(f.convert(v.get(i)).to_string());
    return a;
}

}  // namespace

HopfAlgebra hopf_from_json(const json& j, const std::optional<Field>& field) {
    if (!j.is_object()) throw InputError("Hopf algebra spec must be a JSON object");
    Field f = field ? *field : field_from_json(j);
    HopfData d;
    d.name = j.contains("name") && j.at("name").is_string() ? j.at("name").get<std::string>() : "H";
    d.field = f;
    const json& basis = array_member(j, "basis");
    for (const auto& b : basis) {
        if (!b.is_string()) throw InputError("basis names must be strings");
        d.basis.push_back(b.get<std::string>());
    }
    Index dim = static_cast<Index>(d.basis.size());
    if (j.contains("dim") && (!j.at("dim").is_number_integer() || j.at("dim").get<long long>() != dim))
        throw InputError("'dim' does not match the number of basis names");
    if (dim == 0) throw InputError("empty basis");

    std::vector<std::vector<SVec::Entry>> mult(static_cast<std::size_t>(dim) * dim);
    for (const auto& t : array_member(j, "mult")) {
        if (!t.is_array() || t.size() != 4) throw InputError("mult entries must be [i, j, k, c]");
        Index a = index_in(t[0], dim, "mult"), b = index_in(t[1], dim, "mult"), k = index_in(t[2], dim, "mult");
        mult[a * dim + b].emplace_back(k, coefficient(t[3], f, "mult"));
    }
    for (auto& e : mult) d.mult.push_back(SVec::from_pairs(std::move(e)));

    d.unit = dense_vector(member(j, "unit"), dim, f, "unit");

    std::vector<std::vector<SVec::Entry>> comult(dim);
    for (const auto& t : array_member(j, "comult")) {
        if (!t.is_array() || t.size() != 4) throw InputError("comult entries must be [k, i, j, c]");
        Index k = index_in(t[0], dim, "comult"), a = index_in(t[1], dim, "comult"), b = index_in(t[2], dim, "comult");
        comult[k].emplace_back(a * dim + b, coefficient(t[3], f, "comult"));
    }
    for (auto& e : comult) d.comult.push_back(SVec::from_pairs(std::move(e)));

    SVec counit = dense_vector(member(j, "counit"), dim, f, "counit");
    for (Index i = 0; i < dim; ++i) d.counit.push_back(f.convert(counit.get(i)));

    std::vector<std::vector<SVec::Entry>> anti(dim);
    for (const auto& t : array_member(j, "antipode")) {
        if (!t.is_array() || t.size() != 3) throw InputError("antipode entries must be [i, j, c]");
        Index a = index_in(t[0], dim, "antipode"), b = index_in(t[1], dim, "antipode");
        anti[a].emplace_back(b, coefficient(t[2], f, "antipode"));
    }
    std::vector<SVec> cols;
    for (auto& e : anti) cols.push_back(SVec::from_pairs(std::move(e)));
    d.antipode = SparseMatrix(dim, std::move(cols));

    try {
        return HopfAlgebra::build(std::move(d));
    } catch (const HopfError& e) {
        throw InputError(e.what());
    }
}

ordered_json hopf_to_json(const HopfAlgebra& h) {
    const HopfData& d = h.data();
    Index dim = h.dim();
    ordered_json o;
    o["name"] = d.name;
    o["field"] = field_to_json(d.field);
    o["dim"] = dim;
    o["basis"] = d.basis;
    ordered_json mult = ordered_json::array();
    for (Index a = 0; a < dim; ++a)
        for (Index b = 0; b < dim; ++b)
            for (const auto& [k, c] : d.mult[a * dim + b].entries()) mult.push_back({a, b, k, c.to_string()});
    o["mult"] = mult;
    o["unit"] = dense_to_json(d.unit, dim, d.field);
    ordered_json comult = ordered_json::array();
    for (Index k = 0; k < dim; ++k)
        for (const auto& [ij, c] : d.comult[k].entries()) comult.push_back({k, ij / dim, ij % dim, c.to_string()});
    o["comult"] = comult;
    ordered_json counit = ordered_json::array();
    for (const Scalar& c : d.counit) counit.push_back(c.to_string());
    o["counit"] = counit;
    ordered_json anti = ordered_json::array();
    for (Index a = 0; a < dim; ++a)
        for (const auto& [b, c] : d.antipode.col(a).entries()) anti.push_back({a, b, c.to_string()});
    o["antipode"] = anti;
    return o;
}

std::vector<SVec> vectors_from_json(const json& j, Index dim, const Field& f) {
    const json& gens = array_member(j, "generators");
    std::vector<SVec> out;
    for (const auto& g : gens) out.push_back(dense_vector(g, dim, f, "generators"));
    return out;
}

ordered_json vectors_to_json(const std::vector<SVec>& v, Index dim) {
    ordered_json gens = ordered_json::array();
    for (const SVec& x : v) {
        ordered_json row = ordered_json::array();
        for (Index i = 0; i < dim; ++i) row.push_back(x.get(i).to_string());
        gens.push_back(row);
    }
    ordered_json o;
    o["generators"] = gens;
    return o;
}

FiniteGroup group_from_json(const json& j) {
    std::vector<std::string> names;
    for (const auto& e : array_member(j, "elements")) {
        if (!e.is_string()) throw InputError("group element names must be strings");
        names.push_back(e.get<std::string>());
    }
    int n = static_cast<int>(names.size());
    std::vector<std::vector<int>> table;
    const json& rows = array_member(j, "table");
    if (static_cast<int>(rows.size()) != n) throw InputError("group table must have one row per element");
    for (const auto& row : rows) {
        if (!row.is_array() || static_cast<int>(row.size()) != n) throw InputError("group table must be square");
        std::vector<int> r;
        for (const auto& x : row) r.push_back(static_cast<int>(index_in(x, static_cast<Index>(n), "table")));
        table.push_back(std::move(r));
    }
    std::string name = j.contains("name") && j.at("name").is_string() ? j.at("name").get<std::string>() : "G";
    try {
        return FiniteGroup::from_table(name, names, table);
    } catch (const GroupError& e) {
        throw InputError(e.what());
    }
}

ordered_json report_to_json(const Report& r) {
    ordered_json o;
    o["title"] = r.title();
    o["status"] = r.ok() ? "pass" : "fail";
    ordered_json checks = ordered_json::array();
    for (const Check& c : r.checks()) {
        ordered_json x;
        x["name"] = c.name;
        x["status"] = to_string(c.status);
        if (!c.detail.empty()) x["detail"] = c.detail;
        checks.push_back(x);
    }
    o["checks"] = checks;
    ordered_json tables = ordered_json::array();
    for (const auto& [name, values] : r.tables()) {
        ordered_json t;
        t["name"] = name;
        t["values"] = values;
        tables.push_back(t);
    }
    o["tables"] = tables;
    return o;
}

Report report_from_json(const json& j) {
    Report r(j.value("title", std::string()));
    for (const auto& c : array_member(j, "checks")) {
        std::string name = c.at("name").get<std::string>();
        std::string status = c.at("status").get<std::string>();
        std::string detail = c.value("detail", std::string());
        if (status == "pass")
            r.pass(name, detail);
        else if (status == "fail")
            r.fail(name, detail);
        else if (status == "skip")
            r.skip(name, detail);
        else
            throw InputError("unknown check status '" + status + "'");
    }
    for (const auto& t : array_member(j, "tables"))
        r.table(t.at("name").get<std::string>(), t.at("values").get<std::vector<std::int64_t>>());
    return r;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

}  // namespace hopfcyc

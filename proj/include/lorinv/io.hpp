// JSON exchange formats. Matrices travel as {"rows", "cols", "entries"} with
// entries in the scalar grammar; groups as {"dim", "sigma_generators",
// "sigma_invariant_gens", "involutions", "product"} plus the optional
// "cartesian_sigma_invariant_gens" consumed by the equivariants command;
// subspaces as {"ambient", "basis"}.
#pragma once

#include "lorinv/invariants.hpp"
#include "lorinv/parse.hpp"
#include "lorinv/subspaces.hpp"

#include <json.hpp>

#include <fstream>
#include <stdexcept>
#include <string>

namespace lorinv {

using Json = nlohmann::json;

class io_error : public std::runtime_error {
  public:
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

inline Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw io_error("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

inline Matrix matrix_from_json(const Json& j) {
    if (!j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw io_error("matrix record needs fields rows, cols, entries");
    std::size_t rows = j.at("rows").get<std::size_t>();
    std::size_t cols = j.at("cols").get<std::size_t>();
    const Json& e = j.at("entries");
    if (!e.is_array() || e.size() != rows)
        throw io_error("matrix record: entries must have 'rows' rows");
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!e[i].is_array() || e[i].size() != cols)
            throw io_error("matrix record: row " + std::to_string(i) + " must have 'cols' entries");
        for (std::size_t k = 0; k < cols; ++k) {
            try {
                m.at(i, k) = parse_scalar(e[i][k].get<std::string>());
            } catch (const parse_error& pe) {
                throw io_error("matrix entry [" + std::to_string(i) + "][" + std::to_string(k) +
                               "]: " + pe.what());
            }
        }
    }
    return m;
}

inline Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
        rows.push_back(row);
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

struct GroupFile {
    GroupSpec spec;
    std::vector<Poly> cartesian_sigma_invariant_gens;  // may be empty
};

inline GroupFile group_from_json(const Json& j) {
    GroupFile out;
    if (!j.contains("dim")) throw io_error("group record needs field dim");
    out.spec.dim = j.at("dim").get<std::size_t>();
    if (out.spec.dim < 2) throw io_error("group record: dim must be at least 2");
    auto poly_field = [](const Json& s, const char* field, unsigned nvars, bool cartesian) {
        try {
            return parse_poly(s.get<std::string>(), nvars, cartesian);
        } catch (const parse_error& pe) {
            throw io_error(std::string("group field ") + field + ": " + pe.what());
        }
    };
    for (const Json& g : j.value("sigma_generators", Json::array()))
        out.spec.sigma_generators.push_back(matrix_from_json(g));
    for (const Json& s : j.value("sigma_invariant_gens", Json::array()))
        out.spec.sigma_invariant_gens.push_back(
            poly_field(s, "sigma_invariant_gens", static_cast<unsigned>(out.spec.dim), false));
    for (const Json& g : j.value("involutions", Json::array()))
        out.spec.involutions.push_back(matrix_from_json(g));
    std::string product = j.value("product", "semidirect");
    if (product == "semidirect")
        out.spec.product_kind = ProductKind::Semidirect;
    else if (product == "direct")
        out.spec.product_kind = ProductKind::Direct;
    else
        throw io_error("group record: product must be 'semidirect' or 'direct'");
    for (const Json& s : j.value("cartesian_sigma_invariant_gens", Json::array()))
        out.cartesian_sigma_invariant_gens.push_back(
            poly_field(s, "cartesian_sigma_invariant_gens",
                       static_cast<unsigned>(2 * out.spec.dim), true));
    return out;
}

inline Subspace subspace_from_json(const Json& j) {
    if (!j.contains("ambient") || !j.contains("basis"))
        throw io_error("subspace record needs fields ambient, basis");
    std::size_t ambient = j.at("ambient").get<std::size_t>();
    std::vector<Vector> rows;
    std::size_t i = 0;
    for (const Json& row : j.at("basis")) {
        std::vector<Scalar> coords;
        for (const Json& e : row) {
            try {
                coords.push_back(parse_scalar(e.get<std::string>()));
            } catch (const parse_error& pe) {
                throw io_error("subspace basis row " + std::to_string(i) + ": " + pe.what());
            }
        }
        if (coords.size() != ambient) throw io_error("subspace record: basis row length mismatch");
        rows.push_back(Vector(std::move(coords)));
        ++i;
    }
    return Subspace::span(ambient, rows);
}

inline Json subspace_to_json(const Subspace& w) {
    Json basis = Json::array();
    for (const Vector& v : w.basis()) {
        Json row = Json::array();
        for (std::size_t i = 0; i < v.dim(); ++i) row.push_back(v[i].to_string());
        basis.push_back(row);
    }
    return Json{{"ambient", w.ambient_dim()}, {"basis", basis}};
}

}  // namespace lorinv

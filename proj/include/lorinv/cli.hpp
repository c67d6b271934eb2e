// The command engine behind the CLI binary. A JobRequest carries one command
// plus its inputs; run() produces a deterministic report and the exit code
// contract: 0 success, 1 input/parse error, 2 precondition violation,
// 3 undecided/unverifiable where a decision was required.
#pragma once

#include "lorinv/equivariants.hpp"
#include "lorinv/io.hpp"

#include <optional>
#include <sstream>
#include <string>

namespace lorinv {

class undecided_error : public std::runtime_error {
  public:
    explicit undecided_error(const std::string& what) : std::runtime_error(what) {}
};

enum class Command { Check, Invariants, Equivariants, Fix, Subspace, Lines, Planes, Catalog };

inline std::optional<Command> command_from_name(const std::string& name) {
    if (name == "check") return Command::Check;
    if (name == "invariants") return Command::Invariants;
    if (name == "equivariants") return Command::Equivariants;
    if (name == "fix") return Command::Fix;
    if (name == "subspace") return Command::Subspace;
    if (name == "lines") return Command::Lines;
    if (name == "planes") return Command::Planes;
    if (name == "catalog") return Command::Catalog;
    return std::nullopt;
}

struct JobRequest {
    Command command = Command::Check;
    std::string group_path;
    std::string matrix_path;
    std::string subspace_path;
    unsigned degree = 0;  // 0 = per-step default
    std::optional<Rational> t;
    std::optional<Rational> u;
    std::optional<Rational> u2;
    std::optional<Rational> r;
    std::string kind;  // catalog element selector
    std::size_t dim = 3;
    bool structured = false;  // --format structured
};

struct JobResult {
    int exit_code = 0;
    std::string report;
};

namespace detail {

inline Matrix instantiate(const Matrix& m, const std::optional<Rational>& t,
                          const std::optional<Rational>& u) {
    if (!t && !u) return m;
    if (!t) {
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (m.at(i, j).has_hyperbolic())
                    throw std::domain_error(
                        "matrix has hyperbolic symbols; supply --t alongside --u");
    }
    Matrix out(m.rows(), m.cols());
    Rational tv = t.value_or(Rational(1));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out.at(i, j) = Scalar(m.at(i, j).evaluate(tv, u));
    return out;
}

inline Json line_item_json(const LineItem& li) {
    Json j;
    j["kind"] = li.is_family ? "family" : "line";
    j[li.is_family ? "carrier" : "space"] = subspace_to_json(li.space);
    j["type"] = li.type ? to_string(*li.type) : "undecided";
    return j;
}

inline Json plane_item_json(const PlaneItem& pi) {
    Json j;
    j["kind"] = pi.is_family ? "family" : "plane";
    j[pi.is_family ? "axis" : "space"] = subspace_to_json(pi.space);
    if (pi.is_family) {
        j["axis_type"] = pi.type ? to_string(*pi.type) : "undecided";
        if (pi.type) {
            Json types = Json::array();
            for (CausalType t : plane_types_through_axis(*pi.type)) types.push_back(to_string(t));
            j["plane_types"] = types;
        }
    } else {
        j["type"] = pi.type ? to_string(*pi.type) : "undecided";
    }
    return j;
}

inline std::string emit(const Json& record, bool structured) {
    if (structured) return record.dump(2) + "\n";
    std::ostringstream os;
    // flat deterministic text rendering
    struct R {
        std::ostringstream& os;
        void walk(const Json& j, const std::string& prefix) {
            if (j.is_object()) {
                for (auto it = j.begin(); it != j.end(); ++it)
                    walk(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
            } else if (j.is_array()) {
                std::size_t i = 0;
                for (const Json& e : j) walk(e, prefix + "[" + std::to_string(i++) + "]");
                if (j.empty()) os << prefix << ": []\n";
            } else if (j.is_string()) {
                os << prefix << ": " << j.get<std::string>() << "\n";
            } else {
                os << prefix << ": " << j.dump() << "\n";
            }
        }
    } r{os};
    r.walk(record, "");
    return os.str();
}

inline Rational parse_cli_rational(const std::string& s) {
    Scalar v = parse_scalar(s);
    auto r = v.rational_value();
    if (!r) throw io_error("expected a rational value, got: " + s);
    return *r;
}

inline Json run_check(const JobRequest& req) {
    Matrix m = matrix_from_json(load_json_file(req.matrix_path));
    m = instantiate(m, req.t, req.u);
    Json out;
    if (!m.is_square()) {
        out["lorentz"] = false;
        return out;
    }
    bool lor = is_lorentz(m);
    out["lorentz"] = lor;
    if (lor) {
        try {
            out["component"] = to_string(classify_component(m));
        } catch (const std::domain_error& e) {
            throw undecided_error(e.what());
        }
    }
    return out;
}

inline Json run_invariants(const JobRequest& req) {
    GroupFile gf = group_from_json(load_json_file(req.group_path));
    std::vector<Poly> gens = algorithm_generators(gf.spec, req.degree);
    Json out;
    Json list = Json::array();
    for (const Poly& g : gens) list.push_back(g.to_string());
    out["generators"] = list;
    out["warnings"] = Json::array();
    return out;
}

inline Json run_equivariants(const JobRequest& req) {
    GroupFile gf = group_from_json(load_json_file(req.group_path));
    if (gf.cartesian_sigma_invariant_gens.empty())
        throw std::domain_error(
            "equivariants needs cartesian_sigma_invariant_gens in the group file (generators of "
            "the base invariants on the doubled space)");
    GroupSpec doubled;
    doubled.dim = 2 * gf.spec.dim;
    doubled.doubled_metric = true;
    for (const Matrix& g : gf.spec.sigma_generators)
        doubled.sigma_generators.push_back(diagonal_lift(g));
    for (const Matrix& d : gf.spec.involutions) doubled.involutions.push_back(diagonal_lift(d));
    doubled.sigma_invariant_gens = gf.cartesian_sigma_invariant_gens;
    doubled.product_kind = gf.spec.product_kind;
    std::vector<Poly> cart = algorithm_generators(doubled, req.degree);
    std::vector<PolyMap> maps = module_generators(cart, gf.spec.all_generators());
    Json out;
    Json list = Json::array();
    for (const PolyMap& m : maps) {
        Json comps = Json::array();
        for (const Poly& c : m.components()) comps.push_back(c.to_string());
        list.push_back(comps);
    }
    out["module_generators"] = list;
    out["warnings"] = Json::array();
    return out;
}

inline Json run_fix(const JobRequest& req) {
    GroupFile gf = group_from_json(load_json_file(req.group_path));
    gf.spec.validate();
    std::vector<Matrix> gens = gf.spec.all_generators();
    Subspace fix = gens.empty() ? Subspace::full(gf.spec.dim) : fix_subspace(gens);
    Json out;
    out["fix"] = subspace_to_json(fix);
    return out;
}

inline Json run_subspace(const JobRequest& req) {
    Subspace w = subspace_from_json(load_json_file(req.subspace_path));
    Json out;
    out["dim"] = w.dim();
    try {
        out["type"] = to_string(subspace_type(w));
    } catch (const std::domain_error& e) {
        throw undecided_error(e.what());
    }
    out["nondegenerate"] = is_nondegenerate(w);
    if (!req.group_path.empty()) {
        GroupFile gf = group_from_json(load_json_file(req.group_path));
        gf.spec.validate();
        std::vector<Matrix> gens = gf.spec.all_generators();
        out["complement"] = subspace_to_json(invariant_complement(w, gens));
        out["fix"] = subspace_to_json(fix_subspace(gens));
    } else {
        out["complement"] = subspace_to_json(orthogonal_complement(w));
    }
    return out;
}

inline Json run_lines(const JobRequest& req) {
    Matrix m = matrix_from_json(load_json_file(req.matrix_path));
    m = instantiate(m, req.t, req.u);
    InvariantLines lines = invariant_lines(m);
    Json out;
    Json items = Json::array();
    for (const LineItem& li : lines.items) items.push_back(line_item_json(li));
    out["lines"] = items;
    if (!lines.decided()) {
        out["unresolved_factor"] = unipoly_to_string(*lines.unresolved);
        throw undecided_error("eigen-structure not fully decidable: " + out.dump());
    }
    return out;
}

inline Json run_planes(const JobRequest& req) {
    Matrix m = matrix_from_json(load_json_file(req.matrix_path));
    m = instantiate(m, req.t, req.u);
    InvariantPlanes planes = invariant_planes(m);
    Json out;
    Json items = Json::array();
    for (const PlaneItem& pi : planes.items) items.push_back(plane_item_json(pi));
    out["planes"] = items;
    if (!planes.decided()) {
        out["unresolved_factor"] = unipoly_to_string(*planes.unresolved);
        throw undecided_error("eigen-structure not fully decidable: " + out.dump());
    }
    return out;
}

inline Json run_catalog(const JobRequest& req) {
    Json out;
    Json warnings = Json::array();
    const std::string& kind = req.kind;
    auto angle_from = [&](const std::optional<Rational>& u, const char* flag) {
        if (!u) throw std::domain_error(std::string("catalog kind needs ") + flag);
        return circle_point(*u);
    };
    auto hyper_from = [&]() {
        if (!req.t) throw std::domain_error("catalog kind needs --t");
        return hyperbolic_point(*req.t);
    };
    if (kind == "lambda_p" || kind == "lambda_t" || kind == "lambda_pt") {
        if (req.dim < 2) throw std::domain_error("catalog: --dim must be at least 2");
        Matrix m = kind == "lambda_p"   ? lambda_p(req.dim)
                   : kind == "lambda_t" ? lambda_t(req.dim)
                                        : lambda_pt(req.dim);
        out["matrix"] = matrix_to_json(m);
    } else if (kind == "h_theta") {
        HyperbolicPair h = req.t ? hyperbolic_point(*req.t) : hyperbolic_symbolic();
        out["matrix"] = matrix_to_json(hyperbolic_rotation_2d(h));
    } else if (kind == "h_plus" || kind == "h_minus") {
        CirclePair varphi = angle_from(req.u, "--u");
        CirclePair phi = angle_from(req.u2, "--u2");
        HyperbolicPair h = req.t ? hyperbolic_point(*req.t) : hyperbolic_symbolic();
        Matrix m = kind == "h_plus" ? h_plus(varphi, h, phi) : h_minus(varphi, h, phi);
        out["matrix"] = matrix_to_json(m);
        if (m.is_rational()) out["component"] = to_string(classify_component(m));
    } else if (kind == "conjugacy") {
        CirclePair phi = angle_from(req.u, "--u");
        if (!req.r) throw std::domain_error("catalog kind conjugacy needs --r");
        Matrix m = conjugacy_matrix_3d(phi, *req.r);
        out["matrix"] = matrix_to_json(m);
        out["lorentz"] = is_lorentz(m);
    } else if (kind == "fix_hplus" || kind == "fix_lambdapt") {
        CirclePair varphi = angle_from(req.u, "--u");
        CirclePair phi = angle_from(req.u2, "--u2");
        HyperbolicPair h = hyper_from();
        FixLineResult fl = fix_line_catalog(
            kind == "fix_hplus" ? FixLineKind::Hplus : FixLineKind::LambdaPtHplus, varphi, h, phi);
        out["fix_line"] = subspace_to_json(fl.fixed_line);
        out["vector"] = fl.vector.to_string();
        out["catalog_confirmed"] = fl.catalog_confirmed;
        if (!fl.catalog_confirmed)
            warnings.push_back("catalog fix-line formula disagrees with the kernel oracle");
    } else {
        throw io_error(
            "unknown catalog kind (expected lambda_p, lambda_t, lambda_pt, h_theta, h_plus, "
            "h_minus, conjugacy, fix_hplus, fix_lambdapt)");
    }
    out["warnings"] = warnings;
    return out;
}

}  // namespace detail

inline JobResult run(const JobRequest& req) {
    JobResult res;
    try {
        Json record;
        switch (req.command) {
            case Command::Check: record = detail::run_check(req); break;
            case Command::Invariants: record = detail::run_invariants(req); break;
            case Command::Equivariants: record = detail::run_equivariants(req); break;
            case Command::Fix: record = detail::run_fix(req); break;
            case Command::Subspace: record = detail::run_subspace(req); break;
            case Command::Lines: record = detail::run_lines(req); break;
            case Command::Planes: record = detail::run_planes(req); break;
            case Command::Catalog: record = detail::run_catalog(req); break;
        }
        res.report = detail::emit(record, req.structured);
        res.exit_code = 0;
    } catch (const parse_error& e) {
        res.report = std::string("error: ") + e.what() + "\n";
        res.exit_code = 1;
    } catch (const io_error& e) {
        res.report = std::string("error: ") + e.what() + "\n";
        res.exit_code = 1;
    } catch (const undecided_error& e) {
        res.report = std::string("undecided: ") + e.what() + "\n";
        res.exit_code = 3;
    } catch (const std::domain_error& e) {
        res.report = std::string("precondition violated: ") + e.what() + "\n";
        res.exit_code = 2;
    }
    return res;
}

}  // namespace lorinv

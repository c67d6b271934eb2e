// Command-line front-end: parses flags into a JobRequest and prints the
// deterministic report produced by the library.
#include "lorinv/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

namespace {

struct RawOptions {
    std::string group, matrix, subspace, format = "text", kind;
    unsigned degree = 0;
    std::size_t dim = 3;
    std::string t, u, u2, r;
};

void add_common(CLI::App* cmd, RawOptions& raw) {
    cmd->add_option("--group", raw.group, "group description file (JSON)");
    cmd->add_option("--matrix", raw.matrix, "matrix file (JSON)");
    cmd->add_option("--subspace", raw.subspace, "subspace file (JSON)");
    cmd->add_option("--degree", raw.degree, "degree bound for generator pruning");
    cmd->add_option("--t", raw.t, "hyperbolic parameter point t > 0");
    cmd->add_option("--u", raw.u, "angular parameter point u");
    cmd->add_option("--u2", raw.u2, "second angular parameter point");
    cmd->add_option("--r", raw.r, "half-parameter r (the full parameter sits at t = r^2)");
    cmd->add_option("--kind", raw.kind, "catalog element kind");
    cmd->add_option("--dim", raw.dim, "ambient dimension for catalog elements");
    cmd->add_option("--format", raw.format, "output format: text or structured")
        ->check(CLI::IsMember({"text", "structured"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariant theory on Minkowski space"};
    app.require_subcommand(1);

    RawOptions raw;
    for (const char* name : {"check", "invariants", "equivariants", "fix", "subspace", "lines",
                             "planes", "catalog"}) {
        add_common(app.add_subcommand(name), raw);
    }

    CLI11_PARSE(app, argc, argv);

    lorinv::JobRequest req;
    req.command = *lorinv::command_from_name(app.get_subcommands().front()->get_name());
    req.group_path = raw.group;
    req.matrix_path = raw.matrix;
    req.subspace_path = raw.subspace;
    req.degree = raw.degree;
    req.kind = raw.kind;
    req.dim = raw.dim;
    req.structured = raw.format == "structured";
    try {
        if (!raw.t.empty()) req.t = lorinv::detail::parse_cli_rational(raw.t);
        if (!raw.u.empty()) req.u = lorinv::detail::parse_cli_rational(raw.u);
        if (!raw.u2.empty()) req.u2 = lorinv::detail::parse_cli_rational(raw.u2);
        if (!raw.r.empty()) req.r = lorinv::detail::parse_cli_rational(raw.r);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    lorinv::JobResult res = lorinv::run(req);
    if (res.exit_code == 0)
        std::cout << res.report;
    else
        std::cerr << res.report;
    return res.exit_code;
}

#include "skein/cli.hpp"

#include "skein/expr.hpp"
#include "skein/lens_4k.hpp"
#include "skein/s2xs1.hpp"
#include "skein/sweeps.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>

namespace skein {

namespace {

using Json = nlohmann::ordered_json;

struct ManifoldArgs {
    std::string manifold;
    int beta1 = 1;
    std::optional<int> beta2;
    std::string format = "text";
};

void add_manifold_options(CLI::App* cmd, ManifoldArgs& a) {
    cmd->add_option("--manifold", a.manifold, "lens-p2, lens-4k or s2xs1")
        ->required()
        ->check(CLI::IsMember({"lens-p2", "lens-4k", "s2xs1"}));
    cmd->add_option("--beta1", a.beta1, "odd integer")->required();
    cmd->add_option("--beta2", a.beta2, "odd integer (lens-4k; s2xs1 implies -beta1)");
    cmd->add_option("--format", a.format)->check(CLI::IsMember({"text", "json"}));
}

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

TwoFiberParams two_fiber(const ManifoldArgs& a) {
    if (a.manifold == "lens-4k") {
        if (!a.beta2) throw UsageError("lens-4k needs --beta2");
        TwoFiberParams p = TwoFiberParams::from_betas(a.beta1, *a.beta2);
        if (p.nu0 == -1) throw UsageError("beta1 + beta2 = 0 describes S^2xS^1; use --manifold s2xs1");
        return p;
    }
    if (a.beta2 && *a.beta2 != -a.beta1) throw UsageError("s2xs1 requires beta2 = -beta1");
    return s2xs1_params(a.beta1);
}

Json params_json(const ManifoldArgs& a) {
    Json p;
    if (a.manifold == "lens-p2") {
        const Nu1Context c = Nu1Context::from_beta1(a.beta1);
        p["beta1"] = c.beta1;
        p["nu1"] = c.nu1;
        return p;
    }
    const TwoFiberParams t = two_fiber(a);
    p["beta1"] = t.beta1;
    p["beta2"] = t.beta2;
    p["nu1"] = t.nu1;
    p["nu2"] = t.nu2;
    p["nu0"] = t.nu0;
    p["k"] = t.k;
    return p;
}

std::string manifold_name(const ManifoldArgs& a) {
    if (a.manifold == "lens-p2") return manifold_params(a.beta1).name;
    const TwoFiberParams t = two_fiber(a);
    return manifold_params(t.beta1, t.beta2).name;
}

std::string pp_label(int n, bool x) { return (x ? "x*l^" : "l^") + std::to_string(n); }

Json reduce_one(const ManifoldArgs& a, const std::string& text) {
    Json j;
    j["manifold"] = manifold_name(a);
    j["params"] = params_json(a);
    j["basis"] = Json::array();
    j["coords"] = Json::array();
    j["torsion"] = Json::array();
    auto coord = [&j](const std::string& label, const Laurent& c) {
        j["basis"].push_back(label);
        j["coords"].push_back(Json{{"basis", label}, {"coeff", c.str()}});
    };
    if (a.manifold == "lens-p2") {
        const Nu1Context ctx = Nu1Context::from_beta1(a.beta1);
        const LambdaBasisVector v = kbsm_class_p2(parse_expression(text, ctx), a.beta1);
        for (int n = 0; n < v.kappa; ++n) coord(pp_label(n, false), v.coords[n]);
    } else if (a.manifold == "lens-4k") {
        const TwoFiberParams p = two_fiber(a);
        const SigmaPPVector v = kbsm_class_4k(parse_expression(text, p.fiber1()), p.beta1, p.beta2);
        for (size_t n = 0; n < v.coords0.size(); ++n) coord(pp_label(n, false), v.coords0[n]);
        for (size_t n = 0; n < v.coords1.size(); ++n) coord(pp_label(n, true), v.coords1[n]);
    } else {
        const TwoFiberParams p = two_fiber(a);
        const CyclicDecomposition d = kbsm_class_s2xs1(parse_expression(text, p.fiber1()), p.beta1);
        coord("phi(0)", d.free_part);
        for (const auto& [i, r] : d.phi_torsion)
            j["torsion"].push_back(Json{{"gen", "phi(" + std::to_string(i) + ")"},
                                        {"modulus", r.modulus},
                                        {"residue", r.residue.str()}});
        for (const auto& [i, r] : d.psi_torsion)
            j["torsion"].push_back(Json{{"gen", "psi(" + std::to_string(i - 1) + ")"},
                                        {"modulus", r.modulus},
                                        {"residue", r.residue.str()}});
    }
    return j;
}

void print_text(const Json& j, std::ostream& out) {
    out << "manifold: " << j["manifold"].get<std::string>() << "\n";
    out << "params:";
    for (const auto& [k, v] : j["params"].items()) out << " " << k << "=" << v.dump();
    out << "\n";
    if (j.contains("rank")) out << "rank: " << j["rank"].dump() << "\n";
    if (j.contains("rank_check")) out << "rank cross-check: " << j["rank_check"].dump() << "\n";
    if (!j["basis"].empty()) {
        out << "basis:";
        bool first = true;
        for (const auto& b : j["basis"]) {
            out << (first ? " " : ", ") << b.get<std::string>();
            first = false;
        }
        out << "\n";
    }
    for (const auto& c : j["coords"])
        out << "  " << c["basis"].get<std::string>() << ": " << c["coeff"].get<std::string>() << "\n";
    for (const auto& t : j["torsion"])
        out << "  " << t["gen"].get<std::string>() << " mod (1-A^" << t["modulus"].dump()
            << "): " << t["residue"].get<std::string>() << "\n";
}

void emit(const Json& j, const std::string& format, std::ostream& out) {
    if (format == "json")
        out << j.dump() << "\n";
    else
        print_text(j, out);
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") != std::string::npos) lines.push_back(line);
    }
    return lines;
}

Json basis_report(const ManifoldArgs& a, int max_index) {
    Json j;
    j["manifold"] = manifold_name(a);
    j["params"] = params_json(a);
    j["basis"] = Json::array();
    j["coords"] = Json::array();
    j["torsion"] = Json::array();
    if (a.manifold == "lens-p2") {
        const LensBasis b = basis_p2(a.beta1);
        for (const auto& l : b.labels) j["basis"].push_back(l);
        j["rank"] = b.rank;
        j["rank_check"] = std::abs(a.beta1) / 2 + 1;
    } else if (a.manifold == "lens-4k") {
        const TwoFiberParams p = two_fiber(a);
        const auto [l0, l1] = sigma_pp_shape(p);
        for (int n = 0; n < l0; ++n) j["basis"].push_back(pp_label(n, false));
        for (int n = 0; n < l1; ++n) j["basis"].push_back(pp_label(n, true));
        j["rank"] = l0 + l1;
        j["rank_check"] = 2 * std::abs(p.k) + 1;
    } else {
        two_fiber(a);
        for (const auto& f : cyclic_census(max_index)) {
            if (f.modulus == 0) {
                j["basis"].push_back(f.generator);
                continue;
            }
            j["torsion"].push_back(Json{{"gen", f.generator}, {"modulus", f.modulus}, {"residue", "1"}});
        }
    }
    return j;
}

int run_verify(const std::string& suite, std::optional<int> range, std::ostream& out) {
    std::vector<std::string> suites;
    if (suite == "all")
        suites = {"families", "sigma", "star", "starstar", "torsion"};
    else
        suites = {suite};
    std::optional<int> env_range;
    if (const char* e = std::getenv("SKEIN_VERIFY_RANGE"); e && *e) {
        try {
            env_range = std::stoi(e);
        } catch (const std::exception&) {
            throw UsageError("SKEIN_VERIFY_RANGE must be an integer");
        }
    }
    bool ok = true;
    for (const auto& s : suites) {
        const int r = range ? *range : env_range ? *env_range : default_range(s);
        if (r < 0) throw UsageError("range must be nonnegative");
        const auto start = std::chrono::steady_clock::now();
        SweepReport rep;
        if (s == "families") rep = sweep_families(r);
        if (s == "sigma") rep = sweep_sigma(r);
        if (s == "star") rep = sweep_star(r);
        if (s == "starstar") rep = sweep_starstar(r);
        if (s == "torsion") rep = sweep_torsion(r);
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out << "[" << s << "] range " << r << "\n";
        for (const auto& l : rep.lines)
            out << "  " << (l.ok() ? "ok  " : "FAIL") << " " << l.name << ": " << l.passed << "/"
                << l.total << "\n";
        out << "  " << (rep.ok() ? "passed" : "FAILED") << " in " << secs << " s\n";
        ok = ok && rep.ok();
    }
    return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Kauffman bracket skein module normal forms", "skein"};
    app.require_subcommand(1);

    ManifoldArgs red;
    std::string expression, file;
    auto* reduce = app.add_subcommand("reduce", "coordinates of an expression");
    add_manifold_options(reduce, red);
    reduce->add_option("--file", file, "one expression per line");
    reduce->add_option("expression", expression);

    std::string suite = "all";
    std::optional<int> range;
    auto* verify = app.add_subcommand("verify", "run identity sweeps");
    verify->add_option("--suite", suite)
        ->check(CLI::IsMember({"families", "sigma", "star", "starstar", "torsion", "all"}));
    verify->add_option("--range", range, "primary index bound");

    ManifoldArgs bas;
    int max_index = 3;
    auto* basis = app.add_subcommand("basis", "basis or generating set");
    add_manifold_options(basis, bas);
    basis->add_option("--max-index", max_index)->check(CLI::NonNegativeNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*reduce) {
            std::vector<std::string> exprs;
            if (!file.empty()) exprs = read_lines(file);
            if (!expression.empty()) exprs.push_back(expression);
            if (exprs.empty()) throw UsageError("no expression given");
            for (const auto& e : exprs) emit(reduce_one(red, e), red.format, out);
            return kExitOk;
        }
        if (*basis) {
            emit(basis_report(bas, max_index), bas.format, out);
            return kExitOk;
        }
        return run_verify(suite, range, out);
    } catch (const ParseError& e) {
        err << "parse error " << e.what() << "\n";
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
    }
    return kExitUsage;
}

}  // namespace skein

// Command-line front end for the hexcsl shared library.
//
// All functionality goes through the C API; this translator only parses
// flags, assembles request JSON, and prints results.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "hexcsl/hexcsl.h"

namespace {

using nlohmann::json;

constexpr const char* kUnitLegend =
    "unit encoding: k in 0..5 stands for (1+xi)^k, i.e. "
    "0=1, 1=-xi^2, 2=xi, 3=-1, 4=xi^2, 5=-xi";

struct CtxGuard {
    hexcsl_ctx* ctx = hexcsl_ctx_new();
    ~CtxGuard() { hexcsl_ctx_free(ctx); }
};

struct StrGuard {
    char* s = nullptr;
    ~StrGuard() { hexcsl_string_free(s); }
};

int fail(hexcsl_ctx* ctx, hexcsl_status st) {
    std::cerr << "error: " << hexcsl_last_error(ctx) << "\n";
    return static_cast<int>(st);
}

std::pair<std::string, std::string> split_pair(const std::string& text, const char* what) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError(std::string(what) + " must be two comma-separated values");
    return {text.substr(0, comma), text.substr(comma + 1)};
}

json isometry_json(const std::string& z, int eps, bool reflect) {
    auto [m, n] = split_pair(z, "--z");
    return json{{"z", {{"m", m}, {"n", n}}}, {"eps", eps}, {"reflect", reflect}};
}

json rational_shift_json(const std::string& shift) {
    auto [a, b] = split_pair(shift, "--shift");
    return json{{"kind", "rational"}, {"a", a}, {"b", b}};
}

int write_output(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return 0;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open " << out_path << " for writing\n";
        return 1;
    }
    f << content;
    return 0;
}

// "z" fields in --z may carry big integers; keep them as strings in the
// request so nothing is truncated on the way to the library.

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hexcsl: coincidence site lattices of the hexagonal lattice,\n"
                 "shifted hexagonal lattices, and the hexagonal packing (exact arithmetic)"};
    app.require_subcommand(1);
    app.footer(kUnitLegend);

    CtxGuard guard;
    hexcsl_ctx* ctx = guard.ctx;

    // factor
    std::string factor_z;
    auto* cmd_factor = app.add_subcommand("factor", "factor m,n into canonical primes");
    cmd_factor->add_option("--z", factor_z, "element as m,n")->required();

    // enumerate
    long max_index = 7;
    std::string format = "csv";
    auto* cmd_enumerate = app.add_subcommand("enumerate", "table of CSLs up to an index bound");
    cmd_enumerate->add_option("--max-index", max_index, "largest coincidence index")->required();
    cmd_enumerate->add_option("--format", format, "csv or json")->capture_default_str();

    // count
    long count_m = 0, count_max = 0;
    auto* cmd_count = app.add_subcommand("count", "CSL and rotation counts per index");
    auto* opt_m = cmd_count->add_option("--m", count_m, "single index m");
    auto* opt_max = cmd_count->add_option("--max", count_max, "list f(1..max)");
    opt_m->excludes(opt_max);

    // shift
    std::string shift_pair, shift_class, shift_a, shift_b;
    long p1 = 0, q1 = 1, p2 = 0, q2 = 1;
    auto* cmd_shift = app.add_subcommand("shift", "coincidence group of a shifted lattice x+Gamma");
    cmd_shift->add_option("--shift", shift_pair, "rational shift a,b (e.g. 2/3,1/3)");
    cmd_shift->add_option("--shift-class", shift_class,
                          "irrational-a | irrational-b | both-independent | affinely-related");
    cmd_shift->add_option("--a", shift_a, "rational a (irrational-b class)");
    cmd_shift->add_option("--b", shift_b, "rational b (irrational-a class)");
    cmd_shift->add_option("--p1", p1, "a = p1/q1 + (p2/q2) b");
    cmd_shift->add_option("--q1", q1, "");
    cmd_shift->add_option("--p2", p2, "");
    cmd_shift->add_option("--q2", q2, "");

    // csl
    std::string csl_z = "1,0", csl_shift;
    int csl_eps = 0;
    bool csl_reflect = false;
    auto* cmd_csl = app.add_subcommand("csl", "CSL of one isometry (optionally of a shifted lattice)");
    cmd_csl->add_option("--z", csl_z, "numerator as m,n")->required();
    cmd_csl->add_option("--eps", csl_eps, "unit exponent k in 0..5")->capture_default_str();
    cmd_csl->add_flag("--reflect", csl_reflect, "compose with the real-axis reflection");
    cmd_csl->add_option("--shift", csl_shift, "rational shift a,b");

    // packing
    std::string pack_z = "1,0";
    int pack_eps = 0;
    bool pack_reflect = false, pack_shifted = false;
    auto* cmd_packing = app.add_subcommand("packing", "coincidence of the hexagonal packing");
    cmd_packing->add_option("--z", pack_z, "numerator as m,n")->required();
    cmd_packing->add_option("--eps", pack_eps, "unit exponent k in 0..5")->capture_default_str();
    cmd_packing->add_flag("--reflect", pack_reflect, "compose with the real-axis reflection");
    cmd_packing->add_flag("--shifted", pack_shifted, "recenter the packing on a hexagon center");

    // render
    std::string scene = "honeycomb", render_radius = "6", render_z, render_shift, out_path;
    int render_eps = 0;
    bool render_reflect = false, fundamental = false;
    double scale = 28.0, point_radius = 3.0;
    auto* cmd_render = app.add_subcommand("render", "deterministic SVG figure");
    cmd_render->add_option("--scene", scene,
                           "lattice | shifted-lattice | honeycomb | csl-overlay | csml-overlay")
        ->capture_default_str();
    cmd_render->add_option("--radius", render_radius, "view radius (rational)")->capture_default_str();
    cmd_render->add_option("--z", render_z, "numerator as m,n (overlay scenes)");
    cmd_render->add_option("--eps", render_eps, "unit exponent k in 0..5");
    cmd_render->add_flag("--reflect", render_reflect, "compose with the real-axis reflection");
    cmd_render->add_option("--shift", render_shift, "rational shift a,b");
    cmd_render->add_flag("--fundamental-domain", fundamental, "overlay the fundamental domain");
    cmd_render->add_option("--scale", scale, "pixels per lattice unit")->capture_default_str();
    cmd_render->add_option("--point-radius", point_radius, "point radius in pixels")
        ->capture_default_str();
    cmd_render->add_option("--out", out_path, "output file (stdout when omitted)");

    // verify
    long norm_bound = 50, radius = 15;
    bool verify_json = false;
    auto* cmd_verify = app.add_subcommand("verify", "closed forms vs the brute-force oracle");
    cmd_verify->add_option("--norm-bound", norm_bound, "largest numerator norm")->capture_default_str();
    cmd_verify->add_option("--radius", radius, "patch radius for point-set checks")
        ->capture_default_str();
    cmd_verify->add_flag("--json", verify_json, "emit the JSON report instead of text lines");

    CLI11_PARSE(app, argc, argv);

    if (*cmd_factor) {
        auto [m, n] = split_pair(factor_z, "--z");
        StrGuard out;
        hexcsl_status st = hexcsl_factor(ctx, m.c_str(), n.c_str(), &out.s);
        if (st != HEXCSL_OK) return fail(ctx, st);
        std::cout << out.s << "\n";
        return 0;
    }

    if (*cmd_enumerate) {
        StrGuard out;
        hexcsl_status st = hexcsl_enumerate(ctx, max_index, format.c_str(), &out.s);
        if (st != HEXCSL_OK) return fail(ctx, st);
        std::cout << out.s;
        if (format == "json") std::cout << "\n";
        return 0;
    }

    if (*cmd_count) {
        StrGuard out;
        hexcsl_status st;
        if (*opt_max) st = hexcsl_dirichlet(ctx, count_max, &out.s);
        else if (*opt_m) st = hexcsl_count(ctx, count_m, &out.s);
        else {
            std::cerr << "error: count needs --m or --max\n";
            return 2;
        }
        if (st != HEXCSL_OK) return fail(ctx, st);
        std::cout << out.s << "\n";
        return 0;
    }

    if (*cmd_shift) {
        json req;
        if (!shift_pair.empty()) {
            req = rational_shift_json(shift_pair);
        } else if (shift_class == "irrational-a") {
            req = json{{"kind", "irrational-a"}, {"b", shift_b.empty() ? "0" : shift_b}};
        } else if (shift_class == "irrational-b") {
            req = json{{"kind", "irrational-b"}, {"a", shift_a.empty() ? "0" : shift_a}};
        } else if (shift_class == "both-independent") {
            req = json{{"kind", "both-independent"}};
        } else if (shift_class == "affinely-related") {
            req = json{{"kind", "affinely-related"}, {"p1", p1}, {"q1", q1}, {"p2", p2}, {"q2", q2}};
        } else {
            std::cerr << "error: shift needs --shift a,b or a valid --shift-class\n";
            return 2;
        }
        StrGuard out;
        hexcsl_status st = hexcsl_shift_describe(ctx, req.dump().c_str(), &out.s);
        if (st != HEXCSL_OK) return fail(ctx, st);
        std::cout << out.s << "\n";
        return 0;
    }

    if (*cmd_csl) {
        json iso = isometry_json(csl_z, csl_eps, csl_reflect);
        std::string shift;
        if (!csl_shift.empty()) shift = rational_shift_json(csl_shift).dump();
        StrGuard out;
        hexcsl_status st = hexcsl_csl(ctx, iso.dump().c_str(),
                                      shift.empty() ? nullptr : shift.c_str(), &out.s);
        if (st != HEXCSL_OK) return fail(ctx, st);
        std::cout << out.s << "\n";
        return 0;
    }

    if (*cmd_packing) {
        json iso = isometry_json(pack_z, pack_eps, pack_reflect);
        StrGuard out;
        hexcsl_status st = hexcsl_packing(ctx, iso.dump().c_str(), pack_shifted ? 1 : 0, &out.s);
        if (st != HEXCSL_OK) return fail(ctx, st);
        std::cout << out.s << "\n";
        return 0;
    }

    if (*cmd_render) {
        json req{{"scene", scene},
                 {"radius", render_radius},
                 {"fundamental_domain", fundamental},
                 {"scale", scale},
                 {"point_radius", point_radius}};
        if (!render_z.empty()) req["rotation"] = isometry_json(render_z, render_eps, render_reflect);
        if (!render_shift.empty()) req["shift"] = rational_shift_json(render_shift);
        StrGuard out;
        hexcsl_status st = hexcsl_render(ctx, req.dump().c_str(), &out.s);
        if (st != HEXCSL_OK) return fail(ctx, st);
        return write_output(out.s, out_path);
    }

    if (*cmd_verify) {
        StrGuard out;
        int passed = 0;
        hexcsl_status st = hexcsl_verify(ctx, norm_bound, radius, &out.s, &passed);
        if (st != HEXCSL_OK) return fail(ctx, st);
        if (verify_json) {
            std::cout << out.s << "\n";
        } else {
            json rep = json::parse(out.s);
            for (const auto& r : rep["reports"]) {
                std::cout << (r["pass"].get<bool>() ? "[PASS] " : "[FAIL] ")
                          << r["name"].get<std::string>() << ": " << r["observed"].get<std::string>()
                          << " (" << r["context"].get<std::string>() << ")\n";
            }
            std::cout << (passed ? "all checks passed\n" : "SOME CHECKS FAILED\n");
        }
        return passed ? 0 : 1;
    }

    return 2;
}

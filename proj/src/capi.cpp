#include "hexcsl/hexcsl.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "json_io.hpp"
#include "multilattice.hpp"
#include "oracle.hpp"
#include "render.hpp"
#include "shifted.hpp"

struct hexcsl_ctx {
    std::string last_error;
};

namespace {

using namespace hexcsl;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
hexcsl_status guarded(hexcsl_ctx* ctx, Fn&& fn) {
    if (!ctx) return HEXCSL_ERR_INVALID_ARGUMENT;
    ctx->last_error.clear();
    try {
        return fn();
    } catch (const Json::exception& e) {
        ctx->last_error = e.what();
        return HEXCSL_ERR_PARSE;
    } catch (const std::invalid_argument& e) {
        ctx->last_error = e.what();
        return HEXCSL_ERR_INVALID_ARGUMENT;
    } catch (const std::domain_error& e) {
        ctx->last_error = e.what();
        return HEXCSL_ERR_DOMAIN;
    } catch (const std::exception& e) {
        ctx->last_error = e.what();
        return HEXCSL_ERR_INTERNAL;
    }
}

hexcsl_status emit(char** out, const std::string& s) {
    *out = dup_string(s);
    return *out ? HEXCSL_OK : HEXCSL_ERR_INTERNAL;
}

hexcsl_status require(hexcsl_ctx* ctx, bool ok, const char* message) {
    if (ok) return HEXCSL_OK;
    if (ctx) ctx->last_error = message;
    return HEXCSL_ERR_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* hexcsl_version(void) { return "0.1.0"; }

hexcsl_ctx* hexcsl_ctx_new(void) { return new (std::nothrow) hexcsl_ctx; }

void hexcsl_ctx_free(hexcsl_ctx* ctx) { delete ctx; }

const char* hexcsl_last_error(const hexcsl_ctx* ctx) {
    return ctx ? ctx->last_error.c_str() : "null context";
}

void hexcsl_string_free(char* s) { std::free(s); }

hexcsl_status hexcsl_factor(hexcsl_ctx* ctx, const char* m, const char* n, char** json_out) {
    if (require(ctx, m && n && json_out, "null argument") != HEXCSL_OK)
        return HEXCSL_ERR_INVALID_ARGUMENT;
    return guarded(ctx, [&] {
        Integer mi, ni;
        if (mi.set_str(m, 10) != 0 || ni.set_str(n, 10) != 0)
            throw std::invalid_argument("coordinates must be decimal integers");
        Json j = to_json(factor(EisensteinInt(mi, ni)));
        return emit(json_out, j.dump(2));
    });
}

hexcsl_status hexcsl_enumerate(hexcsl_ctx* ctx, long max_index, const char* format, char** out) {
    if (require(ctx, format && out, "null argument") != HEXCSL_OK)
        return HEXCSL_ERR_INVALID_ARGUMENT;
    return guarded(ctx, [&] {
        std::string fmt(format);
        if (fmt == "csv") return emit(out, enumerate_to_csv(Integer(max_index)));
        if (fmt == "json") return emit(out, enumerate_to_json(Integer(max_index)).dump(2));
        throw std::invalid_argument("format must be \"csv\" or \"json\"");
    });
}

hexcsl_status hexcsl_count(hexcsl_ctx* ctx, long m, char** json_out) {
    if (require(ctx, json_out != nullptr, "null argument") != HEXCSL_OK)
        return HEXCSL_ERR_INVALID_ARGUMENT;
    return guarded(ctx, [&] {
        Json j{{"m", m},
               {"f", integer_to_json(count_csls(Integer(m)))},
               {"f_hat", integer_to_json(count_rotations(Integer(m)))}};
        return emit(json_out, j.dump(2));
    });
}

hexcsl_status hexcsl_dirichlet(hexcsl_ctx* ctx, long max_m, char** json_out) {
    if (require(ctx, json_out != nullptr, "null argument") != HEXCSL_OK)
        return HEXCSL_ERR_INVALID_ARGUMENT;
    return guarded(ctx, [&] {
        Json coeffs = Json::array();
        for (const auto& c : dirichlet_coefficients(max_m)) coeffs.push_back(integer_to_json(c));
        Json j{{"max", max_m}, {"coefficients", coeffs}};
        return emit(json_out, j.dump(2));
    });
}

hexcsl_status hexcsl_shift_describe(hexcsl_ctx* ctx, const char* shift_json, char** json_out) {
    if (require(ctx, shift_json && json_out, "null argument") != HEXCSL_OK)
        return HEXCSL_ERR_INVALID_ARGUMENT;
    return guarded(ctx, [&] {
        ShiftSpec spec = json_to_shift_spec(Json::parse(shift_json));
        Json j = to_json(describe_oc(spec));
        j["shift"] = to_json(spec);
        return emit(json_out, j.dump(2));
    });
}

hexcsl_status hexcsl_csl(hexcsl_ctx* ctx, const char* isometry_json, const char* shift_json,
                         char** json_out) {
    if (require(ctx, isometry_json && json_out, "null argument") != HEXCSL_OK)
        return HEXCSL_ERR_INVALID_ARGUMENT;
    return guarded(ctx, [&] {
        CoincidenceIsometry r = json_to_isometry(Json::parse(isometry_json));
        Json j{{"isometry", to_json(r)},
               {"z", to_json(csl_of(r).z)},
               {"index", integer_to_json(coincidence_index(r))},
               {"angle_deg", angle_degrees(r)},
               {"value", to_json(isometry_value(r))}};
        if (shift_json) {
            ShiftSpec spec = json_to_shift_spec(Json::parse(shift_json));
            const auto* rs = std::get_if<RationalShift>(&spec);
            if (!rs)
                throw std::invalid_argument("coset CSLs are defined for rational shifts only");
            j["member"] = member(r, *rs);
            if (member(r, *rs)) {
                CosetCsl c = shifted_csl(r, *rs);
                j["coset_shift"] = to_json(c.shift);
            } else {
                j["coset_shift"] = nullptr;
            }
        }
        return emit(json_out, j.dump(2));
    });
}

hexcsl_status hexcsl_packing(hexcsl_ctx* ctx, const char* isometry_json, int shifted,
                             char** json_out) {
    if (require(ctx, isometry_json && json_out, "null argument") != HEXCSL_OK)
        return HEXCSL_ERR_INVALID_ARGUMENT;
    return guarded(ctx, [&] {
        CoincidenceIsometry r = json_to_isometry(Json::parse(isometry_json));
        Multilattice hc = honeycomb();
        Json j;
        if (shifted) {
            EisensteinRational x = honeycomb_shift();
            Csml c = shifted_csml(x, hc, r);
            j = to_json(c);
            j["sigma"] = to_json(shifted_sigma(x, hc, r));
            j["shifted"] = true;
        } else {
            Csml c = csml(hc, r);
            j = to_json(c);
            j["sigma"] = to_json(sigma(hc, r));
            j["shifted"] = false;
            j["index_closed_form"] = integer_to_json(honeycomb_index(r));
        }
        j["isometry"] = to_json(r);
        return emit(json_out, j.dump(2));
    });
}

hexcsl_status hexcsl_render(hexcsl_ctx* ctx, const char* render_json, char** svg_out) {
    if (require(ctx, render_json && svg_out, "null argument") != HEXCSL_OK)
        return HEXCSL_ERR_INVALID_ARGUMENT;
    return guarded(ctx, [&] {
        Json j = Json::parse(render_json);
        RenderSpec spec;
        spec.scene = scene_from_name(j.at("scene").get<std::string>());
        if (j.contains("radius")) spec.radius = json_to_rational(j.at("radius"));
        if (j.contains("rotation") && !j.at("rotation").is_null())
            spec.rotation = json_to_isometry(j.at("rotation"));
        if (j.contains("shift") && !j.at("shift").is_null()) {
            ShiftSpec s = json_to_shift_spec(j.at("shift"));
            const auto* rs = std::get_if<RationalShift>(&s);
            if (!rs) throw std::invalid_argument("render: shift must be rational");
            spec.shift = *rs;
        }
        spec.fundamental_domain = j.value("fundamental_domain", false);
        if (j.contains("scale")) spec.style.scale = j.at("scale").get<double>();
        if (j.contains("point_radius")) spec.style.point_radius = j.at("point_radius").get<double>();
        return emit(svg_out, render_svg(spec));
    });
}

hexcsl_status hexcsl_verify(hexcsl_ctx* ctx, long norm_bound, long radius, char** json_out,
                            int* passed) {
    if (require(ctx, json_out != nullptr, "null argument") != HEXCSL_OK)
        return HEXCSL_ERR_INVALID_ARGUMENT;
    return guarded(ctx, [&] {
        SuiteConfig cfg;
        if (norm_bound > 0) cfg.norm_bound = norm_bound;
        if (radius > 0) cfg.radius = radius;
        auto reports = run_suite(cfg);
        Json j = reports_to_json(reports);
        j["norm_bound"] = cfg.norm_bound;
        j["radius"] = cfg.radius;
        if (passed) *passed = all_passed(reports) ? 1 : 0;
        return emit(json_out, j.dump(2));
    });
}

}  // extern "C"

#include "render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "multilattice.hpp"
#include "oracle.hpp"

namespace hexcsl {

Scene scene_from_name(const std::string& name) {
    if (name == "lattice") return Scene::lattice;
    if (name == "shifted-lattice") return Scene::shifted_lattice;
    if (name == "honeycomb") return Scene::honeycomb;
    if (name == "csl-overlay") return Scene::csl_overlay;
    if (name == "csml-overlay") return Scene::csml_overlay;
    throw std::invalid_argument("unknown scene: " + name);
}

std::string scene_name(Scene s) {
    switch (s) {
        case Scene::lattice: return "lattice";
        case Scene::shifted_lattice: return "shifted-lattice";
        case Scene::honeycomb: return "honeycomb";
        case Scene::csl_overlay: return "csl-overlay";
        case Scene::csml_overlay: return "csml-overlay";
    }
    return "?";
}

namespace {

constexpr const char* kGray = "#9097a0";
constexpr const char* kBlack = "#23272d";
constexpr const char* kBlue = "#3b7dd8";
constexpr const char* kRed = "#d03a2b";
constexpr const char* kOrange = "#e08a00";
constexpr const char* kEdge = "#c9cdd3";

struct Canvas {
    double scale, cx, cy, size;
    std::ostringstream out;

    Canvas(double radius_units, const RenderStyle& style) {
        scale = style.scale;
        double margin = style.point_radius * 4 + 10;
        size = 2 * (radius_units * scale + margin);
        cx = cy = size / 2;
    }

    static std::string num(double v) {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.6f", v);
        return buf;
    }

    std::pair<double, double> to_px(const EisensteinRational& p) const {
        double a = p.coord_a().get_d();
        double b = p.coord_b().get_d();
        double x = a - b / 2.0;
        double y = b * std::sqrt(3.0) / 2.0;
        return {cx + scale * x, cy - scale * y};
    }

    void circle(const EisensteinRational& p, double r, const char* fill, const char* stroke) {
        auto [x, y] = to_px(p);
        out << "  <circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"" << num(r) << "\"";
        if (fill) out << " fill=\"" << fill << "\"";
        else out << " fill=\"none\"";
        if (stroke) out << " stroke=\"" << stroke << "\" stroke-width=\"1.2\"";
        out << "/>\n";
    }

    void line(const EisensteinRational& p, const EisensteinRational& q, const char* color) {
        auto [x1, y1] = to_px(p);
        auto [x2, y2] = to_px(q);
        out << "  <line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\"" << num(x2)
            << "\" y2=\"" << num(y2) << "\" stroke=\"" << color << "\" stroke-width=\"1\"/>\n";
    }

    void polygon(const std::vector<EisensteinRational>& pts, const char* fill, const char* stroke) {
        out << "  <path d=\"";
        for (size_t i = 0; i < pts.size(); ++i) {
            auto [x, y] = to_px(pts[i]);
            out << (i == 0 ? "M " : "L ") << num(x) << " " << num(y) << " ";
        }
        out << "Z\" fill=\"" << fill << "\" fill-opacity=\"0.45\" stroke=\"" << stroke
            << "\" stroke-width=\"1\"/>\n";
    }

    void points(const PointPatch& p, double r, const char* fill, const char* stroke = nullptr) {
        for (const auto& y : p.points) circle(y, r, fill, stroke);
    }

    std::string finish() const {
        std::string body = out.str();
        std::string head = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
        head += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(size) +
                "\" height=\"" + num(size) + "\" viewBox=\"0 0 " + num(size) + " " + num(size) +
                "\">\n";
        head += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
        return head + body + "</svg>\n";
    }
};

void draw_fundamental_domain(Canvas& canvas) {
    // the region 0 <= 4b <= 2a <= b+1: a triangle with corners 0, 1/2, 2/3 + ξ/3
    std::vector<EisensteinRational> tri = {
        EisensteinRational(EisensteinInt(0, 0)),
        EisensteinRational(EisensteinInt(1, 0), Integer(2)),
        EisensteinRational(EisensteinInt(2, 1), Integer(3)),
    };
    canvas.polygon(tri, "#b8c4d6", "#5b6876");
}

void draw_honeycomb_edges(Canvas& canvas, const PointPatch& base, const PointPatch& shifted) {
    // nearest-neighbor offsets from a lattice point to the shifted coset
    const EisensteinRational x = honeycomb_shift();
    const std::vector<EisensteinRational> offsets = {
        x, x - EisensteinRational(EisensteinInt(1, 0)), x - EisensteinRational(EisensteinInt(1, 1))};
    for (const auto& g : base.points)
        for (const auto& off : offsets) {
            EisensteinRational q = g + off;
            if (shifted.points.count(q)) canvas.line(g, q, kEdge);
        }
}

}  // namespace

std::string render_svg(const RenderSpec& spec) {
    if (spec.radius <= 0) throw std::invalid_argument("render: radius must be positive");
    Canvas canvas(spec.radius.get_d(), spec.style);
    const double pr = spec.style.point_radius;
    const Rational rad = spec.radius;

    EisensteinRational shift = honeycomb_shift();
    if (spec.shift) shift = shift_value(*spec.shift);

    switch (spec.scene) {
        case Scene::lattice: {
            if (spec.fundamental_domain) draw_fundamental_domain(canvas);
            canvas.points(patch(EisensteinRational(), rad), pr, kGray);
            break;
        }
        case Scene::shifted_lattice: {
            canvas.points(patch(EisensteinRational(), rad), pr, kGray);
            canvas.points(patch(shift, rad), pr, kBlack);
            break;
        }
        case Scene::honeycomb: {
            PointPatch base = patch(EisensteinRational(), rad);
            PointPatch shifted = patch(honeycomb_shift(), rad);
            draw_honeycomb_edges(canvas, base, shifted);
            canvas.points(base, pr, kGray);
            canvas.points(shifted, pr, kBlack);
            break;
        }
        case Scene::csl_overlay: {
            if (!spec.rotation) throw std::invalid_argument("csl-overlay needs a rotation");
            const CoincidenceIsometry& r = *spec.rotation;
            PointPatch base = spec.shift ? patch(shift, rad) : patch(EisensteinRational(), rad);
            canvas.points(base, pr, kGray);
            canvas.points(apply_patch(r, base), pr + 1.5, nullptr, kBlue);
            if (spec.shift) {
                RationalShift xs = *spec.shift;
                if (member(r, xs)) {
                    CosetCsl c = shifted_csl(r, xs);
                    canvas.points(coset_patch(c.shift, c.z, rad), pr + 0.8, kRed, nullptr);
                }
            } else {
                canvas.points(coset_patch(EisensteinRational(), r.z(), rad), pr + 0.8, kRed, nullptr);
            }
            break;
        }
        case Scene::csml_overlay: {
            if (!spec.rotation) throw std::invalid_argument("csml-overlay needs a rotation");
            const CoincidenceIsometry& r = *spec.rotation;
            Multilattice hc = honeycomb();
            std::vector<EisensteinRational> shifts;
            EisensteinRational x0 = spec.shift ? shift_value(*spec.shift)
                                               : EisensteinRational(EisensteinInt(0, 0));
            for (const auto& xk : hc.shifts()) shifts.push_back(x0 + xk);
            PointPatch base = patch(shifts[0], rad);
            PointPatch second = patch(shifts[1], rad);
            PointPatch whole = union_patch(shifts, rad);
            canvas.points(base, pr, kGray);
            canvas.points(second, pr, kBlack);
            canvas.points(apply_patch(r, whole), pr + 1.5, nullptr, kBlue);
            Csml c = spec.shift ? shifted_csml(x0, hc, r) : csml(hc, r);
            int i = 0;
            for (const auto& comp : c.components)
                canvas.points(coset_patch(comp, c.z, rad), pr + 0.8,
                              (i++ % 2 == 0) ? kRed : kOrange, nullptr);
            break;
        }
    }
    return canvas.finish();
}

}  // namespace hexcsl

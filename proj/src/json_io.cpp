#include "json_io.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace hexcsl {

namespace {

std::string format_angle(double deg) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", deg);
    return buf;
}

double rounded_angle(double deg) {
    return std::round(deg * 1e6) / 1e6;
}

}  // namespace

Json integer_to_json(const Integer& v) {
    if (v.fits_slong_p()) return Json(static_cast<long>(v.get_si()));
    return Json(v.get_str());
}

Integer json_to_integer(const Json& j) {
    if (j.is_number_integer()) return Integer(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Integer(j.get<std::string>());
    throw std::invalid_argument("expected an integer or a decimal string");
}

Rational parse_rational(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0)
        throw std::invalid_argument("malformed rational: " + text);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    r.canonicalize();
    return r;
}

Rational json_to_rational(const Json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw std::invalid_argument("expected a rational as integer or \"p/q\" string");
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

Json to_json(const EisensteinInt& g) {
    return Json{{"m", integer_to_json(g.m())}, {"n", integer_to_json(g.n())}};
}

EisensteinInt json_to_eisenstein(const Json& j) {
    return {json_to_integer(j.at("m")), json_to_integer(j.at("n"))};
}

Json to_json(const EisensteinRational& y) {
    return Json{{"num", to_json(y.num())}, {"den", integer_to_json(y.den())}};
}

EisensteinRational json_to_eisenstein_rational(const Json& j) {
    return {json_to_eisenstein(j.at("num")), json_to_integer(j.at("den"))};
}

Json to_json(const CoincidenceIsometry& r) {
    return Json{{"z", to_json(r.z())}, {"eps", r.eps().k()}, {"reflect", r.reflect()}};
}

CoincidenceIsometry json_to_isometry(const Json& j) {
    int k = j.at("eps").get<int>();
    if (k < 0 || k > 5) throw std::invalid_argument("eps must be in 0..5");
    bool reflect = j.value("reflect", false);
    return CoincidenceIsometry::from_parts(json_to_eisenstein(j.at("z")), Unit(k), reflect);
}

Json to_json(const PrimeFactorization& f) {
    Json factors = Json::array();
    for (const auto& pf : f.factors)
        factors.push_back(Json{{"prime", to_json(pf.prime)},
                               {"norm", integer_to_json(pf.prime.norm())},
                               {"exponent", pf.exponent},
                               {"class", prime_class_name(pf.cls)}});
    return Json{{"unit", f.unit.k()}, {"unit_name", f.unit.str()}, {"factors", factors}};
}

Json to_json(const OcDescription& d) {
    Json units = Json::array();
    for (auto u : d.units) units.push_back(u.k());
    Json out{{"kind", oc_kind_name(d.kind)},
             {"units", units},
             {"reflection", d.reflection ? to_json(*d.reflection) : Json(nullptr)},
             {"certified_group", d.certified_group},
             {"structure", d.structure}};
    if (d.den)
        out["denominator"] = Json{{"p", to_json(d.den->p)}, {"q", to_json(d.den->q)}};
    else
        out["denominator"] = nullptr;
    return out;
}

Json to_json(const Csml& c) {
    Json comps = Json::array();
    for (const auto& s : c.components) comps.push_back(Json{{"shift", to_json(s)}});
    return Json{{"z", to_json(c.z)},
                {"components", comps},
                {"index_num", integer_to_json(c.index.get_num())},
                {"index_den", integer_to_json(c.index.get_den())}};
}

Json to_json(const SigmaSet& s) {
    Json out = Json::array();
    for (const auto& [j, k] : s.pairs) out.push_back(Json::array({j, k}));
    return out;
}

Json to_json(const VerificationReport& r) {
    return Json{{"name", r.name},
                {"expected", r.expected},
                {"observed", r.observed},
                {"pass", r.pass},
                {"context", r.context}};
}

Json reports_to_json(const std::vector<VerificationReport>& reports) {
    Json list = Json::array();
    for (const auto& r : reports) list.push_back(to_json(r));
    return Json{{"reports", list}, {"passed", all_passed(reports)}};
}

ShiftSpec json_to_shift_spec(const Json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "rational")
        return RationalShift{json_to_rational(j.at("a")), json_to_rational(j.at("b"))};
    if (kind == "irrational-a") return IrrationalA{json_to_rational(j.at("b"))};
    if (kind == "irrational-b") return IrrationalB{json_to_rational(j.at("a"))};
    if (kind == "both-independent") return BothIndependent{};
    if (kind == "affinely-related")
        return make_affinely_related(json_to_integer(j.at("p1")), json_to_integer(j.at("q1")),
                                     json_to_integer(j.at("p2")), json_to_integer(j.at("q2")));
    throw std::invalid_argument("unknown shift kind: " + kind);
}

Json to_json(const ShiftSpec& s) {
    if (const auto* r = std::get_if<RationalShift>(&s))
        return Json{{"kind", "rational"},
                    {"a", rational_to_string(r->a)},
                    {"b", rational_to_string(r->b)}};
    if (const auto* ia = std::get_if<IrrationalA>(&s))
        return Json{{"kind", "irrational-a"}, {"b", rational_to_string(ia->b)}};
    if (const auto* ib = std::get_if<IrrationalB>(&s))
        return Json{{"kind", "irrational-b"}, {"a", rational_to_string(ib->a)}};
    if (std::holds_alternative<BothIndependent>(s)) return Json{{"kind", "both-independent"}};
    const auto& ar = std::get<AffinelyRelated>(s);
    return Json{{"kind", "affinely-related"},
                {"p1", integer_to_json(ar.p1)},
                {"q1", integer_to_json(ar.q1)},
                {"p2", integer_to_json(ar.p2)},
                {"q2", integer_to_json(ar.q2)}};
}

Json enumerate_to_json(const Integer& max_index) {
    Json rows = Json::array();
    Json summary = Json::array();
    Integer last_index(-1);
    for (const auto& e : enumerate_csls(max_index)) {
        CoincidenceIsometry r = CoincidenceIsometry::rotation(e.csl.z, Unit(0));
        rows.push_back(Json{{"index", integer_to_json(e.index)},
                            {"z", to_json(e.csl.z)},
                            {"angle_deg", rounded_angle(reduced_angle_degrees(r))}});
        if (e.index != last_index) {
            summary.push_back(Json{{"index", integer_to_json(e.index)},
                                   {"csls", integer_to_json(count_csls(e.index))},
                                   {"rotations", integer_to_json(count_rotations(e.index))}});
            last_index = e.index;
        }
    }
    return Json{{"max_index", integer_to_json(max_index)}, {"csls", rows}, {"summary", summary}};
}

std::string enumerate_to_csv(const Integer& max_index) {
    std::string out = "index,z_m,z_n,angle_deg\n";
    Integer last_index(-1);
    std::string trailer;
    for (const auto& e : enumerate_csls(max_index)) {
        CoincidenceIsometry r = CoincidenceIsometry::rotation(e.csl.z, Unit(0));
        out += e.index.get_str() + "," + e.csl.z.m().get_str() + "," + e.csl.z.n().get_str() +
               "," + format_angle(reduced_angle_degrees(r)) + "\n";
        if (e.index != last_index) {
            trailer += "# index=" + e.index.get_str() + " csls=" + count_csls(e.index).get_str() +
                       " rotations=" + count_rotations(e.index).get_str() + "\n";
            last_index = e.index;
        }
    }
    return out + trailer;
}

}  // namespace hexcsl

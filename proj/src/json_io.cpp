#include "kf/json_io.hpp"

namespace kf::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::Parse, what); }

const json& field(const json& j, const char* key) {
    if (!j.is_object()) bad(std::string("expected an object with \"") + key + "\"");
    auto it = j.find(key);
    if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
    return *it;
}

long integer_from(const json& j, const char* what) {
    if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
    return j.get<long>();
}

bool bool_from(const json& j, const char* what) {
    if (!j.is_boolean()) bad(std::string(what) + " must be a boolean");
    return j.get<bool>();
}

std::string string_from(const json& j, const char* what) {
    if (!j.is_string()) bad(std::string(what) + " must be a string");
    return j.get<std::string>();
}

}  // namespace

json to_json(const Rat& r) { return r.str(); }

Rat rat_from(const json& j) {
    if (j.is_number_integer()) return Rat(Int(j.get<long>()));
    if (!j.is_string()) bad("rational must be a string such as \"-3/4\"");
    return Rat::parse(j.get<std::string>());
}

json to_json(const UPoly& p) {
    json a = json::array();
    for (int i = 0; i <= p.degree(); ++i)
        if (!p.coeff(i).is_zero()) a.push_back(json::array({json::array({i}), to_json(p.coeff(i))}));
    return a;
}

UPoly upoly_from(const json& j) {
    if (!j.is_array()) bad("polynomial must be a list of [[exponent], \"coeff\"] terms");
    std::vector<Rat> c;
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 2 || !term[0].is_array() || term[0].size() != 1)
            bad("polynomial term must be [[exponent], \"coeff\"]");
        long e = integer_from(term[0][0], "exponent");
        if (e < 0 || e > 4096) bad("exponent out of range");
        if (c.size() <= static_cast<std::size_t>(e)) c.resize(static_cast<std::size_t>(e) + 1);
        c[static_cast<std::size_t>(e)] += rat_from(term[1]);
    }
    return UPoly(std::move(c));
}

json to_json(const WeierstrassCurve& E) { return json{{"A", to_json(E.A)}, {"B", to_json(E.B)}}; }

WeierstrassCurve curve_from(const json& j) { return WeierstrassCurve(rat_from(field(j, "A")), rat_from(field(j, "B"))); }

json to_json(const ECPoint& P) {
    if (P.is_infinity()) return "inf";
    return json::array({to_json(P.x()), to_json(P.y())});
}

ECPoint point_from(const json& j) {
    if (j.is_string() && j.get<std::string>() == "inf") return ECPoint::infinity();
    if (!j.is_array() || j.size() != 2) bad("point must be \"inf\" or [x, y]");
    return ECPoint(rat_from(j[0]), rat_from(j[1]));
}

json to_json(const ProjPoint& P) { return json::array({to_json(P.X()), to_json(P.Y()), to_json(P.Z())}); }

ProjPoint proj_point_from(const json& j) {
    if (!j.is_array() || j.size() != 3) bad("projective point must be [X, Y, Z]");
    return ProjPoint(rat_from(j[0]), rat_from(j[1]), rat_from(j[2]));
}

json to_json(const PlaneCubic& C) {
    json a = json::array();
    for (const auto& c : C.coeffs()) a.push_back(to_json(c));
    return a;
}

PlaneCubic cubic_from(const json& j) {
    if (!j.is_array() || j.size() != 10) bad("cubic must have 10 coefficients");
    std::array<Rat, 10> c;
    for (std::size_t i = 0; i < 10; ++i) c[i] = rat_from(j[i]);
    return PlaneCubic(c);
}

json to_json(const TorsionVerdict& v) {
    json j;
    j["verdict"] = v.torsion ? "torsion" : "non-torsion";
    if (v.torsion)
        j["order"] = v.order;
    else
        j["method"] = method_name(v.method);
    j["evidence"] = v.evidence;
    return j;
}

TorsionVerdict torsion_verdict_from(const json& j) {
    std::string verdict = string_from(field(j, "verdict"), "verdict");
    std::string evidence = string_from(field(j, "evidence"), "evidence");
    if (verdict == "torsion") return TorsionVerdict::torsion_of(static_cast<int>(integer_from(field(j, "order"), "order")), evidence);
    if (verdict != "non-torsion") bad("verdict must be \"torsion\" or \"non-torsion\"");
    std::string m = string_from(field(j, "method"), "method");
    if (m == method_name(NonTorsionMethod::LutzNagellNonIntegral))
        return TorsionVerdict::non_torsion(NonTorsionMethod::LutzNagellNonIntegral, evidence);
    if (m == method_name(NonTorsionMethod::MazurMultiples))
        return TorsionVerdict::non_torsion(NonTorsionMethod::MazurMultiples, evidence);
    bad("unknown method \"" + m + "\"");
}

json to_json(const ChordTorsionVerdict& v) {
    json j;
    j["verdict"] = v.torsion ? "torsion" : "non-torsion";
    if (v.torsion) j["period"] = v.period;
    json pts = json::array();
    for (const auto& p : v.points) pts.push_back(to_json(p));
    j["points"] = pts;
    return j;
}

ChordTorsionVerdict chord_verdict_from(const json& j) {
    ChordTorsionVerdict v;
    std::string verdict = string_from(field(j, "verdict"), "verdict");
    if (verdict != "torsion" && verdict != "non-torsion") bad("verdict must be \"torsion\" or \"non-torsion\"");
    v.torsion = verdict == "torsion";
    if (v.torsion) v.period = static_cast<int>(integer_from(field(j, "period"), "period"));
    const json& pts = field(j, "points");
    if (!pts.is_array()) bad("points must be an array");
    for (const auto& p : pts) v.points.push_back(proj_point_from(p));
    return v;
}

json to_json(const QuotientSurface& S) {
    return json{{"k", S.k}, {"n", S.n}, {"a", to_json(S.a)}, {"b", to_json(S.b)}, {"c", to_json(S.c)}, {"d", to_json(S.d)}};
}

QuotientSurface surface_from(const json& j) {
    return build_quotient_surface(static_cast<int>(integer_from(field(j, "k"), "k")),
                                  static_cast<int>(integer_from(field(j, "n"), "n")), rat_from(field(j, "a")),
                                  rat_from(field(j, "b")), rat_from(field(j, "c")), rat_from(field(j, "d")));
}

json to_json(const KthPowerFreeClass& c) {
    json f = json::array();
    for (const auto& [p, e] : c.factors)
        f.push_back(json::array({p.fits_slong_p() ? json(p.get_si()) : json(p.get_str()), e}));
    return json{{"k", c.k}, {"sign", c.sign}, {"factors", f}};
}

KthPowerFreeClass class_from(const json& j) {
    KthPowerFreeClass c;
    c.k = static_cast<int>(integer_from(field(j, "k"), "k"));
    c.sign = static_cast<int>(integer_from(field(j, "sign"), "sign"));
    const json& f = field(j, "factors");
    if (!f.is_array()) bad("factors must be an array");
    for (const auto& pe : f) {
        if (!pe.is_array() || pe.size() != 2) bad("factor must be [p, e]");
        Int p;
        if (pe[0].is_number_integer())
            p = pe[0].get<long>();
        else if (p.set_str(string_from(pe[0], "prime"), 10) != 0)
            bad("bad prime");
        c.factors.emplace_back(p, static_cast<unsigned>(integer_from(pe[1], "exponent")));
    }
    return c;
}

json to_json(const TwistPairWitness& w) {
    return json{{"u", to_json(w.u)},
                {"l", to_json(w.l)},
                {"class", to_json(w.cls)},
                {"point1", json::array({to_json(w.x), to_json(w.y1)})},
                {"point2", json::array({to_json(w.t), to_json(w.y2)})}};
}

TwistPairWitness twist_witness_from(const json& j) {
    TwistPairWitness w;
    w.u = rat_from(field(j, "u"));
    w.l = rat_from(field(j, "l"));
    w.cls = class_from(field(j, "class"));
    const json& p1 = field(j, "point1");
    const json& p2 = field(j, "point2");
    if (!p1.is_array() || p1.size() != 2 || !p2.is_array() || p2.size() != 2) bad("points must be [x, y]");
    w.x = rat_from(p1[0]);
    w.y1 = rat_from(p1[1]);
    w.t = rat_from(p2[0]);
    w.y2 = rat_from(p2[1]);
    return w;
}

json to_json(const XBound& b) {
    if (b.kind == XBound::Kind::NegInf) return "-inf";
    if (b.kind == XBound::Kind::PosInf) return "+inf";
    double approx = b.poly.eval(b.box.high).is_zero()
                        ? b.box.high.approx()
                        : refine_box(b.poly, b.box, Rat(Int(1), Int(1) << 40)).midpoint().approx();
    return json{{"root_of", to_json(b.poly)}, {"low", to_json(b.box.low)}, {"high", to_json(b.box.high)},
                {"approx", approx}};
}

json to_json(const ComponentCensus& c) {
    json comps = json::array();
    for (const auto& comp : c.components)
        comps.push_back(json{{"x_low", to_json(comp.x_low)}, {"x_high", to_json(comp.x_high)}, {"bounded", comp.bounded}});
    json j{{"count", c.count}, {"components", comps}};
    j["oval"] = c.oval ? json(*c.oval) : json(nullptr);
    return j;
}

json to_json(const DensityRecord& r) {
    const DensityWitness& w = r.witness;
    json j;
    j["kind"] = w.kind;
    j["g"] = to_json(r.g);
    j["f"] = to_json(r.f);
    j["t1"] = to_json(w.t1);
    j["epsilon"] = to_json(w.epsilon);
    j["t_prime"] = to_json(w.t_prime);
    if (w.u) j["u"] = to_json(*w.u);
    j["point"] = json::array({to_json(w.x), to_json(w.y)});
    j["fiber"] = to_json(w.fiber);
    j["fiber_point"] = to_json(w.fiber_point);
    j["certificate"] = to_json(w.certificate);
    j["error"] = to_json(w.error);
    if (w.kind == "pencil") {
        j["f_nonnegative"] = w.f_nonnegative;
    } else {
        j["multiple"] = w.multiple;
        j["chord_index"] = w.chord_index;
        j["chord_certificate"] = w.chord_certificate ? to_json(*w.chord_certificate) : json(nullptr);
        j["three_roots"] = w.three_roots;
    }
    return j;
}

DensityRecord density_record_from(const json& j) {
    DensityRecord r;
    DensityWitness& w = r.witness;
    w.kind = string_from(field(j, "kind"), "kind");
    if (w.kind != "pencil" && w.kind != "kummer") bad("kind must be \"pencil\" or \"kummer\"");
    r.g = upoly_from(field(j, "g"));
    r.f = upoly_from(field(j, "f"));
    if (r.g.degree() != 3) bad("g must be a cubic");
    w.t1 = rat_from(field(j, "t1"));
    w.epsilon = rat_from(field(j, "epsilon"));
    w.t_prime = rat_from(field(j, "t_prime"));
    if (j.contains("u")) w.u = rat_from(j["u"]);
    const json& pt = field(j, "point");
    if (!pt.is_array() || pt.size() != 2) bad("point must be [x, y]");
    w.x = rat_from(pt[0]);
    w.y = rat_from(pt[1]);
    w.fiber = curve_from(field(j, "fiber"));
    w.fiber_point = point_from(field(j, "fiber_point"));
    w.certificate = torsion_verdict_from(field(j, "certificate"));
    w.error = rat_from(field(j, "error"));
    if (w.kind == "pencil") {
        w.f_nonnegative = bool_from(field(j, "f_nonnegative"), "f_nonnegative");
    } else {
        w.multiple = integer_from(field(j, "multiple"), "multiple");
        w.chord_index = integer_from(field(j, "chord_index"), "chord_index");
        const json& cc = field(j, "chord_certificate");
        if (!cc.is_null()) w.chord_certificate = chord_verdict_from(cc);
        w.three_roots = bool_from(field(j, "three_roots"), "three_roots");
    }
    return r;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace kf::io

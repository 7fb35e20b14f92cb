#include "kf/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "kf/json_io.hpp"

namespace kf {

namespace {

using io::json;

struct Result {
    json body;
    int code = kExitOk;
};

Rat rat_arg(const std::string& s, const char* name) {
    try {
        return Rat::parse(s);
    } catch (const Error& e) {
        throw Error(Errc::Parse, std::string("--") + name + ": " + e.what());
    }
}

// Rewrites every number or rational string in j as a canonical rational string.
json canonical(const json& j) {
    if (j.is_array()) {
        json a = json::array();
        for (const auto& e : j) a.push_back(canonical(e));
        return a;
    }
    if (j.is_object()) {
        json o = json::object();
        for (const auto& [k, v] : j.items()) o[k] = canonical(v);
        return o;
    }
    if (j.is_number_integer() || (j.is_string() && j.get<std::string>() != "inf")) return io::rat_from(j).str();
    if (j.is_number()) throw Error(Errc::Parse, "rationals must be integers or strings \"p/q\"");
    return j;
}

json json_arg(const std::string& s, const char* name) {
    try {
        return canonical(json::parse(s));
    } catch (const json::parse_error& e) {
        throw Error(Errc::Parse, std::string("--") + name + " is not valid JSON");
    }
}

std::vector<Rat> rat_list(const json& j, std::size_t n, const char* name) {
    if (!j.is_array() || j.size() != n)
        throw Error(Errc::Parse, std::string("--") + name + " must be a JSON array of " + std::to_string(n) + " rationals");
    std::vector<Rat> v;
    for (const auto& e : j) v.push_back(io::rat_from(e));
    return v;
}

// Writes text to path via a temporary file and rename.
void write_atomic(const std::string& path, const std::string& text) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary);
        if (!f) throw Error(Errc::Parse, "cannot write " + path);
        f << text;
        if (!f) throw Error(Errc::Parse, "cannot write " + path);
    }
    std::filesystem::rename(tmp, path);
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error(Errc::Parse, "cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// ---- commands on normalized input objects --------------------------------------------

QuotientSurface surface_of(const json& in) { return io::surface_from(in.at("surface")); }

Coeffs coeffs_of(const json& in) {
    Coeffs co;
    for (const auto& [k, v] : in.at("coeffs").items()) {
        if (k.size() != 1) throw Error(Errc::Parse, "bad coefficient name " + k);
        co[var_from_name(k[0])] = io::rat_from(v);
    }
    return co;
}

ParamFamily family_of(const json& in) {
    return build_family(family_from_name(in.at("family").get<std::string>()), in.at("k").get<int>(), in.at("n").get<int>());
}

Result cmd_identities(const json& in) {
    ParamFamily F = family_of(in);
    IdentityReport r = verify_family_identities(F);
    json j{{"verified", r.verified},
           {"x", F.x.display()},
           {"y", F.y.display()},
           {"t", F.t.display()},
           {"curve_residual", r.curve_residual.str()},
           {"surface_residual", r.surface_residual.str()}};
    if (F.kind == FamilyKind::GeneralKN) j["plane_residual"] = r.plane_residual.str();
    return {j, r.verified ? kExitOk : kExitError};
}

Result cmd_eval(const json& in) {
    ParamFamily F = family_of(in);
    Coeffs co = coeffs_of(in);
    ParamPoint p = eval_family(F, co, io::rat_from(in.at("u")));
    return {json{{"x", io::to_json(p.x)},
                 {"y", io::to_json(p.y)},
                 {"t", io::to_json(p.t)},
                 {"on_surface", family_surface_contains(F, co, p)},
                 {"on_curve", family_curve_contains(F, co, p)}}};
}

Result cmd_contains(const json& in) {
    auto p = rat_list(in.at("point"), 3, "point");
    return {json{{"contains", surface_contains(surface_of(in), p[0], p[1], p[2])}}};
}

Result cmd_fiber(const json& in) {
    QuotientSurface S = surface_of(in);
    if (in.contains("t")) {
        FiberT F = fiber_t(S, io::rat_from(in["t"]));
        return {json{{"q", io::to_json(F.q())}, {"curve", io::to_json(F.curve())}}};
    }
    PlaneCubic C = fiber_y(S, io::rat_from(in.at("y")));
    return {json{{"cubic", io::to_json(C)}, {"equation", C.to_mpoly().str()}, {"smooth", cubic_is_smooth(C)}}};
}

struct CensusInput {
    UPoly g, h;
    Rat w;
};

CensusInput census_input(const json& in) {
    QuotientSurface S = surface_of(in);
    if (in.contains("t")) {
        Rat q = S.f().eval(io::rat_from(in["t"]));
        if (q.is_zero()) throw Error(Errc::DegenerateFiber, "f(t) = 0");
        return {S.g(), UPoly::monomial(Rat(1), static_cast<std::size_t>(S.k)), q};
    }
    Rat y = io::rat_from(in.at("y"));
    Rat w = y.pow(S.k);
    if (w.is_zero()) throw Error(Errc::DegenerateFiber, "y = 0 gives a reducible fiber");
    return {S.g(), S.f(), w};
}

Result cmd_census(const json& in) {
    CensusInput ci = census_input(in);
    return {io::to_json(real_component_census(ci.g, ci.w, ci.h))};
}

std::string census_csv(const json& in, long N) {
    CensusInput ci = census_input(in);
    Rat R = census_box_radius(ci.g, ci.w, ci.h);
    long r = static_cast<long>(std::ceil(R.approx()));
    std::ostringstream os;
    os << "x,s\n";
    Rat half(Int(1), Int(2 * N));
    sign_grid_components(ci.g, ci.w, ci.h, r, N, [&](const Rat& x, const Rat& s) {
        os << (x + half).approx() << "," << (s + half).approx() << "\n";
    });
    return os.str();
}

struct WalkInput {
    PlaneCubic C;
    ProjPoint P;
    long steps;
};

WalkInput walk_input(const json& in) {
    PlaneCubic C = in.contains("cubic") ? io::cubic_from(in["cubic"]) : weierstrass_cubic(io::curve_from(in.at("curve")));
    const json& pj = in.at("point");
    ProjPoint P = pj.is_array() && pj.size() == 2 ? ProjPoint::affine(io::rat_from(pj[0]), io::rat_from(pj[1]))
                                                  : io::proj_point_from(pj);
    return {C, P, in.at("steps").get<long>()};
}

Result cmd_chord_walk(const json& in) {
    WalkInput wi = walk_input(in);
    json seq = json::array();
    for (const auto& q : chord_sequence(wi.C, wi.P, wi.steps)) seq.push_back(io::to_json(q));
    return {json{{"sequence", seq}, {"torsion", io::to_json(chord_torsion_test(wi.C, wi.P))}}};
}

std::string walk_csv(const json& in) {
    WalkInput wi = walk_input(in);
    std::ostringstream os;
    os << "n,x,y\n";
    long n = 0;
    long dir = wi.steps < 0 ? -1 : 1;
    for (const auto& q : chord_sequence(wi.C, wi.P, wi.steps)) {
        if (!q.at_infinity()) os << n << "," << q.X().approx() << "," << q.Y().approx() << "\n";
        n += dir;
    }
    return os.str();
}

Result cmd_torsion(const json& in) {
    WeierstrassCurve E = io::curve_from(in.at("curve"));
    ECPoint P = io::point_from(in.at("point"));
    if (!P.is_infinity() && !E.contains(P.x(), P.y())) throw Error(Errc::NotOnCurve, "point is not on the curve");
    return {io::to_json(torsion_test(E, P))};
}

Result cmd_twist_pairs(const json& in) {
    QuotientSurface S = surface_of(in);
    ParamFamily F = build_family(FamilyKind::GeneralKN, S.k, S.n);
    TwistSearch r = simultaneous_twists(S, F, in.at("count").get<int>(), in.at("height").get<long>());
    json ws = json::array();
    for (const auto& w : r.witnesses) ws.push_back(io::to_json(w));
    return {json{{"witnesses", ws}, {"shortfall", r.shortfall}, {"candidates", r.candidates}, {"skipped", r.skipped}},
            r.shortfall ? kExitInconclusive : kExitOk};
}

DensityCaps caps_of(const json& in) {
    DensityCaps c;
    const json& j = in.at("caps");
    c.multiples = j.at("multiples").get<int>();
    c.chord_steps = j.at("chord_steps").get<int>();
    c.retries = j.at("retries").get<int>();
    c.max_bits = j.at("max_bits").get<long>();
    return c;
}

Result cmd_density_pencil(const json& in) {
    ParamFamily F = family_of(in);
    Coeffs co = coeffs_of(in);
    TwistPencil P = family_pencil(F, co);
    DensityWitness w = pencil_density_witness(P, F, co, io::rat_from(in.at("t1")), io::rat_from(in.at("epsilon")), caps_of(in));
    return {io::to_json(io::DensityRecord{w, P.g(), P.f()})};
}

Result cmd_density_kummer(const json& in) {
    QuotientSurface S = surface_of(in);
    auto seed = rat_list(in.at("seed"), 3, "seed");
    DensityOutcome o = kummer_density_witness(S, seed[0], seed[1], seed[2], io::rat_from(in.at("t1")),
                                              io::rat_from(in.at("epsilon")), caps_of(in));
    if (!o.found)
        return {json{{"kind", "kummer"}, {"inconclusive", true}, {"reason", o.reason}, {"steps", o.steps}, {"caps", in.at("caps")}},
                kExitInconclusive};
    return {io::to_json(io::DensityRecord{*o.witness, S.g(), S.f()})};
}

// Commands whose output embeds their input and is checked by recomputation.
const std::map<std::string, std::function<Result(const json&)>>& recomputable() {
    static const std::map<std::string, std::function<Result(const json&)>> m{
        {"identities", cmd_identities}, {"eval-param", cmd_eval},   {"surface-contains", cmd_contains},
        {"fiber", cmd_fiber},           {"census", cmd_census},     {"torsion", cmd_torsion},
        {"chord-walk", cmd_chord_walk}, {"twist-pairs", cmd_twist_pairs},
    };
    return m;
}

Result tagged(const std::string& kind, const json& in) {
    Result r = recomputable().at(kind)(in);
    json j{{"kind", kind}, {"input", in}};
    for (auto& [k, v] : r.body.items()) j[k] = v;
    return {j, r.code};
}

Result cmd_verify(const std::string& path) {
    std::string text = read_file(path);
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error&) {
        throw Error(Errc::Parse, path + " is not valid JSON");
    }
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) throw Error(Errc::Parse, "missing \"kind\"");
    std::string kind = j["kind"];
    std::string reason;
    if (kind == "pencil" || kind == "kummer") {
        if (j.contains("inconclusive")) throw Error(Errc::Parse, "an inconclusive report carries no witness");
        io::DensityRecord r = io::density_record_from(j);
        reason = verify_density_witness(r.witness, r.g, r.f);
        if (reason.empty() && io::dump(io::to_json(r)) != text) reason = "re-serialized witness differs from the file";
    } else if (recomputable().count(kind)) {
        if (!j.contains("input")) throw Error(Errc::Parse, "missing \"input\"");
        if (kind == "twist-pairs") {
            QuotientSurface S = surface_of(j["input"]);
            for (const auto& w : j.at("witnesses"))
                if (!verify_twist_witness(S, io::twist_witness_from(w))) reason = "a twist witness fails its equations";
        }
        if (reason.empty() && io::dump(tagged(kind, j["input"]).body) != text)
            reason = "recomputed output differs from the file";
    } else {
        throw Error(Errc::Parse, "unknown kind \"" + kind + "\"");
    }
    json out{{"kind", "verification"}, {"checked", kind}, {"verified", reason.empty()}};
    if (!reason.empty()) out["reason"] = reason;
    return {out, reason.empty() ? kExitOk : kExitError};
}

json error_json(const std::string& code, const std::string& message) {
    return json{{"error", code}, {"message", message}};
}

// ---- flag wiring ----------------------------------------------------------------------

struct SurfaceFlags {
    int k = 2, n = 3;
    std::string a = "1", b = "1", c = "2", d = "3";
    void add(CLI::App* app) {
        app->add_option("--k", k, "exponent of y")->capture_default_str();
        app->add_option("--n", n, "degree of g and f")->capture_default_str();
        app->add_option("--a", a, "g = x^n + a x + b")->capture_default_str();
        app->add_option("--b", b)->capture_default_str();
        app->add_option("--c", c, "f = t^n + c t + d")->capture_default_str();
        app->add_option("--d", d)->capture_default_str();
    }
    json get() const {
        return json{{"k", k}, {"n", n}, {"a", rat_arg(a, "a").str()}, {"b", rat_arg(b, "b").str()},
                    {"c", rat_arg(c, "c").str()}, {"d", rat_arg(d, "d").str()}};
    }
};

struct FamilyFlags {
    std::string family = "general";
    int k = 2, n = 3;
    std::optional<std::string> a, b, c, d;
    void add(CLI::App* app, const std::string& def) {
        family = def;
        app->add_option("--family", family, "general, quartic or sextic")->capture_default_str();
        app->add_option("--k", k, "general family: exponent of y")->capture_default_str();
        app->add_option("--n", n, "general family: degree")->capture_default_str();
        app->add_option("--a", a);
        app->add_option("--b", b);
        app->add_option("--c", c);
        app->add_option("--d", d);
    }
    json get(bool with_coeffs) const {
        family_from_name(family);
        json j{{"family", family}, {"k", k}, {"n", n}};
        if (with_coeffs) {
            json co = json::object();
            if (a) co["a"] = rat_arg(*a, "a").str();
            if (b) co["b"] = rat_arg(*b, "b").str();
            if (c) co["c"] = rat_arg(*c, "c").str();
            if (d) co["d"] = rat_arg(*d, "d").str();
            j["coeffs"] = co;
        }
        return j;
    }
};

struct CapFlags {
    DensityCaps caps;
    void add(CLI::App* app, bool kummer) {
        if (kummer) {
            app->add_option("--multiples", caps.multiples, "seed multiples scanned")->capture_default_str();
            app->add_option("--steps", caps.chord_steps, "chord-walk steps")->capture_default_str();
            app->add_option("--max-bits", caps.max_bits, "coordinate size that ends a walk")->capture_default_str();
        }
        app->add_option("--retries", caps.retries, "failed certifications tolerated")->capture_default_str();
    }
    json get() const {
        return json{{"multiples", caps.multiples}, {"chord_steps", caps.chord_steps}, {"retries", caps.retries},
                    {"max_bits", caps.max_bits}};
    }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact arithmetic on quotient surfaces, twists and elliptic fibrations. Output is JSON."};
    app.require_subcommand(1);
    app.fallthrough();
    std::string output;
    app.add_option("-o,--output", output, "write JSON here instead of stdout");

    std::function<Result()> action;
    std::function<std::string()> plot;
    std::string plot_path;

    FamilyFlags ident_f;
    auto* ident = app.add_subcommand("verify-identities", "check the parametrization identities symbolically");
    ident_f.add(ident, "general");
    ident->callback([&] { action = [&] { return tagged("identities", ident_f.get(false)); }; });

    FamilyFlags eval_f;
    std::string eval_u;
    auto* eval = app.add_subcommand("eval-param", "evaluate a parametrization at u");
    eval_f.add(eval, "general");
    eval->add_option("--u", eval_u)->required();
    eval->callback([&] {
        action = [&] {
            json in = eval_f.get(true);
            in["u"] = rat_arg(eval_u, "u").str();
            return tagged("eval-param", in);
        };
    });

    SurfaceFlags cont_s;
    std::string cont_p;
    auto* cont = app.add_subcommand("surface-contains", "test a point [x, y, t] on the surface");
    cont_s.add(cont);
    cont->add_option("--point", cont_p, "JSON [x, y, t]")->required();
    cont->callback([&] {
        action = [&] { return tagged("surface-contains", json{{"surface", cont_s.get()}, {"point", json_arg(cont_p, "point")}}); };
    });

    SurfaceFlags fib_s, cen_s;
    std::string fib_t, fib_y, cen_t, cen_y;
    auto add_ty = [](CLI::App* sub, std::string& t, std::string& y) {
        auto* ot = sub->add_option("--t", t, "the fiber over t");
        auto* oy = sub->add_option("--y", y, "the fiber over y");
        ot->excludes(oy);
    };
    auto ty_input = [](const SurfaceFlags& s, const std::string& t, const std::string& y) {
        json in{{"surface", s.get()}};
        if (!t.empty())
            in["t"] = rat_arg(t, "t").str();
        else if (!y.empty())
            in["y"] = rat_arg(y, "y").str();
        else
            throw Error(Errc::Parse, "one of --t or --y is required");
        return in;
    };
    auto* fib = app.add_subcommand("fiber", "the fiber over t (a twist) or over y (a plane cubic)");
    fib_s.add(fib);
    add_ty(fib, fib_t, fib_y);
    fib->callback([&] { action = [&] { return tagged("fiber", ty_input(fib_s, fib_t, fib_y)); }; });

    long cen_grid = 32;
    auto* cen = app.add_subcommand("census", "real connected components of a fiber");
    cen_s.add(cen);
    add_ty(cen, cen_t, cen_y);
    cen->add_option("--plot-data", plot_path, "write CSV of sign-grid cells on the curve");
    cen->add_option("--grid", cen_grid, "plot cells per unit")->capture_default_str();
    cen->callback([&] {
        action = [&] { return tagged("census", ty_input(cen_s, cen_t, cen_y)); };
        plot = [&] { return census_csv(ty_input(cen_s, cen_t, cen_y), cen_grid); };
    });

    std::string tor_c, tor_p;
    auto* tor = app.add_subcommand("torsion", "decide whether a point has finite order");
    tor->add_option("--curve", tor_c, "JSON {\"A\": .., \"B\": ..}")->required();
    tor->add_option("--point", tor_p, "JSON [x, y] or \"inf\"")->required();
    tor->callback([&] {
        action = [&] { return tagged("torsion", json{{"curve", json_arg(tor_c, "curve")}, {"point", json_arg(tor_p, "point")}}); };
    });

    std::string walk_cubic, walk_curve, walk_p;
    long walk_n = kChordDepth;
    auto* walk = app.add_subcommand("chord-walk", "the sequence Q_{n+1} = (Q_n P) T on a plane cubic");
    auto* oc = walk->add_option("--cubic", walk_cubic, "JSON array of 10 coefficients");
    auto* oe = walk->add_option("--curve", walk_curve, "JSON {\"A\": .., \"B\": ..}");
    oc->excludes(oe);
    walk->add_option("--point", walk_p, "JSON [X, Y, Z] or [x, y]")->required();
    walk->add_option("--steps", walk_n, "number of steps; negative walks backwards")->capture_default_str();
    walk->add_option("--plot-data", plot_path, "write CSV of the affine walk points");
    walk->callback([&] {
        auto input = [&] {
            json in;
            if (!walk_cubic.empty())
                in["cubic"] = json_arg(walk_cubic, "cubic");
            else if (!walk_curve.empty())
                in["curve"] = json_arg(walk_curve, "curve");
            else
                throw Error(Errc::Parse, "one of --cubic or --curve is required");
            in["point"] = json_arg(walk_p, "point");
            in["steps"] = walk_n;
            return in;
        };
        action = [input] { return tagged("chord-walk", input()); };
        plot = [input] { return walk_csv(input()); };
    });

    SurfaceFlags tw_s;
    int tw_count = 25;
    long tw_height = 60;
    auto* tw = app.add_subcommand("twist-pairs", "twists carrying points on both curves, with distinct classes");
    tw_s.add(tw);
    tw->add_option("--count", tw_count, "classes wanted")->capture_default_str();
    tw->add_option("--height", tw_height, "bound on the height of u")->capture_default_str();
    tw->callback([&] {
        action = [&] {
            return tagged("twist-pairs", json{{"surface", tw_s.get()}, {"count", tw_count}, {"height", tw_height}});
        };
    });

    FamilyFlags dp_f;
    CapFlags dp_c;
    std::string dp_t1, dp_eps;
    auto* dp = app.add_subcommand("density-pencil", "certified positive-rank fiber near t1 in a twist pencil");
    dp_f.add(dp, "quartic");
    dp->add_option("--t1", dp_t1)->required();
    dp->add_option("--eps", dp_eps)->required();
    dp_c.add(dp, false);
    dp->callback([&] {
        action = [&] {
            json in = dp_f.get(true);
            in["t1"] = rat_arg(dp_t1, "t1").str();
            in["epsilon"] = rat_arg(dp_eps, "eps").str();
            in["caps"] = dp_c.get();
            return cmd_density_pencil(in);
        };
    });

    SurfaceFlags dk_s;
    CapFlags dk_c;
    std::string dk_seed, dk_t1, dk_eps;
    auto* dk = app.add_subcommand("density-kummer", "certified positive-rank fiber near t1 by a chord walk");
    dk_s.add(dk);
    dk->add_option("--seed", dk_seed, "JSON [x, y, t] on the surface")->required();
    dk->add_option("--t1", dk_t1)->required();
    dk->add_option("--eps", dk_eps)->required();
    dk_c.add(dk, true);
    dk->callback([&] {
        action = [&] {
            json in{{"surface", dk_s.get()}, {"seed", json_arg(dk_seed, "seed")}};
            in["t1"] = rat_arg(dk_t1, "t1").str();
            in["epsilon"] = rat_arg(dk_eps, "eps").str();
            in["caps"] = dk_c.get();
            return cmd_density_kummer(in);
        };
    });

    std::string ver_path;
    auto* ver = app.add_subcommand("verify", "re-check a JSON file written by another subcommand");
    ver->add_option("file", ver_path)->required();
    ver->callback([&] { action = [&] { return cmd_verify(ver_path); }; });

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        out << io::dump(error_json(errc_name(Errc::Parse), e.what()));
        err << e.what() << "\n";
        return kExitError;
    }

    Result r;
    std::string plot_text;
    try {
        r = action();
        if (!plot_path.empty() && plot) plot_text = plot();
    } catch (const Error& e) {
        out << io::dump(error_json(errc_name(e.code()), e.what()));
        return kExitError;
    } catch (const json::exception& e) {
        out << io::dump(error_json(errc_name(Errc::Parse), e.what()));
        return kExitError;
    } catch (const std::exception& e) {
        out << io::dump(error_json(errc_name(Errc::Internal), e.what()));
        return kExitError;
    }
    std::string text = io::dump(r.body);
    try {
        if (!plot_path.empty() && plot) write_atomic(plot_path, plot_text);
        if (output.empty())
            out << text;
        else
            write_atomic(output, text);
    } catch (const std::exception& e) {
        out << io::dump(error_json(errc_name(Errc::Parse), e.what()));
        return kExitError;
    }
    return r.code;
}

}  // namespace kf

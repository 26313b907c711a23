#include <ostream>

#include "CLI11.hpp"
#include "nbif/cli.hpp"

namespace nbif {

using nlohmann::json;

namespace {

json values_json(const std::vector<RealAlgebraicNumber>& v, unsigned bits) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_json(x, bits));
    return a;
}

void add_bound(const BiPoly& f, long depth, json& j) {
    j["bound"] = to_json(theorem5_bound(f));
    j["ledger"] = to_json(refine_bound(f, depth));
}

int analyze(const BiPoly& f, const Command& cmd, unsigned bits, json& j) {
    const HypothesisVerdict verdict = check_hypotheses(f);
    j["hypotheses"] = to_json(verdict);
    const ConditionII c2 = condition_ii(f);
    j["condition_ii"] = {{"holds", c2.holds}, {"witnesses", json::array()}};
    for (const auto& w : c2.witnesses) j["condition_ii"]["witnesses"].push_back(to_json(w));
    add_bound(f, cmd.refine_depth, j);
    if (!verdict.ok()) {
        j["sigma"] = values_json(critical_values(f), bits);
        return 2;
    }
    const BifurcationReport r = bifurcation_set(f);
    j["sigma"] = values_json(r.sigma, bits);
    j["condition_iii"] = json::array();
    for (const auto& c : r.cond_iii)
        j["condition_iii"].push_back(
            {{"face", to_json(c.face)}, {"t_star", to_json(c.t_star, bits)}, {"value", to_json(c.value, bits)}});
    j["bifurcation_set"] = json::array();
    for (const auto& e : r.b_set) {
        json v = to_json(e.value, bits);
        v["provenance"] = e.provenance;
        j["bifurcation_set"].push_back(v);
    }
    if (has_isolated_singularities(f)) j["counts"] = to_json(counts(f));
    return 0;
}

int count_verb(const BiPoly& f, const Command& cmd, json& j) {
    try {
        j["counts"] = to_json(counts(f));
        return 0;
    } catch (const HypothesisViolated& e) {
        j["hypotheses"] = to_json(e.verdict());
    } catch (const NonIsolatedSingularities&) {
        j["hypotheses"] = to_json(check_hypotheses(f));
    }
    add_bound(f, cmd.refine_depth, j);
    return 2;
}

AdmissibleFan fan_of(const BiPoly& f) {
    std::vector<Covector> req;
    for (const auto& face : infinity_faces(f)) req.push_back(face.P);
    return complete_fan(req);
}

json polygon_json(const BiPoly& f) {
    json verts = json::array();
    for (const auto& v : newton_polygon(f).vertices) verts.push_back(json::array({v.first, v.second}));
    json faces = json::array();
    for (const auto& face : hull_faces(f)) faces.push_back(to_json(face));
    json rays = json::array();
    for (const auto& r : fan_of(f).rays) rays.push_back(json::array({r.p, r.q}));
    return {{"vertices", verts}, {"faces", faces}, {"fan", rays}};
}

std::string svg_of(const BiPoly& f) {
    const AdmissibleFan fan = fan_of(f);
    return render_svg(newton_polygon(f), hull_faces(f), &fan);
}

std::string covector_text(const json& c) {
    return "(" + std::to_string(c[0].get<long>()) + "," + std::to_string(c[1].get<long>()) + ")";
}

std::string values_text(const json& a) {
    if (a.empty()) return "none";
    std::string s;
    for (const auto& v : a) {
        if (!s.empty()) s += ", ";
        s += v["approx"].get<std::string>();
        if (v.contains("provenance")) s += " [" + v["provenance"].get<std::string>() + "]";
    }
    return s;
}

void print_text(const json& j, std::ostream& out) {
    out << "f = " << j["input"].get<std::string>() << "\n";
    if (!j["hypotheses"].is_null()) {
        const auto& h = j["hypotheses"];
        out << "hypotheses: nondegenerate on positive and negative faces: "
            << (h["nondegenerate_plus_minus"].get<bool>() ? "yes" : "no")
            << "; bad faces Morse: " << (h["morse_bad_faces"].get<bool>() ? "yes" : "no") << "\n";
        for (const auto& f : h["degenerate_faces"]) out << "  degenerate face " << covector_text(f["covector"]) << "\n";
        for (const auto& f : h["non_morse_faces"]) out << "  non-Morse bad face " << covector_text(f["covector"]) << "\n";
    }
    if (!j["sigma"].is_null()) out << "critical values: " << values_text(j["sigma"]) << "\n";
    if (!j["condition_ii"].is_null()) {
        out << "condition ii: " << (j["condition_ii"]["holds"].get<bool>() ? "holds" : "fails");
        for (const auto& w : j["condition_ii"]["witnesses"]) out << " " << covector_text(w["covector"]);
        out << "\n";
    }
    if (!j["condition_iii"].is_null()) {
        out << "condition iii:";
        if (j["condition_iii"].empty()) out << " none";
        for (const auto& c : j["condition_iii"])
            out << " b" << covector_text(c["face"]["covector"]) << "(" << c["t_star"]["approx"].get<std::string>()
                << ") = " << c["value"]["approx"].get<std::string>() << ";";
        out << "\n";
    }
    if (!j["bifurcation_set"].is_null())
        out << "B_f (" << j["bifurcation_set"].size() << "): " << values_text(j["bifurcation_set"]) << "\n";
    if (!j["counts"].is_null()) {
        const auto& c = j["counts"];
        out << "counts: R+ = " << c["R_plus"] << ", R0 = " << c["R_zero"] << ", total = " << c["total"];
        if (!c["exact_split"].is_null())
            out << ", cleav = " << c["exact_split"]["cleav"] << ", vanish = " << c["exact_split"]["vanish"];
        else
            out << ", vanish in [" << c["vanish_min"] << ", " << c["vanish_max"] << "]";
        out << "\n";
    }
    if (!j["bound"].is_null()) {
        const auto& b = j["bound"];
        out << "bound: " << b["total"] << " (|Sigma_f| = " << b["sigma"] << ", epsilon = " << b["epsilon"]
            << ", R0 = " << b["R_zero"] << ", sum mu = " << b["mu_sum"] << ")\n";
    }
    if (!j["ledger"].is_null()) {
        const auto& l = j["ledger"];
        for (const auto& e : l["entries"]) {
            out << "  " << e["site"].get<std::string>() << ":";
            if (e.contains("mu"))
                out << " mu " << e["mu"] << ", heights (" << e["heights"]["plus"] << "," << e["heights"]["zero"] << ","
                    << e["heights"]["minus"] << "),";
            out << " epsilon " << e["epsilon"];
            for (const auto& lam : e["lambdas"]) out << ", lambda" << covector_text(lam["covector"]) << " = " << lam["lambda"];
            out << ", Lambda " << e["Lambda"] << "\n";
        }
        out << "refined bound: " << l["final_bound"] << " (" << l["untreated"] << " untreated sites)\n";
    }
    if (j.contains("polygon")) {
        const auto& p = j["polygon"];
        out << "vertices:";
        for (const auto& v : p["vertices"]) out << " " << covector_text(v);
        out << "\n";
        for (const auto& f : p["faces"])
            out << "face " << covector_text(f["covector"]) << " d = " << f["d"] << " " << f["class"].get<std::string>()
                << "\n";
        out << "fan:";
        for (const auto& r : p["fan"]) out << " " << covector_text(r);
        out << "\n";
    }
}

}  // namespace

int run(const Command& cmd, std::ostream& out, std::ostream& err) {
    BiPoly f;
    try {
        f = parse_poly(cmd.polynomial_text);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "; expected";
        for (const auto& x : e.expected()) err << " '" << x << "'";
        err << "\n";
        return 1;
    }
    if (f.is_constant()) {
        err << "error: the polynomial is constant\n";
        return 1;
    }
    json j = {{"input", f.to_string()},  {"hypotheses", nullptr},    {"sigma", nullptr},
              {"condition_ii", nullptr}, {"condition_iii", nullptr}, {"bifurcation_set", nullptr},
              {"counts", nullptr},       {"bound", nullptr},         {"ledger", nullptr}};
    int code = 0;
    try {
        switch (cmd.verb) {
            case Verb::analyze: code = analyze(f, cmd, display_precision_bits(), j); break;
            case Verb::counts: code = count_verb(f, cmd, j); break;
            case Verb::bound: add_bound(f, cmd.refine_depth, j); break;
            case Verb::polygon: j["polygon"] = polygon_json(f); break;
        }
        if (cmd.svg_path) write_file(*cmd.svg_path, svg_of(f));
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    if (cmd.json)
        out << j.dump(2) << "\n";
    else if (cmd.verb == Verb::polygon && !cmd.svg_path)
        out << svg_of(f);
    else
        print_text(j, out);
    return code;
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bifurcation values at infinity of real bivariate polynomials"};
    app.require_subcommand(1);
    Command cmd;
    std::string svg;
    const std::pair<const char*, Verb> verbs[] = {{"analyze", Verb::analyze},
                                                  {"counts", Verb::counts},
                                                  {"bound", Verb::bound},
                                                  {"polygon", Verb::polygon}};
    const char* help[] = {"bifurcation set, hypotheses and bound", "cleaving and vanishing family counts",
                          "upper bound on |B_f| with the refinement ledger", "Newton polygon, faces and fan (SVG)"};
    std::vector<CLI::App*> subs;
    for (std::size_t i = 0; i < 4; ++i) {
        CLI::App* sc = app.add_subcommand(verbs[i].first, help[i]);
        sc->add_option("polynomial", cmd.polynomial_text, "polynomial in x and y, e.g. \"x*(1+x*y^2)\"")->required();
        sc->add_flag("--json", cmd.json, "machine-readable report");
        sc->add_option("--svg", svg, "write the Newton polygon and fan as SVG");
        sc->add_option("--depth", cmd.refine_depth, "refinement depth of the bound ledger")
            ->check(CLI::Range(0L, kMaxRefineDepth));
        subs.push_back(sc);
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 1;
    }
    for (std::size_t i = 0; i < 4; ++i)
        if (subs[i]->parsed()) cmd.verb = verbs[i].second;
    if (!svg.empty()) cmd.svg_path = svg;
    return run(cmd, out, err);
}

}  // namespace nbif

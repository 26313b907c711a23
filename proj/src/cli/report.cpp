#include <cstdlib>

#include "nbif/cli.hpp"

namespace nbif {

using nlohmann::json;

namespace {

json covector_json(const Covector& P) { return json::array({P.p, P.q}); }

json coeffs_json(const UniPoly& p) {
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(to_string(c));
    return a;
}

json faces_json(const std::vector<Face>& faces) {
    json a = json::array();
    for (const auto& f : faces) a.push_back(to_json(f));
    return a;
}

json heights_json(const Heights& h) { return {{"plus", h.plus}, {"zero", h.zero}, {"minus", h.minus}}; }

}  // namespace

unsigned display_precision_bits() {
    const char* v = std::getenv("NBIF_PRECISION_BITS");
    if (v == nullptr) return 256;
    char* end = nullptr;
    const unsigned long bits = std::strtoul(v, &end, 10);
    if (end == v || *end != '\0' || bits < 64 || bits > 65536) return 256;
    return static_cast<unsigned>(bits);
}

json to_json(const RealAlgebraicNumber& a, unsigned bits) {
    return {{"minpoly", coeffs_json(a.minpoly())},
            {"interval", json::array({to_string(a.lo()), to_string(a.hi())})},
            {"approx", a.approx(bits)}};
}

json to_json(const Face& face) {
    return {{"covector", covector_json(face.P)},
            {"d", face.d},
            {"class", to_string(face.cls)},
            {"vertices", json::array({json::array({face.base.first, face.base.second}),
                                      json::array({face.end().first, face.end().second})})},
            {"phi", coeffs_json(face.phi)}};
}

json to_json(const HypothesisVerdict& v) {
    return {{"nondegenerate_plus_minus", v.nondegenerate_plus_minus},
            {"degenerate_faces", faces_json(v.degenerate_faces)},
            {"morse_bad_faces", v.morse_bad_faces},
            {"non_morse_faces", faces_json(v.non_morse_faces)}};
}

json to_json(const CountReport& c) {
    json j = {{"R_plus", c.R_plus},         {"R_zero", c.R_zero},         {"total", c.total},
              {"vanish_min", c.vanish_min}, {"vanish_max", c.vanish_max}, {"exact_split", nullptr}};
    if (c.exact_split) j["exact_split"] = {{"cleav", c.exact_split->cleav}, {"vanish", c.exact_split->vanish}};
    return j;
}

json to_json(const Theorem5Bound& b) {
    json mu = json::array();
    for (const auto& [P, m] : b.mu_per_face) mu.push_back({{"covector", covector_json(P)}, {"mu", m}});
    return {{"sigma", b.sigma}, {"epsilon", b.epsilon}, {"R_zero", b.R_zero},
            {"mu_sum", b.mu_sum}, {"mu_per_face", mu},  {"total", b.total}};
}

json to_json(const Ledger& l) {
    json entries = json::array();
    for (const auto& e : l.entries) {
        json lambdas = json::array();
        for (const auto& [P, v] : e.lambdas) lambdas.push_back({{"covector", covector_json(P)}, {"lambda", v}});
        json j = {{"site", e.site}, {"depth", e.depth}, {"epsilon", e.epsilon}, {"lambdas", lambdas}, {"Lambda", e.Lambda}};
        if (e.depth > 0) {
            j["s"] = to_string(e.s);
            j["mu"] = e.mu;
            j["heights"] = heights_json(e.heights);
        }
        entries.push_back(j);
    }
    return {{"sigma", l.sigma}, {"entries", entries}, {"untreated", l.untreated}, {"final_bound", l.final_bound}};
}

}  // namespace nbif

#include <algorithm>
#include <deque>

#include "nbif/bound.hpp"

namespace nbif {

namespace {

constexpr std::size_t kMaxSites = 4096;

BiPoly shifted(const ChartNormalForm& cnf) { return BiPoly::monomial(1, cnf.d, 0) * cnf.F; }

long count_lattice_union(std::vector<std::pair<long, long>> iv) {
    std::sort(iv.begin(), iv.end());
    long count = 0, covered_to = 0;
    bool any = false;
    for (const auto& [lo, hi] : iv) {
        const long from = any ? std::max(lo, covered_to + 1) : lo;
        if (hi >= from) count += hi - from + 1;
        covered_to = any ? std::max(covered_to, hi) : hi;
        any = true;
    }
    return count;
}

long r_zero_of(const Face& face) {
    return count_real_roots(bad_face_b(face).derivative(), RootFilter::nonzero());
}

std::string covector_label(const Covector& P) {
    return "(" + std::to_string(P.p) + "," + std::to_string(P.q) + ")";
}

struct Site {
    std::string id;
    long depth;
    Chart chart;
    Rational s;
    long mu;
};

// Multiple nonzero real roots of chart.g: rational ones within the depth limit
// become sites, the others are counted as untreated.
void collect_sites(const Chart& chart, const std::string& prefix, long depth, long max_depth, std::deque<Site>& queue,
                   long& untreated) {
    for (const auto& sf : squarefree_decomposition(chart.g)) {
        if (sf.multiplicity < 2) continue;
        for (const auto& root : isolate_real_roots(sf.factor)) {
            if (root.sign() == 0) continue;
            if (root.is_rational() && depth <= max_depth && queue.size() < kMaxSites) {
                queue.push_back({prefix + ":" + to_string(root.rational_value()), depth, chart, root.rational_value(),
                                 sf.multiplicity});
            } else {
                ++untreated;
            }
        }
    }
}

}  // namespace

ChartNormalForm chart_normal_form(const Chart& chart, const Rational& s) {
    if (sgn(s) == 0) throw DegenerateInput("translation point must be nonzero");
    BiPoly inner;
    for (int k = 0; k <= chart.g.degree(); ++k) inner.add_term(0, k, chart.g.coeff(k));
    for (const auto& [e, c] : chart.h.terms()) inner.add_term(e.first + 1, e.second, c);
    ChartNormalForm cnf;
    cnf.d = chart.d_left;
    cnf.d_prime = chart.d_right;
    cnf.s = s;
    cnf.F = translate_y(inner, s);
    cnf.mu = -1;
    for (const auto& [e, c] : cnf.F.terms()) {
        if (e.first != 0) continue;
        if (cnf.mu < 0 || e.second < cnf.mu) cnf.mu = e.second;
    }
    if (cnf.mu <= 0) throw DegenerateInput("translation point is not a root of the chart polynomial");
    return cnf;
}

LocalPolygon local_polygon(const ChartNormalForm& cnf) {
    LocalPolygon lp;
    const BiPoly G = shifted(cnf);
    for (const auto& t : G.terms()) lp.support.push_back(t.first);
    // Minimal points, m ascending and n strictly descending.
    std::vector<Exponent> minimal;
    for (const auto& e : lp.support)
        if (minimal.empty() || e.second < minimal.back().second) minimal.push_back(e);
    for (const auto& e : minimal) {
        while (lp.vertices.size() >= 2) {
            const Exponent& a = lp.vertices[lp.vertices.size() - 2];
            const Exponent& b = lp.vertices.back();
            const long cross = (b.first - a.first) * (e.second - a.second) - (b.second - a.second) * (e.first - a.first);
            if (cross > 0) break;
            lp.vertices.pop_back();
        }
        lp.vertices.push_back(e);
    }
    for (std::size_t i = 0; i + 1 < lp.vertices.size(); ++i) {
        const Exponent& a = lp.vertices[i];
        const Exponent& b = lp.vertices[i + 1];
        lp.faces.push_back(make_face(G, primitive(a.second - b.second, b.first - a.first)));
    }
    return lp;
}

Heights heights(const ChartNormalForm& cnf) {
    std::vector<std::pair<long, long>> neg, zero;
    for (const auto& face : local_polygon(cnf).faces) {
        const long a = face.base.second, b = face.end().second;
        const std::pair<long, long> iv{std::min(a, b), std::max(a, b)};
        if (face.d < 0) neg.push_back(iv);
        if (face.d == 0) zero.push_back(iv);
    }
    Heights h;
    h.minus = std::max(0L, count_lattice_union(neg) - 1);
    h.zero = std::max(0L, count_lattice_union(zero) - 1);
    h.plus = cnf.mu - h.minus - h.zero;
    return h;
}

long multiple_root_excess(const UniPoly& p) {
    long n = 0;
    for (const auto& sf : squarefree_decomposition(p))
        if (sf.multiplicity >= 2) n += (sf.multiplicity - 1) * count_real_roots(sf.factor, RootFilter::nonzero());
    return n;
}

long mu_face(const Face& face) {
    if (face.cls != FaceClass::minus) throw WrongFaceClass("mu is defined on faces with d(P;f) < 0");
    return multiple_root_excess(face.phi);
}

Theorem5Bound theorem5_bound(const BiPoly& f) {
    if (f.is_constant()) throw ConstantPolynomial();
    Theorem5Bound b;
    b.sigma = static_cast<long>(critical_values(f).size());
    b.epsilon = r_plus(f) > 0 ? 1 : 0;
    b.R_zero = r_zero(f);
    for (const auto& face : faces_of_class(infinity_faces(f), FaceClass::minus)) {
        const long mu = mu_face(face);
        b.mu_per_face.emplace_back(face.P, mu);
        b.mu_sum += mu;
    }
    b.total = b.sigma + b.epsilon + b.R_zero + b.mu_sum;
    return b;
}

namespace {

std::vector<Covector> local_fan(const LocalPolygon& lp) {
    std::vector<Covector> chain{{1, 0}};
    for (const auto& face : lp.faces) chain.push_back(face.P);
    chain.push_back({0, 1});
    return unimodular_chain(chain);
}

Chart local_chart(const BiPoly& G, const std::vector<Covector>& rays, const Covector& Q) {
    const auto it = std::find(rays.begin(), rays.end(), Q);
    return chart_for_cone(G, Q, *(it + 1));
}

}  // namespace

long lambda_value(const Covector& Q, const ChartNormalForm& cnf) {
    if (Q.p <= 0 || Q.q <= 0) throw NonPositiveCovector("local covectors must have positive entries");
    const BiPoly G = shifted(cnf);
    const Face face = make_face(G, Q);
    if (face.d > 0) return 0;
    if (face.d == 0) return r_zero_of(face);
    const LocalPolygon lp = local_polygon(cnf);
    return multiple_root_excess(local_chart(G, local_fan(lp), Q).g);
}

Ledger refine_bound(const BiPoly& f, long max_depth) {
    if (f.is_constant()) throw ConstantPolynomial();
    max_depth = std::clamp(max_depth, 0L, kMaxRefineDepth);
    Ledger ledger;
    ledger.sigma = static_cast<long>(critical_values(f).size());

    std::deque<Site> queue;
    LedgerEntry first;
    first.site = "global";
    first.epsilon = r_plus(f) > 0 ? 1 : 0;
    first.Lambda = first.epsilon;
    const auto faces = infinity_faces(f);
    std::vector<Covector> required;
    for (const auto& face : faces) required.push_back(face.P);
    const AdmissibleFan fan = complete_fan(required);
    for (const auto& face : faces) {
        long lambda = 0;
        if (face.cls == FaceClass::zero) lambda = r_zero_of(face);
        if (face.cls == FaceClass::minus) {
            const Chart chart = chart_expansion(f, fan, fan.index_of(face.P));
            lambda = multiple_root_excess(chart.g);
            collect_sites(chart, covector_label(face.P), 1, max_depth, queue, ledger.untreated);
        }
        first.lambdas.emplace_back(face.P, lambda);
        first.Lambda += lambda;
    }
    ledger.entries.push_back(first);

    long Lambda = first.Lambda;
    while (!queue.empty()) {
        const Site site = queue.front();
        queue.pop_front();
        const ChartNormalForm cnf = chart_normal_form(site.chart, site.s);
        if (cnf.mu != site.mu) throw DegenerateInput("root multiplicity mismatch in translated coordinates");
        const LocalPolygon lp = local_polygon(cnf);
        const BiPoly G = shifted(cnf);
        const auto rays = local_fan(lp);

        LedgerEntry e;
        e.site = site.id;
        e.depth = site.depth;
        e.s = site.s;
        e.mu = site.mu;
        e.heights = heights(cnf);
        e.epsilon = e.heights.plus >= 2 ? 1 : 0;
        long sum = 0;
        for (const auto& face : lp.faces) {
            long lambda = 0;
            if (face.d == 0) lambda = r_zero_of(face);
            if (face.d < 0) {
                const Chart chart = local_chart(G, rays, face.P);
                lambda = multiple_root_excess(chart.g);
                collect_sites(chart, site.id + "/" + covector_label(face.P), site.depth + 1, max_depth, queue,
                              ledger.untreated);
            }
            e.lambdas.emplace_back(face.P, lambda);
            sum += lambda;
        }
        Lambda = Lambda - (site.mu - 1) + e.epsilon + sum;
        e.Lambda = Lambda;
        ledger.entries.push_back(e);
    }
    ledger.final_bound = ledger.sigma + Lambda;
    return ledger;
}

}  // namespace nbif

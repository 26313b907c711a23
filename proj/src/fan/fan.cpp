#include <algorithm>

#include "nbif/fan.hpp"

namespace nbif {

std::size_t AdmissibleFan::index_of(const Covector& P) const {
    auto it = std::find(rays.begin(), rays.end(), P);
    if (it == rays.end()) throw InvalidCovector("covector is not a ray of the fan");
    return static_cast<std::size_t>(it - rays.begin());
}

namespace {

// Open counter-clockwise arc from a to b.
bool strictly_between(const Covector& a, const Covector& c, const Covector& b) {
    if (c == a || c == b) return false;
    if (angle_less(a, b)) return angle_less(a, c) && angle_less(c, b);
    return angle_less(a, c) || angle_less(c, b);
}

// Hirzebruch-Jung style insertion: the ray w = (r a + b) / D with det(a, w) = 1.
void fill(const Covector& a, const Covector& b, std::vector<Covector>& out) {
    const long D = det(a, b);
    if (D == 1) return;
    if (D <= 0) {
        for (const Covector c : {Covector{-1, 0}, Covector{0, -1}}) {
            if (strictly_between(a, c, b)) {
                fill(a, c, out);
                out.push_back(c);
                fill(c, b, out);
                return;
            }
        }
        throw InvalidCovector("cannot subdivide a cone of angle >= pi");
    }
    for (long r = 1; r < D; ++r) {
        const long wp = r * a.p + b.p, wq = r * a.q + b.q;
        if (wp % D == 0 && wq % D == 0) {
            const Covector w{wp / D, wq / D};
            out.push_back(w);
            fill(w, b, out);
            return;
        }
    }
    throw InvalidCovector("non-primitive ray in fan completion");
}

}  // namespace

AdmissibleFan complete_fan(const std::vector<Covector>& required) {
    std::vector<Covector> base{{1, 0}, {0, 1}};
    for (const auto& r : required) {
        if (r.p >= 0 && r.q >= 0) throw InvalidCovector("required covector has no negative entry");
        const Covector c = primitive(r.p, r.q);
        if (std::find(base.begin(), base.end(), c) == base.end()) base.push_back(c);
    }
    std::sort(base.begin(), base.end(), angle_less);
    AdmissibleFan fan;
    for (std::size_t i = 0; i < base.size(); ++i) {
        fan.rays.push_back(base[i]);
        fill(base[i], base[(i + 1) % base.size()], fan.rays);
    }
    return fan;
}

std::vector<Covector> unimodular_chain(const std::vector<Covector>& chain) {
    std::vector<Covector> out;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        out.push_back(chain[i]);
        if (i + 1 < chain.size()) {
            if (det(chain[i], chain[i + 1]) <= 0) throw InvalidCovector("chain is not counter-clockwise");
            fill(chain[i], chain[i + 1], out);
        }
    }
    return out;
}

BiPoly Chart::reconstruct() const {
    BiPoly r;
    for (int k = 0; k <= g.degree(); ++k) r.add_term(d_left, d_right + k, g.coeff(k));
    for (const auto& [e, c] : h.terms()) r.add_term(d_left + e.first + 1, d_right + e.second, c);
    return r;
}

Chart chart_for_cone(const BiPoly& f, const Covector& left, const Covector& right) {
    Chart ch;
    ch.map = {left.p, left.q, right.p, right.q};
    ch.d_left = level(f, left);
    ch.d_right = level(f, right);
    std::vector<Rational> g;
    const BiPoly pulled = monomial_substitute(f, ch.map);
    for (const auto& [e, c] : pulled.terms()) {
        const long a = e.first - ch.d_left, b = e.second - ch.d_right;
        if (a == 0) {
            if (g.size() <= static_cast<std::size_t>(b)) g.resize(static_cast<std::size_t>(b) + 1);
            g[static_cast<std::size_t>(b)] += c;
        } else {
            ch.h.add_term(a - 1, b, c);
        }
    }
    ch.g = UniPoly(std::move(g));
    return ch;
}

Chart chart_expansion(const BiPoly& f, const AdmissibleFan& fan, std::size_t k) {
    Chart ch = chart_for_cone(f, fan.ray(k), fan.ray(k + 1));
    ch.index = k % fan.size();
    return ch;
}

}  // namespace nbif

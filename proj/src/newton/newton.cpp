#include <algorithm>
#include <numeric>

#include "nbif/newton.hpp"

namespace nbif {

Covector primitive(long p, long q) {
    const long g = std::gcd(p, q);
    if (g == 0) throw InvalidCovector("covector (0, 0)");
    return {p / g, q / g};
}

long det(const Covector& a, const Covector& b) { return a.p * b.q - a.q * b.p; }

namespace {

// 0 for angles in [0, pi), 1 for [pi, 2pi).
int half(const Covector& c) { return (c.q > 0 || (c.q == 0 && c.p > 0)) ? 0 : 1; }

long cross(const Exponent& o, const Exponent& a, const Exponent& b) {
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

}  // namespace

bool angle_less(const Covector& a, const Covector& b) {
    const int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return det(a, b) > 0;
}

const char* to_string(FaceClass c) {
    switch (c) {
        case FaceClass::plus:
            return "plus";
        case FaceClass::zero:
            return "zero";
        case FaceClass::minus:
            return "minus";
    }
    return "?";
}

NewtonPolygon newton_polygon(const BiPoly& f) {
    if (f.is_zero()) throw ZeroPolynomial();
    NewtonPolygon poly;
    for (const auto& [e, c] : f.terms()) poly.support.push_back(e);
    std::sort(poly.support.begin(), poly.support.end());
    const auto& pts = poly.support;
    if (pts.size() <= 2) {
        poly.vertices = pts;
        return poly;
    }
    // Andrew's monotone chain; collinear points dropped.
    std::vector<Exponent> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    poly.vertices = std::move(hull);
    return poly;
}

long level(const BiPoly& f, const Covector& P) {
    if (f.is_zero()) throw ZeroPolynomial();
    bool first = true;
    long d = 0;
    for (const auto& [e, c] : f.terms()) {
        const long v = P.p * e.first + P.q * e.second;
        if (first || v < d) d = v;
        first = false;
    }
    return d;
}

BiPoly face_function(const BiPoly& f, const Covector& P) {
    const long d = level(f, P);
    BiPoly r;
    for (const auto& [e, c] : f.terms())
        if (P.p * e.first + P.q * e.second == d) r.add_term(e.first, e.second, c);
    return r;
}

Face make_face(const BiPoly& f, const Covector& P) {
    const BiPoly fp = face_function(f, P);
    if (fp.size() < 2) throw DegenerateInput("Δ(P; f) is not one-dimensional");
    Face face;
    face.P = P;
    face.d = level(f, P);
    face.cls = face.d > 0 ? FaceClass::plus : (face.d == 0 ? FaceClass::zero : FaceClass::minus);
    face.base = fp.terms().begin()->first;
    const Exponent last = fp.terms().rbegin()->first;
    const long dm = last.first - face.base.first, dn = last.second - face.base.second;
    face.ell = std::gcd(dm, dn);
    face.dir = {dm / face.ell, dn / face.ell};
    std::vector<Rational> phi(static_cast<std::size_t>(face.ell) + 1);
    for (const auto& [e, c] : fp.terms()) {
        const long k = face.dir.first != 0 ? (e.first - face.base.first) / face.dir.first
                                           : (e.second - face.base.second) / face.dir.second;
        phi[static_cast<std::size_t>(k)] = c;
    }
    face.phi = UniPoly(std::move(phi));
    return face;
}

std::vector<Face> hull_faces(const BiPoly& f) {
    const NewtonPolygon poly = newton_polygon(f);
    std::vector<Face> out;
    const auto& v = poly.vertices;
    if (v.size() < 2) return out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Exponent& a = v[i];
        const Exponent& b = v[(i + 1) % v.size()];
        // For a segment the two iterations give the two opposite faces.
        // Inward normal of the counter-clockwise edge a -> b.
        const Covector P = primitive(-(b.second - a.second), b.first - a.first);
        out.push_back(make_face(f, P));
    }
    std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) { return angle_less(a.P, b.P); });
    return out;
}

std::vector<Face> infinity_faces(const BiPoly& f) {
    std::vector<Face> out;
    for (auto& face : hull_faces(f))
        if (face.P.p < 0 || face.P.q < 0) out.push_back(std::move(face));
    return out;
}

std::vector<Face> faces_of_class(const std::vector<Face>& faces, FaceClass c) {
    std::vector<Face> out;
    std::copy_if(faces.begin(), faces.end(), std::back_inserter(out), [c](const Face& f) { return f.cls == c; });
    return out;
}

UniPoly bad_face_b(const Face& face) {
    if (face.d != 0 || face.ell < 1) throw NotBadFace();
    // Face points are (k|q|, k|p|); read k off a nonzero entry.
    const bool by_n = face.P.p != 0;
    const long step = by_n ? std::labs(face.P.p) : std::labs(face.P.q);
    std::vector<Rational> b;
    for (long k = 0; k <= face.ell; ++k) {
        const Exponent e{face.base.first + k * face.dir.first, face.base.second + k * face.dir.second};
        const long coord = by_n ? e.second : e.first;
        if (coord % step != 0) throw NotBadFace();
        const auto idx = static_cast<std::size_t>(coord / step);
        if (b.size() <= idx) b.resize(idx + 1);
        b[idx] = face.phi.coeff(static_cast<int>(k));
    }
    return UniPoly(std::move(b));
}

}  // namespace nbif

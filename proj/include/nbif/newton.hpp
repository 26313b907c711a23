#pragma once

#include <vector>

#include "nbif/bivar.hpp"

namespace nbif {

/// Primitive integer covector (p, q), acting on exponents by pX + qY.
struct Covector {
    long p = 0;
    long q = 0;

    friend bool operator==(const Covector& a, const Covector& b) { return a.p == b.p && a.q == b.q; }
    friend bool operator!=(const Covector& a, const Covector& b) { return !(a == b); }
};

/// Divides by gcd(|p|, |q|); throws InvalidCovector for (0, 0).
Covector primitive(long p, long q);
long det(const Covector& a, const Covector& b);
/// Strict counter-clockwise order by angle measured from (1, 0), in [0, 2pi).
bool angle_less(const Covector& a, const Covector& b);

enum class FaceClass { plus, zero, minus };
const char* to_string(FaceClass c);

struct NewtonPolygon {
    std::vector<Exponent> support;   // sorted, distinct
    std::vector<Exponent> vertices;  // counter-clockwise, no collinear points
};

/// A one-dimensional face Δ(P; f) with its profile:
/// f_P = x^{base.m} y^{base.n} phi(x^{dir.m} y^{dir.n}).
struct Face {
    Covector P;
    long d = 0;
    FaceClass cls = FaceClass::zero;
    Exponent base;
    Exponent dir;
    UniPoly phi;
    long ell = 0;

    Exponent end() const { return {base.first + ell * dir.first, base.second + ell * dir.second}; }
};

NewtonPolygon newton_polygon(const BiPoly& f);

/// d(P; f): minimum of pm + qn over the support.
long level(const BiPoly& f, const Covector& P);
BiPoly face_function(const BiPoly& f, const Covector& P);
/// Face data for P; throws DegenerateInput when Δ(P; f) is not one-dimensional.
Face make_face(const BiPoly& f, const Covector& P);

/// Every one-dimensional face of Δ(f), counter-clockwise by covector.
std::vector<Face> hull_faces(const BiPoly& f);
/// Faces whose covector has a negative entry.
std::vector<Face> infinity_faces(const BiPoly& f);
std::vector<Face> faces_of_class(const std::vector<Face>& faces, FaceClass c);

/// Level-0 face polynomial b with f_P = b(x^{|q|} y^{|p|}): coefficient k
/// sits at the face point (k|q|, k|p|).
UniPoly bad_face_b(const Face& face);

}  // namespace nbif

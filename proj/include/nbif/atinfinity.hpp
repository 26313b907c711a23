#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nbif/criticality.hpp"
#include "nbif/fan.hpp"

namespace nbif {

struct HypothesisVerdict {
    bool nondegenerate_plus_minus = true;
    std::vector<Face> degenerate_faces;
    bool morse_bad_faces = true;
    std::vector<Face> non_morse_faces;

    bool ok() const { return nondegenerate_plus_minus && morse_bad_faces; }
};

class HypothesisViolated : public Error {
public:
    explicit HypothesisViolated(HypothesisVerdict v)
        : Error("nondegeneracy or Morse hypothesis fails"), verdict_(std::move(v)) {}
    const HypothesisVerdict& verdict() const { return verdict_; }

private:
    HypothesisVerdict verdict_;
};

struct ConditionII {
    bool holds = false;
    std::vector<Face> witnesses;
};

struct BadCriticalValue {
    Face face;
    RealAlgebraicNumber t_star;
    RealAlgebraicNumber value;
};

/// An element of B_f; provenance joins the tags critical, cond_ii and
/// cond_iii with '+'.
struct BifurcationValue {
    RealAlgebraicNumber value;
    std::string provenance;
};

struct CountReport {
    long R_plus = 0;
    long R_zero = 0;
    long total = 0;
    long vanish_min = 0;
    long vanish_max = 0;
    struct Split {
        long cleav;
        long vanish;
    };
    std::optional<Split> exact_split;
};

struct BifurcationReport {
    std::vector<RealAlgebraicNumber> sigma;
    ConditionII cond_ii;
    std::vector<BadCriticalValue> cond_iii;
    std::vector<BifurcationValue> b_set;  // ascending
};

/// For d != 0: f_P has a critical point in the open torus iff phi has a
/// nonzero real multiple root. Throws BadFaceNotAllowed when d = 0.
bool is_nondegenerate(const Face& face);
/// Every nonzero real critical point of b_P is non-degenerate. Throws NotBadFace.
bool is_morse_bad_face(const Face& face);

/// f - f(0, 0).
BiPoly reduced(const BiPoly& f);

/// Nondegeneracy is checked on the positive faces of f - f(0,0) together with
/// the negative faces of f; the Morse condition on the bad faces of f.
HypothesisVerdict check_hypotheses(const BiPoly& f);

ConditionII condition_ii(const BiPoly& f);
/// Nonzero real critical points of b_P on every bad face, with their values.
/// Throws MorseViolation when a bad face is not Morse.
std::vector<BadCriticalValue> condition_iii(const BiPoly& f);

/// Throws HypothesisViolated, or ConstantPolynomial.
BifurcationReport bifurcation_set(const BiPoly& f);

long r_plus(const BiPoly& f);
long r_zero(const BiPoly& f);

/// Throws HypothesisViolated or NonIsolatedSingularities.
CountReport counts(const BiPoly& f);

enum class Tangency { one_side, both_sides, isolated, undetermined };
const char* to_string(Tangency t);

/// Local shape of f = c near (0, s) on a chart with d_left = 0, where s != 0
/// is a double root of g(v) - c v^{-d_right}. Throws NotDoubleRoot.
Tangency classify_tangency(const Chart& chart, const RealAlgebraicNumber& c, const RealAlgebraicNumber& s);

}  // namespace nbif

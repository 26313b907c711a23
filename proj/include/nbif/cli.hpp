#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "nbif/bound.hpp"

namespace nbif {

/// expr := term (('+'|'-') term)*, term := factor ('*' factor | factor)*,
/// factor := rational | x | y | '(' expr ')' | factor '^' nat,
/// rational := int ('/' posint)?. A leading sign is allowed on a term that
/// starts an expression. Throws ParseError or NegativeExponent.
BiPoly parse_poly(const std::string& text);

enum class Verb { analyze, counts, bound, polygon };

struct Command {
    Verb verb = Verb::analyze;
    std::string polynomial_text;
    bool json = false;
    std::optional<std::string> svg_path;
    long refine_depth = 8;
};

/// Exit code 0 on success, 2 when the hypotheses fail (the bound is still
/// reported), 1 on parse, usage or other errors.
int run(const Command& cmd, std::ostream& out, std::ostream& err);

/// Argument parsing and dispatch for the nbif executable.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Working precision of displayed approximations: NBIF_PRECISION_BITS, default 256.
unsigned display_precision_bits();

nlohmann::json to_json(const RealAlgebraicNumber& a, unsigned bits);
nlohmann::json to_json(const Face& face);
nlohmann::json to_json(const HypothesisVerdict& v);
nlohmann::json to_json(const CountReport& c);
nlohmann::json to_json(const Theorem5Bound& b);
nlohmann::json to_json(const Ledger& l);

/// Lattice grid, support, hull edges colored by face class, covector arrows
/// and, when given, the fan rays in an inset. Byte-deterministic.
std::string render_svg(const NewtonPolygon& polygon, const std::vector<Face>& faces, const AdmissibleFan* fan);
/// Throws IoError.
void write_file(const std::string& path, const std::string& content);

}  // namespace nbif

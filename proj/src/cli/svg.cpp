#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "nbif/cli.hpp"

namespace nbif {

namespace {

constexpr double kScale = 40.0;
constexpr double kMargin = 50.0;
constexpr double kInset = 260.0;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

const char* face_color(const Face& f) {
    if (f.P.p >= 0 && f.P.q >= 0) return "#7f7f7f";
    switch (f.cls) {
        case FaceClass::plus: return "#1f77b4";
        case FaceClass::zero: return "#2ca02c";
        case FaceClass::minus: return "#d62728";
    }
    return "#000000";
}

std::string face_class(const Face& f) {
    if (f.P.p >= 0 && f.P.q >= 0) return "finite";
    return to_string(f.cls);
}

std::string label(const Covector& P) { return "(" + std::to_string(P.p) + "," + std::to_string(P.q) + ")"; }

}  // namespace

std::string render_svg(const NewtonPolygon& polygon, const std::vector<Face>& faces, const AdmissibleFan* fan) {
    long M = 1;
    for (const auto& e : polygon.support) M = std::max({M, e.first + 1, e.second + 1});
    const double side = 2 * kMargin + static_cast<double>(M) * kScale;
    const double width = side + (fan ? kInset : 0.0);
    auto px = [&](double m) { return kMargin + m * kScale; };
    auto py = [&](double n) { return side - kMargin - n * kScale; };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width) << "\" height=\""
       << num(side) << "\" viewBox=\"0 0 " << num(width) << " " << num(side) << "\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << num(width) << "\" height=\"" << num(side) << "\" fill=\"#ffffff\"/>\n";

    os << "<g class=\"grid\" stroke=\"#e0e0e0\" stroke-width=\"1\">\n";
    for (long k = 0; k <= M; ++k) {
        os << "<line x1=\"" << num(px(k)) << "\" y1=\"" << num(py(0)) << "\" x2=\"" << num(px(k)) << "\" y2=\""
           << num(py(M)) << "\"/>\n";
        os << "<line x1=\"" << num(px(0)) << "\" y1=\"" << num(py(k)) << "\" x2=\"" << num(px(M)) << "\" y2=\""
           << num(py(k)) << "\"/>\n";
    }
    os << "</g>\n";
    os << "<g class=\"axes\" stroke=\"#000000\" stroke-width=\"1.5\">\n";
    os << "<line x1=\"" << num(px(0)) << "\" y1=\"" << num(py(0)) << "\" x2=\"" << num(px(M)) << "\" y2=\""
       << num(py(0)) << "\"/>\n";
    os << "<line x1=\"" << num(px(0)) << "\" y1=\"" << num(py(0)) << "\" x2=\"" << num(px(0)) << "\" y2=\""
       << num(py(M)) << "\"/>\n";
    os << "</g>\n";

    // One line per geometric edge; a segment carries two faces.
    std::map<std::pair<Exponent, Exponent>, std::vector<const Face*>> edges;
    for (const auto& f : faces) {
        Exponent a = f.base, b = f.end();
        if (b < a) std::swap(a, b);
        edges[{a, b}].push_back(&f);
    }
    for (const auto& [ends, fs] : edges) {
        std::string cls = "edge";
        for (const Face* f : fs) cls += " " + face_class(*f);
        const char* color = fs.size() == 1 ? face_color(*fs[0]) : "#404040";
        os << "<line class=\"" << cls << "\" x1=\"" << num(px(ends.first.first)) << "\" y1=\""
           << num(py(ends.first.second)) << "\" x2=\"" << num(px(ends.second.first)) << "\" y2=\""
           << num(py(ends.second.second)) << "\" stroke=\"" << color << "\" stroke-width=\"3\"/>\n";
    }

    for (const auto& f : faces) {
        const double mx = (f.base.first + f.end().first) / 2.0, my = (f.base.second + f.end().second) / 2.0;
        const double len = std::hypot(static_cast<double>(f.P.p), static_cast<double>(f.P.q));
        const double tx = mx + 0.8 * f.P.p / len, ty = my + 0.8 * f.P.q / len;
        os << "<g class=\"covector " << face_class(f) << "\" data-p=\"" << f.P.p << "\" data-q=\"" << f.P.q
           << "\" stroke=\"" << face_color(f) << "\" fill=\"" << face_color(f) << "\">\n";
        os << "<line x1=\"" << num(px(mx)) << "\" y1=\"" << num(py(my)) << "\" x2=\"" << num(px(tx)) << "\" y2=\""
           << num(py(ty)) << "\" stroke-width=\"2\"/>\n";
        os << "<circle cx=\"" << num(px(tx)) << "\" cy=\"" << num(py(ty)) << "\" r=\"3\"/>\n";
        os << "<text x=\"" << num(px(tx) + 4) << "\" y=\"" << num(py(ty) - 4)
           << "\" font-family=\"monospace\" font-size=\"11\" stroke=\"none\">" << label(f.P) << " d=" << f.d
           << "</text>\n";
        os << "</g>\n";
    }

    os << "<g class=\"support\" fill=\"#000000\">\n";
    for (const auto& e : polygon.support)
        os << "<circle cx=\"" << num(px(e.first)) << "\" cy=\"" << num(py(e.second)) << "\" r=\"4\"/>\n";
    os << "</g>\n";

    if (fan) {
        const double cx = side + kInset / 2, cy = side / 2, R = std::min(kInset, side) / 2 - 40;
        os << "<g class=\"fan\" stroke=\"#9467bd\" fill=\"#9467bd\">\n";
        for (const auto& r : fan->rays) {
            const double len = std::hypot(static_cast<double>(r.p), static_cast<double>(r.q));
            const double ex = cx + R * r.p / len, ey = cy - R * r.q / len;
            os << "<line class=\"ray\" x1=\"" << num(cx) << "\" y1=\"" << num(cy) << "\" x2=\"" << num(ex)
               << "\" y2=\"" << num(ey) << "\" stroke-width=\"1.5\"/>\n";
            os << "<text x=\"" << num(ex + 3) << "\" y=\"" << num(ey - 3)
               << "\" font-family=\"monospace\" font-size=\"10\" stroke=\"none\">" << label(r) << "</text>\n";
        }
        os << "</g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << content;
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace nbif

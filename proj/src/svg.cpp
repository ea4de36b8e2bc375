#include "dendrowave/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace dendrowave {

std::string xml_escape(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\'': out += "&apos;"; break;
        default: out += c;
        }
    }
    return out;
}

namespace {

std::string num(double v) {
    // fixed display precision keeps documents byte-stable
    return format_double(std::abs(v) < 1e-9 ? 0.0 : v, 6);
}

struct SvgDoc {
    std::ostringstream body;

    void line(double x1, double y1, double x2, double y2, const char* style) {
        body << "  <line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\"" << num(x2)
             << "\" y2=\"" << num(y2) << "\" " << style << "/>\n";
    }
    void ellipse(double cx, double cy, double rx, double ry, const char* style,
                 double rotate_deg = 0.0) {
        body << "  <ellipse cx=\"" << num(cx) << "\" cy=\"" << num(cy) << "\" rx=\"" << num(rx)
             << "\" ry=\"" << num(ry) << "\" " << style;
        if (rotate_deg != 0.0)
            body << " transform=\"rotate(" << num(rotate_deg) << ' ' << num(cx) << ' '
                 << num(cy) << ")\"";
        body << "/>\n";
    }
    void circle(double cx, double cy, double r, const char* style) {
        body << "  <circle cx=\"" << num(cx) << "\" cy=\"" << num(cy) << "\" r=\"" << num(r)
             << "\" " << style << "/>\n";
    }
    void path(const std::string& d, const char* style) {
        body << "  <path d=\"" << d << "\" " << style << "/>\n";
    }
    void text(double x, double y, const std::string& content, const char* style) {
        body << "  <text x=\"" << num(x) << "\" y=\"" << num(y) << "\" " << style << '>'
             << xml_escape(content) << "</text>\n";
    }

    std::string finish(double width, double height, const std::string& title) const {
        std::ostringstream out;
        out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
            << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width)
            << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(width) << ' '
            << num(height) << "\">\n";
        if (!title.empty()) out << "  <title>" << xml_escape(title) << "</title>\n";
        out << body.str() << "</svg>\n";
        return out.str();
    }
};

constexpr const char* kStroke = "fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"";
constexpr const char* kFill = "fill=\"black\" stroke=\"none\"";
constexpr const char* kThin = "fill=\"none\" stroke=\"black\" stroke-width=\"1\"";

} // namespace

std::string render_face_svg(const FaceVector& f, const std::string& title,
                            const FaceRemap& remap) {
    for (double v : f)
        if (v < 0.0 || v > 1.0)
            fail(errc::invalid_argument, "face attributes must lie in [0,1]");

    SvgDoc doc;
    const double cx = 100.0, cy = 105.0;

    // 1 area, 2 shape
    const double r = 45.0 + 30.0 * f[0];
    const double rx = r * (0.75 + 0.45 * (1.0 - f[1]));
    const double ry = r * (0.75 + 0.45 * f[1]);
    doc.ellipse(cx, cy, rx, ry, kStroke);

    // 3 nose
    const double nose_len = 8.0 + 22.0 * f[2];
    doc.line(cx, cy - 8.0, cx, cy - 8.0 + nose_len, kThin);

    // 4 mouth location, 5 smile curve, 6 mouth width
    const double mouth_y = cy + 0.35 * ry + 0.35 * ry * f[3];
    const double mouth_w = 8.0 + 0.45 * rx * f[5];
    const double curve = (f[4] - 0.5) * 36.0;
    {
        std::ostringstream d;
        d << 'M' << num(cx - mouth_w) << ' ' << num(mouth_y) << " Q" << num(cx) << ' '
          << num(mouth_y + curve) << ' ' << num(cx + mouth_w) << ' ' << num(mouth_y);
        doc.path(d.str(), kThin);
    }

    // 7 eye location, 8 separation, 9 angle, 10 shape, 11 width
    const double eye_y = cy - 0.25 * ry - 0.35 * ry * f[6];
    const double eye_dx = 0.2 * rx + 0.35 * rx * f[7];
    const double eye_ang = (f[8] - 0.5) * 40.0;
    const double eye_rx = 5.0 + 10.0 * f[10];
    const double eye_ry = eye_rx * (0.3 + 0.7 * f[9]);
    doc.ellipse(cx - eye_dx, eye_y, eye_rx, eye_ry, kThin, -eye_ang);
    doc.ellipse(cx + eye_dx, eye_y, eye_rx, eye_ry, kThin, eye_ang);

    // 12 pupil location
    const double pupil_dx = (f[11] - 0.5) * eye_rx;
    doc.circle(cx - eye_dx + pupil_dx, eye_y, 1.8, kFill);
    doc.circle(cx + eye_dx + pupil_dx, eye_y, 1.8, kFill);

    // 13 eyebrow location, 14 angle, 15 width
    const double brow_y = eye_y - eye_ry - 4.0 - 10.0 * f[12];
    const double brow_ang = (f[13] - 0.5) * 0.9; // radians
    const double brow_w = 6.0 + 10.0 * f[14];
    for (int side : {-1, 1}) {
        const double bx = cx + side * eye_dx;
        const double dx = brow_w * std::cos(brow_ang);
        const double dy = brow_w * std::sin(brow_ang) * side;
        doc.line(bx - dx, brow_y + dy, bx + dx, brow_y - dy, kStroke);
    }

    std::string full_title = title;
    if (remap.applied) {
        full_title += " [remapped from " + format_double(remap.lo, 6) + ".." +
                      format_double(remap.hi, 6) + "]";
    }
    return doc.finish(200.0, 200.0, full_title);
}

std::string render_dendrogram_svg(const Dendrogram& dend,
                                  const std::vector<std::string>& leaf_labels) {
    const std::size_t n = dend.n_leaves();
    const double margin = 40.0;
    const double step = 50.0;
    const double width = 2.0 * margin + step * static_cast<double>(n - 1);
    const double height = 320.0;
    const double base_y = height - margin;
    const double top_y = margin;

    double max_h = dend.merges().back().height;
    if (max_h <= 0.0) max_h = 1.0;
    auto y_of = [&](double h) { return base_y - (base_y - top_y) * (h / max_h); };

    // leaf x positions in display order
    std::vector<double> leaf_x(n, 0.0);
    const auto& order = dend.leaf_order();
    for (std::size_t pos = 0; pos < n; ++pos)
        leaf_x[order[pos]] = margin + step * static_cast<double>(pos);

    SvgDoc doc;
    std::vector<double> node_x(dend.root_rank(), 0.0);
    std::vector<double> node_y(dend.root_rank(), 0.0);
    auto pos_of = [&](const NodeRef& ref) -> std::pair<double, double> {
        if (ref.leaf) return {leaf_x[ref.index], base_y};
        return {node_x[ref.index - 1], node_y[ref.index - 1]};
    };

    for (std::size_t q = 1; q <= dend.root_rank(); ++q) {
        const Merge& m = dend.merge(q);
        const auto [lx, ly] = pos_of(m.left);
        const auto [rx, ry] = pos_of(m.right);
        const double y = y_of(m.height);
        doc.line(lx, ly, lx, y, kStroke);
        doc.line(rx, ry, rx, y, kStroke);
        doc.line(lx, y, rx, y, kStroke);
        node_x[q - 1] = 0.5 * (lx + rx);
        node_y[q - 1] = y;
        doc.text(node_x[q - 1] + 3.0, y - 3.0, "q" + std::to_string(q),
                 "font-size=\"10\" fill=\"black\"");
    }
    for (std::size_t i = 0; i < n; ++i) {
        const std::string label =
            i < leaf_labels.size() ? leaf_labels[i] : std::to_string(i + 1);
        doc.text(leaf_x[i] - 4.0, base_y + 14.0, label, "font-size=\"10\" fill=\"black\"");
    }
    return doc.finish(width, height, "dendrogram (" + std::to_string(n) + " leaves)");
}

} // namespace dendrowave

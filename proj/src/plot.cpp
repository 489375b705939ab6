#include "oddkit/plot.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include "oddkit/errors.hpp"

namespace oddkit {

namespace {

struct MarkerClass {
    const char* id;
    const char* label;
    const char* color;
};

// truth * 2 + predicted indexes this table.
constexpr std::array<MarkerClass, 4> kClasses = {{
    {"inlier-ok", "inlier, predicted inlier", "#4878cf"},
    {"inlier-flagged", "inlier, predicted outlier", "#ee854a"},
    {"outlier-missed", "outlier, predicted inlier", "#d65f5f"},
    {"outlier-ok", "outlier, predicted outlier", "#6acc64"},
}};

void emit_marker(std::ostream& out, std::size_t cls, double x, double y) {
    const char* color = kClasses[cls].color;
    switch (cls) {
        case 0:  // circle
            out << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"3.5\" fill=\"" << color
                << "\" fill-opacity=\"0.75\"/>\n";
            break;
        case 1:  // cross
            out << "<path d=\"M" << x - 4 << ' ' << y - 4 << " L" << x + 4 << ' ' << y + 4
                << " M" << x - 4 << ' ' << y + 4 << " L" << x + 4 << ' ' << y - 4
                << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
            break;
        case 2:  // triangle
            out << "<path d=\"M" << x << ' ' << y - 5 << " L" << x + 4.5 << ' ' << y + 4
                << " L" << x - 4.5 << ' ' << y + 4 << " Z\" fill=\"" << color << "\"/>\n";
            break;
        default:  // square
            out << "<rect x=\"" << x - 3.5 << "\" y=\"" << y - 3.5
                << "\" width=\"7\" height=\"7\" fill=\"" << color << "\"/>\n";
            break;
    }
}

}  // namespace

void emit_scatter_plot(const DataMatrix& points, const LabelVector& truth,
                       const LabelVector& predicted, const std::string& out_path) {
    points.validate("emit_scatter_plot: points");
    if (points.cols() != 2)
        throw std::invalid_argument("emit_scatter_plot: plotting requires exactly 2 features");
    if (truth.size() != points.rows() || predicted.size() != points.rows())
        throw std::invalid_argument("emit_scatter_plot: label length mismatch");

    const double width = 640, height = 560, margin = 40;
    double xmin = points(0, 0), xmax = xmin, ymin = points(0, 1), ymax = ymin;
    for (std::size_t r = 0; r < points.rows(); ++r) {
        xmin = std::min(xmin, points(r, 0));
        xmax = std::max(xmax, points(r, 0));
        ymin = std::min(ymin, points(r, 1));
        ymax = std::max(ymax, points(r, 1));
    }
    const double xpad = std::max((xmax - xmin) * 0.05, 1e-9);
    const double ypad = std::max((ymax - ymin) * 0.05, 1e-9);
    xmin -= xpad, xmax += xpad, ymin -= ypad, ymax += ypad;

    auto sx = [&](double x) { return margin + (x - xmin) / (xmax - xmin) * (width - 2 * margin); };
    auto sy = [&](double y) {
        return height - margin - (y - ymin) / (ymax - ymin) * (height - 2 * margin);
    };

    std::array<std::ostringstream, 4> groups;
    std::array<std::size_t, 4> counts{};
    for (std::size_t r = 0; r < points.rows(); ++r) {
        const auto cls = static_cast<std::size_t>(truth[r] * 2 + predicted[r]);
        emit_marker(groups[cls], cls, sx(points(r, 0)), sy(points(r, 1)));
        ++counts[cls];
    }

    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw DataError("cannot write '" + out_path + "'");
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << width - 2 * margin
        << "\" height=\"" << height - 2 * margin
        << "\" fill=\"none\" stroke=\"#cccccc\"/>\n";

    for (std::size_t cls = 0; cls < 4; ++cls) {
        if (counts[cls] == 0) continue;
        out << "<g class=\"" << kClasses[cls].id << "\">\n" << groups[cls].str() << "</g>\n";
    }

    // Legend for the classes actually present.
    double ly = margin + 10;
    out << "<g class=\"legend\" font-family=\"sans-serif\" font-size=\"12\">\n";
    for (std::size_t cls = 0; cls < 4; ++cls) {
        if (counts[cls] == 0) continue;
        std::ostringstream mark;
        emit_marker(mark, cls, width - margin - 170, ly - 4);
        out << mark.str() << "<text x=\"" << width - margin - 158 << "\" y=\"" << ly
            << "\">" << kClasses[cls].label << " (" << counts[cls] << ")</text>\n";
        ly += 18;
    }
    out << "</g>\n</svg>\n";
    if (!out) throw DataError("failed writing '" + out_path + "'");
}

}  // namespace oddkit

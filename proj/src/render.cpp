#include "schubert/render.hpp"

#include <sstream>

namespace schubert {

namespace {

constexpr int U = 40;     // cell edge, px
constexpr int MARGIN = U; // label strip

struct Svg {
    std::ostringstream out;

    void line(double x1, double y1, double x2, double y2) {
        out << "  <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2
            << "\" y2=\"" << y2 << "\"/>\n";
    }
    // Quarter circle of radius U/2; sweep=1 keeps the bulge toward the cell
    // center for both elbow orientations.
    void arc(double x1, double y1, double x2, double y2) {
        out << "  <path d=\"M " << x1 << " " << y1 << " A " << U / 2.0 << " "
            << U / 2.0 << " 0 0 1 " << x2 << " " << y2 << "\"/>\n";
    }
};

void draw_tile(Svg& svg, Tile t, double x, double y) {
    double m = U / 2.0;
    switch (t) {
    case Tile::Blank:
        break;
    case Tile::Horizontal:
        svg.line(x, y + m, x + U, y + m);
        break;
    case Tile::Vertical:
        svg.line(x + m, y, x + m, y + U);
        break;
    case Tile::Cross:
        svg.line(x, y + m, x + U, y + m);
        svg.line(x + m, y, x + m, y + U);
        break;
    case Tile::ElbowSE: // south edge to east edge
        svg.arc(x + m, y + U, x + U, y + m);
        break;
    case Tile::ElbowNW: // north edge to west edge
        svg.arc(x + m, y, x, y + m);
        break;
    }
}

std::string render(const Bpd& d, const std::set<std::pair<int, int>>* marks) {
    int n = d.size(), ws = d.window_start();
    int side = 2 * MARGIN + n * U;
    Svg svg;
    svg.out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side
            << "\" height=\"" << side << "\" viewBox=\"0 0 " << side << " "
            << side << "\">\n";
    svg.out << "<g fill=\"#f6c\" fill-opacity=\"0.45\" stroke=\"none\">\n";
    if (marks)
        for (auto& [r, c] : *marks)
            svg.out << "  <rect x=\"" << MARGIN + (c - ws) * U << "\" y=\""
                    << MARGIN + (r - ws) * U << "\" width=\"" << U
                    << "\" height=\"" << U << "\"/>\n";
    svg.out << "</g>\n";
    svg.out << "<g stroke=\"#ccc\" stroke-width=\"1\" fill=\"none\">\n";
    for (int i = 0; i <= n; ++i) {
        svg.line(MARGIN, MARGIN + i * U, MARGIN + n * U, MARGIN + i * U);
        svg.line(MARGIN + i * U, MARGIN, MARGIN + i * U, MARGIN + n * U);
    }
    svg.out << "</g>\n";
    svg.out << "<g stroke=\"#1b4f9c\" stroke-width=\"3\" fill=\"none\" "
               "stroke-linecap=\"round\">\n";
    for (int r = ws; r <= d.window_end(); ++r)
        for (int c = ws; c <= d.window_end(); ++c)
            draw_tile(svg, d.at(r, c), MARGIN + (c - ws) * U, MARGIN + (r - ws) * U);
    svg.out << "</g>\n";
    svg.out << "<g font-family=\"monospace\" font-size=\"13\" fill=\"#666\" "
               "text-anchor=\"middle\">\n";
    for (int i = 0; i < n; ++i) {
        svg.out << "  <text x=\"" << MARGIN + i * U + U / 2 << "\" y=\""
                << MARGIN - 8 << "\">" << ws + i << "</text>\n";
        svg.out << "  <text x=\"" << MARGIN - 14 << "\" y=\""
                << MARGIN + i * U + U / 2 + 4 << "\">" << ws + i << "</text>\n";
    }
    svg.out << "</g>\n</svg>\n";
    return svg.out.str();
}

} // namespace

std::string bpd_to_svg(const Bpd& d) { return render(d, nullptr); }

std::string marked_bpd_to_svg(const MarkedBpd& m) { return render(m.bpd, &m.marks); }

} // namespace schubert

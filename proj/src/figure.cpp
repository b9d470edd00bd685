#include "contspec/figure.hpp"

#include <cmath>
#include <map>
#include <sstream>

namespace contspec {

namespace {

double approx(const Rat& r) { return static_cast<double>(r.num()) / static_cast<double>(r.den()); }

struct Layout {
    std::map<ColumnIndex, int> slot; // column index -> 0-based x slot
    double x_margin = 50, y_margin = 40;
    double column_width = 64, unit_height = 56;
    double y_max = 3.0;

    double x(ColumnIndex c) const { return x_margin + slot.at(c) * column_width; }
    double y(const Rat& v) const { return y_margin + (y_max - approx(v)) * unit_height; }
    double width() const { return 2 * x_margin + (slot.empty() ? 0 : (slot.size() - 1) * column_width); }
    double height() const { return 2 * y_margin + y_max * unit_height + 20; }
};

Layout layout_for(const ColumnSpace& space) {
    Layout l;
    int i = 0;
    for (const auto& [index, column] : space.columns) {
        l.slot[index] = i++;
        for (const Interval& part : column.parts())
            l.y_max = std::max(l.y_max, approx(part.hi));
    }
    return l;
}

void endpoint_marker(std::ostringstream& out, double x, double y, bool closed) {
    out << "  <circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"3.2\" stroke=\"black\" fill=\""
        << (closed ? "black" : "white") << "\"/>\n";
}

std::string part_node(ColumnIndex c, std::size_t k) {
    const std::string tag = c < 0 ? "m" + std::to_string(-c) : std::to_string(c);
    return "c" + tag + "_" + std::to_string(k);
}

} // namespace

std::string render_svg(const ColumnSpace& space, const PiecewiseMap& map,
                       const std::vector<Witness>& witnesses) {
    const Layout l = layout_for(space);
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << l.width() << "\" height=\""
        << l.height() << "\" font-family=\"monospace\" font-size=\"12\">\n";
    out << "  <defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" "
           "markerWidth=\"7\" markerHeight=\"7\" orient=\"auto-start-reverse\">"
           "<path d=\"M 0 0 L 10 5 L 0 10 z\"/></marker></defs>\n";

    for (const auto& [index, column] : space.columns) {
        const double x = l.x(index);
        out << "  <text x=\"" << x << "\" y=\"" << l.height() - 12
            << "\" text-anchor=\"middle\">" << index << "</text>\n";
        for (const Interval& part : column.parts()) {
            const double y_lo = l.y(part.lo), y_hi = l.y(part.hi);
            if (!part.degenerate()) {
                out << "  <line x1=\"" << x << "\" y1=\"" << y_lo << "\" x2=\"" << x << "\" y2=\""
                    << y_hi << "\" stroke=\"black\" stroke-width=\"2.5\"/>\n";
                endpoint_marker(out, x, y_hi, part.hi_closed);
            }
            endpoint_marker(out, x, y_lo, part.lo_closed);
        }
    }

    for (const auto& [column, pieces] : map.columns()) {
        for (const Piece& p : pieces) {
            const double x1 = l.x(column) + 6;
            const double x2 = l.x(p.target) - 6;
            const double y1 = (l.y(p.source.lo) + l.y(p.source.hi)) / 2;
            const double y2 = (l.y(p.image().lo) + l.y(p.image().hi)) / 2;
            out << "  <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
                << "\" stroke=\"steelblue\" stroke-width=\"1.2\" marker-end=\"url(#arrow)\"/>\n";
            if (p.offset != Rat(0)) {
                out << "  <text x=\"" << (x1 + x2) / 2 << "\" y=\"" << (y1 + y2) / 2 - 4
                    << "\" fill=\"steelblue\" text-anchor=\"middle\">"
                    << (p.offset > Rat(0) ? "+" : "") << p.offset.str() << "</text>\n";
            }
        }
    }

    for (const Witness& w : witnesses) {
        if (!l.slot.count(w.column))
            continue;
        const double x = l.x(w.column), y = l.y(w.point);
        out << "  <path d=\"M " << x - 4 << " " << y - 4 << " L " << x + 4 << " " << y + 4 << " M "
            << x - 4 << " " << y + 4 << " L " << x + 4 << " " << y - 4
            << "\" stroke=\"red\" stroke-width=\"2\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string render_dot(const ColumnSpace& space, const PiecewiseMap& map) {
    std::ostringstream out;
    out << "digraph piecewise_map {\n  rankdir=LR;\n  node [shape=box, fontname=\"monospace\"];\n";
    std::map<ColumnIndex, std::vector<Interval>> parts;
    for (const auto& [index, column] : space.columns) {
        parts[index] = column.parts();
        for (std::size_t k = 0; k < column.parts().size(); ++k) {
            out << "  " << part_node(index, k) << " [label=\"" << index << " : "
                << column.parts()[k].str() << "\"];\n";
        }
    }
    const auto part_index = [&](ColumnIndex c, const Rat& point) -> std::size_t {
        const auto& list = parts.at(c);
        for (std::size_t k = 0; k < list.size(); ++k) {
            if (list[k].contains(point))
                return k;
        }
        throw std::logic_error("piece image outside target column");
    };
    for (const auto& [column, pieces] : map.columns()) {
        for (const Piece& p : pieces) {
            const std::size_t from = part_index(column, p.source.lo);
            const std::size_t to = part_index(p.target, p.image().lo);
            out << "  " << part_node(column, from) << " -> " << part_node(p.target, to)
                << " [label=\"" << p.source.str();
            if (p.offset != Rat(0))
                out << " " << (p.offset > Rat(0) ? "+" : "") << p.offset.str();
            out << "\"];\n";
        }
    }
    out << "}\n";
    return out.str();
}

} // namespace contspec

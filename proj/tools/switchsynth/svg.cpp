#include "switchsynth/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace ssyn::cli {

namespace {

struct Pt {
    Rational x, y;
    bool operator==(const Pt& o) const { return x == o.x && y == o.y; }
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

// Angular order around c without trigonometry: split into halves by the
// vertical direction, then compare by cross product.
bool angle_less(const Pt& a, const Pt& b, const Pt& c) {
    auto half = [&](const Pt& p) {
        if (p.y != c.y) return p.y > c.y ? 0 : 1;
        return p.x >= c.x ? 0 : 1;
    };
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    Rational cross = (a.x - c.x) * (b.y - c.y) - (a.y - c.y) * (b.x - c.x);
    return cross > 0;
}

struct PieceShape {
    std::vector<Pt> verts;                 // polygon, point, or segment
    std::vector<bool> edge_dashed;         // per edge (verts[i] -> verts[i+1])
    std::vector<bool> edge_boxclip;        // artificial box edge
};

std::optional<Pt> solve2(const Rational& a1, const Rational& b1, const Rational& c1,
                         const Rational& a2, const Rational& b2, const Rational& c2) {
    Rational det = a1 * b2 - a2 * b1;
    if (det == 0) return std::nullopt;
    return Pt{(c1 * b2 - c2 * b1) / det, (a1 * c2 - a2 * c1) / det};
}

std::optional<PieceShape> shape_of(const ConvexPoly& piece, const PlotSpec& spec) {
    if (piece.is_empty()) return std::nullopt;
    struct Row {
        Rational a, b, c;  // a x + b y >= c  (closure), or == for Eq
        bool strict;
        bool from_box;
        Rel rel;
    };
    std::vector<Row> rows;
    for (const auto& lc : piece.constraints())
        rows.push_back({lc.coeff(0), lc.coeff(1), lc.rhs(), lc.rel() == Rel::Gt, false, lc.rel()});
    rows.push_back({Rational(1), Rational(0), spec.xmin, false, true, Rel::Ge});
    rows.push_back({Rational(-1), Rational(0), -spec.xmax, false, true, Rel::Ge});
    rows.push_back({Rational(0), Rational(1), spec.ymin, false, true, Rel::Ge});
    rows.push_back({Rational(0), Rational(-1), -spec.ymax, false, true, Rel::Ge});

    auto closed_ok = [&](const Pt& p) {
        for (const auto& r : rows) {
            Rational v = r.a * p.x + r.b * p.y;
            if (r.rel == Rel::Eq ? v != r.c : v < r.c) return false;
        }
        return true;
    };

    std::vector<Pt> verts;
    for (size_t i = 0; i < rows.size(); ++i) {
        for (size_t j = i + 1; j < rows.size(); ++j) {
            auto p = solve2(rows[i].a, rows[i].b, rows[i].c, rows[j].a, rows[j].b, rows[j].c);
            if (!p || !closed_ok(*p)) continue;
            if (std::find(verts.begin(), verts.end(), *p) == verts.end()) verts.push_back(*p);
        }
    }
    if (verts.empty()) return std::nullopt;  // nothing visible inside the box

    PieceShape shape;
    if (verts.size() > 2) {
        Pt c{Rational(0), Rational(0)};
        for (const auto& v : verts) {
            c.x += v.x;
            c.y += v.y;
        }
        c.x /= Rational(static_cast<long>(verts.size()));
        c.y /= Rational(static_cast<long>(verts.size()));
        std::sort(verts.begin(), verts.end(),
                  [&](const Pt& a, const Pt& b) { return angle_less(a, b, c); });
    }
    shape.verts = verts;
    const size_t k = verts.size();
    if (k >= 2) {
        for (size_t i = 0; i < (k == 2 ? 1 : k); ++i) {
            const Pt& u = verts[i];
            const Pt& v = verts[(i + 1) % k];
            bool dashed = false, boxclip = false, found = false;
            for (const auto& r : rows) {
                Rational vu = r.a * u.x + r.b * u.y;
                Rational vv = r.a * v.x + r.b * v.y;
                if (vu == r.c && vv == r.c) {
                    dashed = r.strict;
                    boxclip = r.from_box;
                    found = true;
                    if (!r.from_box) break;  // prefer a real constraint
                }
            }
            (void)found;
            shape.edge_dashed.push_back(dashed);
            shape.edge_boxclip.push_back(boxclip);
        }
    }
    return shape;
}

}  // namespace

Region section_to_plane(const Region& r, const PlotSpec& spec, const VarSpacePtr& plane) {
    const VarSpace& space = *r.space();
    int ix = -1, iy = -1;
    std::vector<std::optional<Rational>> fix(space.dim());
    for (size_t i = 0; i < space.dim(); ++i) {
        std::string dn = space.display_name(i);
        if (dn == spec.var_x) {
            ix = static_cast<int>(i);
        } else if (dn == spec.var_y) {
            iy = static_cast<int>(i);
        } else {
            auto it = spec.fixes.find(dn);
            if (it == spec.fixes.end())
                throw std::runtime_error("plot: variable '" + dn +
                                         "' is neither plotted nor fixed");
            fix[i] = it->second;
        }
    }
    if (ix < 0 || iy < 0) throw std::runtime_error("plot: plot variables not found in region");

    std::vector<ConvexPoly> pieces;
    for (const auto& p : r.pieces()) {
        std::vector<LinearConstraint> cs;
        for (const auto& c : p.constraints()) {
            Rational rhs = c.rhs();
            for (size_t i = 0; i < space.dim(); ++i)
                if (fix[i]) rhs -= c.coeff(i) * *fix[i];
            cs.emplace_back(std::vector<Rational>{c.coeff(ix), c.coeff(iy)}, c.rel(), rhs);
        }
        ConvexPoly q(plane, std::move(cs));
        if (!q.is_empty()) pieces.push_back(std::move(q));
    }
    return reduce_region(Region(plane, std::move(pieces)));
}

std::string render_svg(
    const std::vector<std::pair<std::string, std::vector<PlotLayer>>>& location_layers,
    const PlotSpec& spec) {
    const double canvas = 600.0, label_h = 22.0, margin = 30.0;
    const double panel_h = canvas + label_h;
    const double width = canvas;
    const double height = panel_h * std::max<size_t>(1, location_layers.size());

    double xmin = spec.xmin.get_d(), xmax = spec.xmax.get_d();
    double ymin = spec.ymin.get_d(), ymax = spec.ymax.get_d();
    if (xmax <= xmin || ymax <= ymin) throw std::runtime_error("plot: empty bounding box");
    double sx = (canvas - 2 * margin) / (xmax - xmin);
    double sy = (canvas - 2 * margin) / (ymax - ymin);

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) + "\" height=\"" +
           fmt(height) + "\" viewBox=\"0 0 " + fmt(width) + " " + fmt(height) + "\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"" + fmt(width) + "\" height=\"" + fmt(height) +
           "\" fill=\"white\"/>\n";

    auto plane = VarSpace::plain({"__px", "__py"});

    size_t panel = 0;
    for (const auto& [loc, layers] : location_layers) {
        const double top = panel * panel_h + label_h;
        auto X = [&](const Rational& x) { return margin + (x.get_d() - xmin) * sx; };
        auto Y = [&](const Rational& y) { return top + canvas - margin - (y.get_d() - ymin) * sy; };

        svg += "<text x=\"8\" y=\"" + fmt(panel * panel_h + 15.0) +
               "\" font-family=\"sans-serif\" font-size=\"13\">" + loc + "</text>\n";

        // Axes (when visible) and frame.
        svg += "<rect x=\"" + fmt(margin) + "\" y=\"" + fmt(top + margin - label_h + label_h) +
               "\" width=\"" + fmt(canvas - 2 * margin) + "\" height=\"" +
               fmt(canvas - 2 * margin) + "\" fill=\"none\" stroke=\"#888\"/>\n";
        if (xmin < 0 && xmax > 0)
            svg += "<line x1=\"" + fmt(X(Rational(0))) + "\" y1=\"" + fmt(top + margin) +
                   "\" x2=\"" + fmt(X(Rational(0))) + "\" y2=\"" + fmt(top + canvas - margin) +
                   "\" stroke=\"#bbb\"/>\n";
        if (ymin < 0 && ymax > 0)
            svg += "<line x1=\"" + fmt(margin) + "\" y1=\"" + fmt(Y(Rational(0))) + "\" x2=\"" +
                   fmt(canvas - margin) + "\" y2=\"" + fmt(Y(Rational(0))) +
                   "\" stroke=\"#bbb\"/>\n";

        for (const auto& layer : layers) {
            Region flat = section_to_plane(layer.region, spec, plane);
            for (const auto& piece : flat.pieces()) {
                auto shape = shape_of(piece, spec);
                if (!shape) continue;
                const auto& v = shape->verts;
                if (v.size() == 1) {
                    svg += "<circle cx=\"" + fmt(X(v[0].x)) + "\" cy=\"" + fmt(Y(v[0].y)) +
                           "\" r=\"2.5\" fill=\"" + layer.fill + "\"/>\n";
                    continue;
                }
                if (v.size() > 2) {
                    svg += "<polygon points=\"";
                    for (const auto& p : v) svg += fmt(X(p.x)) + "," + fmt(Y(p.y)) + " ";
                    svg += "\" fill=\"" + layer.fill + "\" stroke=\"none\"/>\n";
                }
                const size_t k = v.size();
                for (size_t i = 0; i < (k == 2 ? 1 : k); ++i) {
                    const Pt& a = v[i];
                    const Pt& b = v[(i + 1) % k];
                    if (shape->edge_boxclip[i]) continue;
                    svg += "<line x1=\"" + fmt(X(a.x)) + "\" y1=\"" + fmt(Y(a.y)) + "\" x2=\"" +
                           fmt(X(b.x)) + "\" y2=\"" + fmt(Y(b.y)) + "\" stroke=\"#333\"";
                    if (shape->edge_dashed[i]) svg += " stroke-dasharray=\"5,4\"";
                    svg += "/>\n";
                }
            }
        }
        ++panel;
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace ssyn::cli

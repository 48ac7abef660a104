#include "kolak/render.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>
#include <stdexcept>

namespace kolak {

void EmbeddingSpec::validate() const {
    if (dimension != 1 && dimension != 2)
        throw std::invalid_argument("EmbeddingSpec: dimension must be 1 or 2");
    if (ell < 2) throw std::invalid_argument("EmbeddingSpec: ell >= 2 required");
    if (dimension == 2) {
        // representable range in the plane: triangle up to kissing-number+1
        if (ell < 3 || ell > 7)
            throw std::invalid_argument("EmbeddingSpec: 2D embedding needs 3 <= ell <= 7");
        if (!(contraction > 0.0) || contraction >= 1.0 / 3.0)
            throw std::invalid_argument("EmbeddingSpec: 2D contraction must lie in (0, 1/3)");
    }
}

void EmbeddingSpec::vertex(int t, double& x, double& y) const {
    if (t < 0 || t >= ell) throw std::invalid_argument("EmbeddingSpec: digit out of range");
    const double angle =
        std::numbers::pi / 2.0 + 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(ell);
    x = std::cos(angle);
    y = std::sin(angle);
}

Point2 embed(const LAdicAddress& addr, const EmbeddingSpec& spec) {
    spec.validate();
    if (spec.dimension != 2) throw std::invalid_argument("embed: 2D spec required");
    if (addr.ell != spec.ell) throw std::invalid_argument("embed: base mismatch");
    Point2 p{0.0, 0.0};
    double scale = 1.0;
    for (int t : addr.digits) {
        double vx, vy;
        spec.vertex(t, vx, vy);
        p.x += scale * vx;
        p.y += scale * vy;
        scale *= spec.contraction;
    }
    return p;
}

std::pair<double, double> embed_interval(const LAdicAddress& addr, const EmbeddingSpec& spec) {
    if (addr.ell != spec.ell) throw std::invalid_argument("embed_interval: base mismatch");
    double lo = 0.0, hi = 1.0;
    for (int t : addr.digits) {
        if (t < 0 || t >= spec.ell) throw std::invalid_argument("embed_interval: digit out of range");
        const double w = (hi - lo) / static_cast<double>(2 * spec.ell - 1);
        lo += 2.0 * static_cast<double>(t) * w;
        hi = lo + w;
    }
    return {lo, hi};
}

void ColorMap::validate(int letters) const {
    if (static_cast<int>(letter_colors.size()) < letters)
        throw std::invalid_argument("ColorMap: one color per letter required");
    std::set<std::string> seen;
    for (int i = 0; i < letters; ++i)
        if (!seen.insert(letter_colors[static_cast<std::size_t>(i)]).second)
            throw std::invalid_argument("ColorMap: duplicate letter color");
    if (seen.contains(mixed_color))
        throw std::invalid_argument("ColorMap: mixed color collides with a letter color");
}

ColorMap default_colors(int letters) {
    static const std::vector<std::string> base{
        "#000000", "#555555", "#aaaaaa", "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
        "#9467bd", "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#393b79", "#ad494a",
        "#637939", "#7b4173"};
    ColorMap cm;
    for (int i = 0; i < letters; ++i) {
        if (i < static_cast<int>(base.size())) {
            cm.letter_colors.push_back(base[static_cast<std::size_t>(i)]);
        } else {
            char buf[8];
            std::snprintf(buf, sizeof buf, "#%02x40%02x", (37 * i) % 256, (89 * i) % 256);
            cm.letter_colors.emplace_back(buf);
        }
    }
    cm.validate(letters);
    return cm;
}

std::vector<CellPatch> classify_cells(const Substitution& sub, int depth) {
    auto ell = constant_length(sub);
    if (!ell) throw std::invalid_argument("classify_cells: constant-length substitution required");
    if (depth < 1) throw std::invalid_argument("classify_cells: depth >= 1 required");

    std::vector<CellPatch> out;
    std::vector<int> prefix;
    const auto visit = [&](auto&& self) -> void {
        if (!prefix.empty()) {
            const LetterId letter = cell_letter(sub, LAdicAddress{*ell, prefix});
            if (letter != kMixedCell || static_cast<int>(prefix.size()) == depth) {
                out.push_back({prefix, letter});
                return;
            }
        }
        for (int t = 0; t < *ell; ++t) {
            prefix.push_back(t);
            self(self);
            prefix.pop_back();
        }
    };
    visit(visit);
    return out;
}

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

} // namespace

std::string render_svg(const Substitution& sub, int depth, const EmbeddingSpec& spec,
                       const ColorMap& colors, const std::string& config_comment) {
    spec.validate();
    colors.validate(sub.size());
    auto ell = constant_length(sub);
    if (!ell || *ell != spec.ell)
        throw std::invalid_argument("render_svg: substitution length must equal spec.ell");

    const std::vector<CellPatch> cells = classify_cells(sub, depth);
    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    if (!config_comment.empty()) svg += "<!-- " + config_comment + " -->\n";

    const auto color_of = [&](LetterId letter) -> const std::string& {
        return letter == kMixedCell ? colors.mixed_color
                                    : colors.letter_colors[static_cast<std::size_t>(letter)];
    };

    if (spec.dimension == 2) {
        const double width = 1000.0, height = 1000.0, margin = 40.0;
        const double reach = 1.0 / (1.0 - spec.contraction); // attractor circumradius
        const double scale = (width / 2.0 - margin) / reach;
        svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" "
               "viewBox=\"0 0 1000 1000\">\n";
        for (const CellPatch& cell : cells) {
            const LAdicAddress addr{spec.ell, cell.digits};
            const Point2 p = embed(addr, spec);
            const double cr = std::pow(spec.contraction, static_cast<double>(cell.digits.size())) * reach;
            svg += "<polygon points=\"";
            for (int t = 0; t < spec.ell; ++t) {
                double vx, vy;
                spec.vertex(t, vx, vy);
                const double x = width / 2.0 + scale * (p.x + cr * vx);
                const double y = height / 2.0 - scale * (p.y + cr * vy);
                if (t) svg += ' ';
                svg += fmt(x) + "," + fmt(y);
            }
            svg += "\" fill=\"" + color_of(cell.letter) + "\"/>\n";
        }
    } else {
        const double width = 1000.0, margin = 40.0, band = 80.0;
        svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"160\" "
               "viewBox=\"0 0 1000 160\">\n";
        for (const CellPatch& cell : cells) {
            const auto [lo, hi] = embed_interval(LAdicAddress{spec.ell, cell.digits}, spec);
            const double x = margin + (width - 2 * margin) * lo;
            const double w = (width - 2 * margin) * (hi - lo);
            svg += "<rect x=\"" + fmt(x) + "\" y=\"40\" width=\"" + fmt(w) + "\" height=\"" +
                   fmt(band) + "\" fill=\"" + color_of(cell.letter) + "\"/>\n";
        }
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace kolak

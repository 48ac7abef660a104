#pragma once

#include <string>
#include <vector>

#include "kolak/ladic.hpp"
#include "kolak/substitution.hpp"

namespace kolak {

/// Geometry of the Euclidean model of Z_ell: anchors are the vertices of a
/// regular ell-gon (2D) or evenly spaced cells of a (2*ell - 1)-subdivision
/// with gaps (1D). The 2D contraction must stay below 1/3 so distinct cells
/// stay disjoint.
struct EmbeddingSpec {
    int dimension = 2; // 1 or 2
    long long ell = 3;
    double contraction = 0.3; // 2D only; 1D uses 1/(2*ell - 1)

    void validate() const;
    /// Anchor vertex of digit t on the unit circle (2D).
    void vertex(int t, double& x, double& y) const;
};

struct Point2 {
    double x;
    double y;
};

/// 2D image of an address: sum_i contraction^i * vertex(t_i).
Point2 embed(const LAdicAddress& addr, const EmbeddingSpec& spec);

/// 1D cell interval of an address within [0,1].
std::pair<double, double> embed_interval(const LAdicAddress& addr, const EmbeddingSpec& spec);

struct ColorMap {
    std::vector<std::string> letter_colors;
    std::string mixed_color = "#f4f4f4";

    void validate(int letters) const; // injectivity over the letters used
};

/// Figure-style palette: black, dark gray, light gray, then spaced hues.
ColorMap default_colors(int letters);

/// One patch per maximal single-colored cell: a cell is emitted at the first
/// level where its column is constant, mixed cells only at the cutoff depth.
struct CellPatch {
    std::vector<int> digits; // address prefix, least significant first
    LetterId letter;         // kMixedCell for neutral patches
};

std::vector<CellPatch> classify_cells(const Substitution& sub, int depth);

/// Deterministic standalone SVG (fixed canvas, 6-decimal coordinates); the
/// optional comment is echoed into the document header.
std::string render_svg(const Substitution& sub, int depth, const EmbeddingSpec& spec,
                       const ColorMap& colors, const std::string& config_comment = "");

} // namespace kolak

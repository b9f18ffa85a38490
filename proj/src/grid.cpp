#include "glref/grid.hpp"

#include <algorithm>
#include <cmath>

namespace glref {

Grid Grid::make(double x0, double y0, double width, double height, double max_spacing) {
    if (!(width > 0.0) || !(height > 0.0))
        throw std::invalid_argument("Grid::make: extent must be positive");
    if (!(max_spacing > 0.0) || !std::isfinite(max_spacing))
        throw std::invalid_argument("Grid::make: spacing must be positive and finite");

    Grid g;
    g.x0 = x0;
    g.y0 = y0;
    int cells_x = std::max(1, static_cast<int>(std::ceil(width / max_spacing - 1e-12)));
    g.nx = cells_x + 1;
    g.h = width / cells_x;

    double cells_y = height / g.h;
    int m = static_cast<int>(std::llround(cells_y));
    if (m < 1 || std::abs(cells_y - m) > 1e-12 * std::max(1.0, cells_y))
        throw std::invalid_argument("Grid::make: height is not a multiple of the spacing");
    g.ny = m + 1;
    return g;
}

Grid Grid::centered_square(double side, double max_spacing) {
    return make(-side / 2.0, -side / 2.0, side, side, max_spacing);
}

}  // namespace glref

#pragma once

#include <cmath>
#include <stdexcept>

namespace glref {

/// Uniform rectangular node lattice with equal spacing in both directions.
/// Nodes are indexed (i, j) with i = 0..nx-1 along x and j = 0..ny-1 along y;
/// the flat index is j*nx + i.
struct Grid {
    double x0 = 0.0;  // lower-left node
    double y0 = 0.0;
    int nx = 2;
    int ny = 2;
    double h = 1.0;

    int num_nodes() const { return nx * ny; }
    int node(int i, int j) const { return j * nx + i; }
    double x(int i) const { return x0 + h * i; }
    double y(int j) const { return y0 + h * j; }
    double width() const { return h * (nx - 1); }
    double height() const { return h * (ny - 1); }

    bool on_boundary(int i, int j) const {
        return i == 0 || j == 0 || i == nx - 1 || j == ny - 1;
    }

    /// Tensor-product trapezoid weight: 1 interior, 1/2 edge, 1/4 corner.
    double node_weight(int i, int j) const {
        double w = 1.0;
        if (i == 0 || i == nx - 1) w *= 0.5;
        if (j == 0 || j == ny - 1) w *= 0.5;
        return w;
    }

    // Edge indexing. x-edges run from (i,j) to (i+1,j), i < nx-1;
    // y-edges run from (i,j) to (i,j+1), j < ny-1.
    int num_x_edges() const { return (nx - 1) * ny; }
    int num_y_edges() const { return nx * (ny - 1); }
    int x_edge(int i, int j) const { return j * (nx - 1) + i; }
    int y_edge(int i, int j) const { return j * nx + i; }

    /// Transverse trapezoid factor of an x-edge (1/2 on the top/bottom rows).
    double x_edge_weight(int j) const { return (j == 0 || j == ny - 1) ? 0.5 : 1.0; }
    double y_edge_weight(int i) const { return (i == 0 || i == nx - 1) ? 0.5 : 1.0; }

    /// Grid over [x0, x0+width] x [y0, y0+height] with spacing <= max_spacing.
    /// The spacing is set from the width; the height must then be an integer
    /// number of cells within 1e-12 relative.
    static Grid make(double x0, double y0, double width, double height, double max_spacing);

    /// Square (-side/2, side/2)^2 with spacing <= max_spacing.
    static Grid centered_square(double side, double max_spacing);
};

}  // namespace glref

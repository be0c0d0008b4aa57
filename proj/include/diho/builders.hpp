#ifndef DIHO_BUILDERS_HPP
#define DIHO_BUILDERS_HPP

#include <set>
#include <utility>

#include "diho/precubical.hpp"

namespace diho::precubical {

/// Rectangular grid with rows x cols vertices, optionally filling squares
/// with 2-cells. Vertices are numbered 1.. from the bottom-right corner,
/// rightward-then-upward in the flow direction; edges point toward lower
/// numbers. `filled` lists squares as (row, col) of their final corner,
/// row in [0, rows-2], col in [0, cols-2]; out-of-range coordinates throw.
PrecubicalSet grid_complex(std::size_t rows, std::size_t cols,
                           const std::set<std::pair<std::size_t, std::size_t>>& filled);

/// One vertex u with a single loop edge t (directed circle).
PrecubicalSet loop_graph();

/// The unit square 4 -a-> 2 -c-> 1, 4 -b-> 3 -d-> 1, with / without the
/// filling 2-cell C (boundary relation a.c - b.d).
PrecubicalSet filled_square();
PrecubicalSet empty_square();

/// 3x3 grids with two holes on the antidiagonal; the left variant fills the
/// squares C (corners 9..5) and D (corners 5..1), the right variant fills
/// E (8..4) and F (6..2). Same 1-skeleton, edges a..l.
PrecubicalSet two_holes_left();
PrecubicalSet two_holes_right();

/// Boundary of the unit cube: 8 vertices, 12 edges, all 6 squares filled,
/// no 3-cell. Vertex 8 is initial, vertex 1 final.
PrecubicalSet hollow_cube();

/// The circle as a union of two half-circle edges u: 1 -> 2 and v: 2 -> 1.
PrecubicalSet two_half_circles();

} // namespace diho::precubical

#endif

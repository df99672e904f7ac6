#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "icecount/boundary.hpp"

namespace icecount {

// A complete assignment of arrows to the edges of a lattice. vertical[i][j]
// is the edge above row i+1 in column j (i = 0 is the top boundary,
// i = rows the bottom boundary); true = Up. horizontal[i][j] is the edge
// left of column j+1 in row i (j = 0 left boundary, j = cols right
// boundary); true = Right. Vertex types are derived, not stored.
struct GridState {
    BoundarySpec spec;
    std::vector<std::vector<bool>> vertical;    // (rows+1) x cols
    std::vector<std::vector<bool>> horizontal;  // rows x (cols+1)
};

// True iff the boundary rows/columns match the spec and the ice rule
// (two in, two out) holds at every vertex. Throws std::invalid_argument
// on a dimension mismatch, which is reported distinctly from a mere
// invalid arrow pattern.
bool validate_state(const GridState& state);

// The ASM image of a DWBC state: horizontal-in/vertical-out vertices map
// to +1, vertical-in/horizontal-out to -1, the rest to 0. Rejects
// non-square or non-DWBC specs.
std::vector<std::vector<int>> state_to_asm(const GridState& state);

// Row/column sums 1 and nonzero entries alternating in sign.
bool is_asm(const std::vector<std::vector<int>>& matrix);

nlohmann::json state_to_json(const GridState& state);
GridState state_from_json(const nlohmann::json& j);

std::string render_ascii(const GridState& state);

}  // namespace icecount

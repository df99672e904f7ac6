#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "icecount/boundary.hpp"
#include "icecount/grid_state.hpp"
#include "icecount/partition.hpp"

namespace icecount {

using Count = mpz_class;

struct EnumBudget {
    std::optional<unsigned long> max_states;
    std::optional<unsigned long> max_nodes;
};

// Search exceeded the node or state budget; carries how far it got.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(unsigned long nodes)
        : std::runtime_error("enumeration budget exceeded"), nodes_visited(nodes) {}
    unsigned long nodes_visited;
};

// Lattice too wide for the bitmask row DP.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Engine { Backtrack, RowDp };

// Exact state count by vertex-at-a-time backtracking, row-major. With
// threads > 1 the completions of the first row are distributed across
// workers; exact addition makes the result thread-count independent.
Count count_backtrack(const BoundarySpec& spec, const EnumBudget& budget = {},
                      int threads = 1);

// Exact state count by transfer DP over the 2^cols vertical-edge
// configurations at each horizontal cut. Requires cols <= 64.
Count count_rowdp(const BoundarySpec& spec);

// Visits every valid state exactly once in deterministic order (Down/Left
// edges first at each branch). The visitor returns false to stop early.
// Throws BudgetExceeded after the emitted prefix if the budget runs out.
void for_each_state(const BoundarySpec& spec,
                    const std::function<bool(const GridState&)>& visit,
                    const EnumBudget& budget = {});

std::vector<GridState> enumerate_states(const BoundarySpec& spec,
                                        const EnumBudget& budget = {});

// A_lambda(n) via the chosen engine on boundary_from_partition(lambda).
Count count_partition(const Partition& lambda, Engine engine = Engine::RowDp,
                      int threads = 1);

// R(lambda, j): states of the right part of the lattice division.
// Independent of lambda_1.
Count count_R(const Partition& lambda, int j);

}  // namespace icecount

#pragma once

#include <vector>

#include "icecount/partition.hpp"

namespace icecount {

enum class ArrowDir : unsigned char { Up, Down, Left, Right };

// Fixed arrow orientations on the four sides of a rows x cols lattice.
// Storage is one bit per edge, Up/Right = true. Rows are numbered top to
// bottom, columns left to right; builders that take column indices
// counted from the right translate internally.
struct BoundarySpec {
    int rows = 0;
    int cols = 0;
    std::vector<bool> top;     // size cols, true = Up
    std::vector<bool> bottom;  // size cols, true = Up
    std::vector<bool> left;    // size rows, true = Right
    std::vector<bool> right;   // size rows, true = Right

    // Set on partition-model specs; enables the n-r flux cut pruning in
    // the row DP. Generic specs must not rely on it.
    bool partition_model = false;

    BoundarySpec(int r, int c, std::vector<bool> top_arrows,
                 std::vector<bool> bottom_arrows, std::vector<bool> left_arrows,
                 std::vector<bool> right_arrows);

    // In-arrows equal out-arrows over the boundary; a spec failing this
    // has zero states.
    bool feasible() const { return feasible_; }

    bool operator==(const BoundarySpec& o) const {
        return rows == o.rows && cols == o.cols && top == o.top &&
               bottom == o.bottom && left == o.left && right == o.right;
    }

private:
    bool feasible_ = false;
};

// The n x (n+lambda_1) lattice whose top arrows point up exactly in the
// columns (numbered 1..n+lambda_1 right to left) contained in lambda+rho.
BoundarySpec boundary_from_partition(const Partition& lambda);

// Left all right; right all right except left in the bottom row; bottom
// down; top down except up in the leftmost column.
BoundarySpec boundary_S(int r, int c);

// As boundary_S but the top row's left arrow points left and the whole
// top boundary points down.
BoundarySpec boundary_T(int r, int c);

// n x (m+1); top up only in the leftmost column; the single left-pointing
// right-boundary arrow sits in row j (1-based, top to bottom).
BoundarySpec boundary_L(int n, long m, int j);

// The right part of the lattice division: n x (n+lambda_2-1), top arrows
// inherited from boundary_from_partition(lambda) restricted to the
// rightmost n+lambda_2-1 columns, right boundary all left, left boundary
// all right except left in row j.
BoundarySpec boundary_R(const Partition& lambda, int j);

// (n-1) x n; domain-wall except the top arrow in column j (counted right
// to left) is flipped down.
BoundarySpec boundary_refined_asm(int n, int j);

// (2n-2) x n; left all right, right alternating starting left in the top
// row, bottom down, top up except down in column i (right to left).
BoundarySpec boundary_refined_vsasm(int n, int i);

}  // namespace icecount

#include "icecount/boundary.hpp"

#include <algorithm>
#include <stdexcept>

namespace icecount {

BoundarySpec::BoundarySpec(int r, int c, std::vector<bool> top_arrows,
                           std::vector<bool> bottom_arrows,
                           std::vector<bool> left_arrows,
                           std::vector<bool> right_arrows)
    : rows(r),
      cols(c),
      top(std::move(top_arrows)),
      bottom(std::move(bottom_arrows)),
      left(std::move(left_arrows)),
      right(std::move(right_arrows)) {
    if (r < 1 || c < 1) throw std::invalid_argument("lattice dimensions must be positive");
    if (top.size() != static_cast<size_t>(c) || bottom.size() != static_cast<size_t>(c) ||
        left.size() != static_cast<size_t>(r) || right.size() != static_cast<size_t>(r))
        throw std::invalid_argument("boundary sequence lengths must match dimensions");

    // In-arrows: top Down, bottom Up, left Right, right Left. Each vertex
    // takes two in and two out, so over the boundary #in must equal #out.
    int in_arrows = 0;
    for (bool up : top) in_arrows += up ? 0 : 1;
    for (bool up : bottom) in_arrows += up ? 1 : 0;
    for (bool rightward : left) in_arrows += rightward ? 1 : 0;
    for (bool rightward : right) in_arrows += rightward ? 0 : 1;
    feasible_ = (in_arrows == rows + cols);
}

BoundarySpec boundary_from_partition(const Partition& lambda) {
    const int n = lambda.length();
    const int c = n + static_cast<int>(lambda.first());
    const std::vector<long> labels = lambda.column_labels();
    // Column j (0-based, left to right) carries the right-to-left label c-j.
    std::vector<bool> top(c, false);
    for (int j = 0; j < c; ++j)
        top[j] = std::find(labels.begin(), labels.end(), c - j) != labels.end();
    BoundarySpec spec(n, c, std::move(top), std::vector<bool>(c, false),
                      std::vector<bool>(n, true), std::vector<bool>(n, false));
    spec.partition_model = true;
    return spec;
}

BoundarySpec boundary_S(int r, int c) {
    std::vector<bool> top(c, false);
    top[0] = true;
    std::vector<bool> right(r, true);
    right[r - 1] = false;
    return BoundarySpec(r, c, std::move(top), std::vector<bool>(c, false),
                        std::vector<bool>(r, true), std::move(right));
}

BoundarySpec boundary_T(int r, int c) {
    std::vector<bool> left(r, true);
    left[0] = false;
    std::vector<bool> right(r, true);
    right[r - 1] = false;
    return BoundarySpec(r, c, std::vector<bool>(c, false), std::vector<bool>(c, false),
                        std::move(left), std::move(right));
}

BoundarySpec boundary_L(int n, long m, int j) {
    if (m < 0) throw std::invalid_argument("m must be nonnegative");
    if (j < 1 || j > n) throw std::invalid_argument("row index out of range");
    const int c = static_cast<int>(m) + 1;
    std::vector<bool> top(c, false);
    top[0] = true;
    std::vector<bool> right(n, true);
    right[j - 1] = false;
    return BoundarySpec(n, c, std::move(top), std::vector<bool>(c, false),
                        std::vector<bool>(n, true), std::move(right));
}

BoundarySpec boundary_R(const Partition& lambda, int j) {
    const int n = lambda.length();
    if (n < 2) throw std::invalid_argument("right part needs at least two rows");
    if (j < 1 || j > n) throw std::invalid_argument("row index out of range");
    const int c = n + static_cast<int>(lambda.second()) - 1;
    // Right-to-left labels 1..c; up-columns are the lambda+rho entries that
    // fit, which never include lambda_1 + n, so the result is independent
    // of lambda_1.
    const std::vector<long> labels = lambda.column_labels();
    std::vector<bool> top(c, false);
    for (int col = 0; col < c; ++col)
        top[col] = std::find(labels.begin(), labels.end(), static_cast<long>(c - col)) !=
                   labels.end();
    std::vector<bool> left(n, true);
    left[j - 1] = false;
    return BoundarySpec(n, c, std::move(top), std::vector<bool>(c, false), std::move(left),
                        std::vector<bool>(n, false));
}

BoundarySpec boundary_refined_asm(int n, int j) {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    if (j < 1 || j > n) throw std::invalid_argument("column index out of range");
    std::vector<bool> top(n, true);
    top[n - j] = false;  // column j counted right to left
    return BoundarySpec(n - 1, n, std::move(top), std::vector<bool>(n, false),
                        std::vector<bool>(n - 1, true), std::vector<bool>(n - 1, false));
}

BoundarySpec boundary_refined_vsasm(int n, int i) {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    if (i < 1 || i > n) throw std::invalid_argument("column index out of range");
    const int r = 2 * n - 2;
    std::vector<bool> top(n, true);
    top[i - 1] = false;
    std::vector<bool> right(r);
    for (int row = 0; row < r; ++row) right[row] = (row % 2 == 0);  // Right in the top row
    return BoundarySpec(r, n, std::move(top), std::vector<bool>(n, false),
                        std::vector<bool>(r, true), std::move(right));
}

}  // namespace icecount

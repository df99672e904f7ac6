#include "icecount/enumerate.hpp"

#include <atomic>
#include <bit>
#include <future>
#include <map>
#include <thread>

namespace icecount {

namespace {

// At each vertex the edge above (t) and the edge to the left (l) are
// known; the ice rule leaves the (bottom, right) pair exactly one
// completion when t != l and two when t == l:
//   t=Up,l=Left -> (Up,Left); t=Down,l=Right -> (Down,Right);
//   t == l -> (Down,Right.. mirrored) either both "low" or both "high".
// The two-way case is explored bottom-Down first so enumeration order is
// deterministic.
struct Completion {
    bool bottom, right;
};

inline int completions(bool t, bool l, Completion out[2]) {
    if (t != l) {
        out[0] = {t, l};
        return 1;
    }
    out[0] = {false, false};
    out[1] = {true, true};
    return 2;
}

struct StopEnumeration {};

// Vertex-at-a-time DFS, row-major left to right. vcur_ holds the vertical
// edge entering each column from above; h_ the horizontal edge entering
// the current vertex from the left.
class Backtracker {
public:
    Backtracker(const BoundarySpec& spec, const EnumBudget& budget)
        : spec_(spec), budget_(budget), vcur_(spec.top.begin(), spec.top.end()) {}

    Count count(int start_row) {
        total_ = 0;
        dfs(start_row, 0);
        return total_;
    }

    void enumerate(const std::function<bool(const GridState&)>& visit) {
        visit_ = &visit;
        vertical_.assign(1, vcur_);
        horizontal_.assign(static_cast<size_t>(spec_.rows),
                           std::vector<char>(static_cast<size_t>(spec_.cols) + 1, 0));
        dfs(0, 0);
    }

    // Vertical configurations reachable below the first row, for work
    // splitting. Restarting from one of them with count(1) resumes the
    // search past that prefix.
    std::vector<std::vector<char>> first_row_prefixes() {
        prefix_sink_ = true;
        prefixes_.clear();
        dfs(0, 0);
        prefix_sink_ = false;
        return std::move(prefixes_);
    }

    void set_vcur(std::vector<char> v) { vcur_ = std::move(v); }
    unsigned long nodes() const { return nodes_; }

private:
    void dfs(int row, int col) {
        if (row == spec_.rows) {
            terminal();
            return;
        }
        if (prefix_sink_ && row == 1) {
            prefixes_.push_back(vcur_);
            return;
        }
        if (col == 0) h_ = spec_.left[row];

        ++nodes_;
        if (budget_.max_nodes && nodes_ > *budget_.max_nodes) throw BudgetExceeded(nodes_);

        const bool t = vcur_[col] != 0;
        Completion opts[2];
        const int k = completions(t, h_, opts);
        const bool saved_h = h_;
        const char saved_v = vcur_[col];
        for (int i = 0; i < k; ++i) {
            const Completion& opt = opts[i];
            if (col == spec_.cols - 1 && opt.right != spec_.right[row]) continue;
            if (row == spec_.rows - 1 && opt.bottom != spec_.bottom[col]) continue;
            vcur_[col] = opt.bottom ? 1 : 0;
            h_ = opt.right;
            if (visit_) {
                horizontal_[row][0] = spec_.left[row] ? 1 : 0;
                horizontal_[row][col + 1] = opt.right ? 1 : 0;
            }
            if (col + 1 < spec_.cols) {
                dfs(row, col + 1);
            } else {
                if (visit_) vertical_.push_back(vcur_);
                dfs(row + 1, 0);
                if (visit_) vertical_.pop_back();
            }
            h_ = saved_h;
            vcur_[col] = saved_v;
        }
    }

    void terminal() {
        if (visit_) {
            emit();
        } else {
            total_ += 1;
        }
    }

    void emit() {
        ++states_emitted_;
        if (budget_.max_states && states_emitted_ > *budget_.max_states)
            throw BudgetExceeded(nodes_);
        GridState state{spec_, {}, {}};
        for (const auto& row : vertical_) state.vertical.emplace_back(row.begin(), row.end());
        for (const auto& row : horizontal_)
            state.horizontal.emplace_back(row.begin(), row.end());
        if (!(*visit_)(state)) throw StopEnumeration{};
    }

    const BoundarySpec& spec_;
    EnumBudget budget_;
    std::vector<char> vcur_;
    bool h_ = false;
    Count total_ = 0;
    unsigned long nodes_ = 0;
    unsigned long states_emitted_ = 0;
    const std::function<bool(const GridState&)>* visit_ = nullptr;
    std::vector<std::vector<char>> vertical_;
    std::vector<std::vector<char>> horizontal_;
    bool prefix_sink_ = false;
    std::vector<std::vector<char>> prefixes_;
};

}  // namespace

Count count_backtrack(const BoundarySpec& spec, const EnumBudget& budget, int threads) {
    if (!spec.feasible()) return 0;
    if (threads <= 1 || spec.rows < 2) {
        Backtracker bt(spec, budget);
        return bt.count(0);
    }
    // Split the completions of the first row across workers; exact
    // addition keeps the total independent of the split.
    Backtracker splitter(spec, budget);
    const std::vector<std::vector<char>> prefixes = splitter.first_row_prefixes();
    std::atomic<size_t> next{0};
    std::vector<std::future<Count>> futures;
    const int workers = std::max(1, std::min<int>(threads, static_cast<int>(prefixes.size())));
    for (int w = 0; w < workers; ++w) {
        futures.push_back(std::async(std::launch::async, [&]() {
            Count partial = 0;
            for (;;) {
                const size_t idx = next.fetch_add(1);
                if (idx >= prefixes.size()) break;
                Backtracker bt(spec, budget);
                bt.set_vcur(prefixes[idx]);
                partial += bt.count(1);
            }
            return partial;
        }));
    }
    Count total = 0;
    for (auto& f : futures) total += f.get();
    return total;
}

Count count_rowdp(const BoundarySpec& spec) {
    if (spec.cols > 64) throw CapacityError("row DP limited to 64 columns");
    if (!spec.feasible()) return 0;
    const int r = spec.rows, c = spec.cols;

    const auto pack = [c](const std::vector<bool>& bits) {
        uint64_t mask = 0;
        for (int j = 0; j < c; ++j)
            if (bits[j]) mask |= uint64_t(1) << j;
        return mask;
    };

    std::map<uint64_t, Count> cur;
    cur[pack(spec.top)] = 1;
    for (int row = 0; row < r; ++row) {
        std::map<uint64_t, Count> next;
        struct Frame {
            int col;
            bool h;
            uint64_t bottom;
        };
        std::vector<Frame> stack;
        for (const auto& [mask, ways] : cur) {
            // All bottom configurations of this row consistent with the
            // top configuration and the row's boundary arrows.
            stack.push_back({0, spec.left[row], 0});
            while (!stack.empty()) {
                const Frame f = stack.back();
                stack.pop_back();
                if (f.col == c) {
                    if (f.h == spec.right[row]) next[f.bottom] += ways;
                    continue;
                }
                const bool t = (mask >> f.col) & 1;
                Completion opts[2];
                const int k = completions(t, f.h, opts);
                for (int i = 0; i < k; ++i) {
                    uint64_t bottom = f.bottom;
                    if (opts[i].bottom) bottom |= uint64_t(1) << f.col;
                    stack.push_back({f.col + 1, opts[i].right, bottom});
                }
            }
        }
        if (spec.partition_model) {
            // Flux law for the partition boundary family: the cut below
            // row+1 completed rows carries exactly rows-(row+1) up arrows.
            const int expected = r - (row + 1);
            for (auto it = next.begin(); it != next.end();) {
                if (std::popcount(it->first) == expected)
                    ++it;
                else
                    it = next.erase(it);
            }
        }
        cur = std::move(next);
    }
    const auto found = cur.find(pack(spec.bottom));
    return found == cur.end() ? Count(0) : found->second;
}

void for_each_state(const BoundarySpec& spec,
                    const std::function<bool(const GridState&)>& visit,
                    const EnumBudget& budget) {
    if (!spec.feasible()) return;
    Backtracker bt(spec, budget);
    try {
        bt.enumerate(visit);
    } catch (const StopEnumeration&) {
    }
}

std::vector<GridState> enumerate_states(const BoundarySpec& spec, const EnumBudget& budget) {
    std::vector<GridState> states;
    for_each_state(
        spec,
        [&](const GridState& s) {
            states.push_back(s);
            return true;
        },
        budget);
    return states;
}

Count count_partition(const Partition& lambda, Engine engine, int threads) {
    const BoundarySpec spec = boundary_from_partition(lambda);
    switch (engine) {
        case Engine::Backtrack:
            return count_backtrack(spec, {}, threads);
        case Engine::RowDp:
            return count_rowdp(spec);
    }
    throw std::logic_error("unknown engine");
}

Count count_R(const Partition& lambda, int j) {
    return count_backtrack(boundary_R(lambda, j));
}

}  // namespace icecount

#include "icecount/grid_state.hpp"

#include <stdexcept>

namespace icecount {

namespace {

bool dims_ok(const GridState& s) {
    const size_t r = static_cast<size_t>(s.spec.rows);
    const size_t c = static_cast<size_t>(s.spec.cols);
    if (s.vertical.size() != r + 1 || s.horizontal.size() != r) return false;
    for (const auto& row : s.vertical)
        if (row.size() != c) return false;
    for (const auto& row : s.horizontal)
        if (row.size() != c + 1) return false;
    return true;
}

}  // namespace

bool validate_state(const GridState& s) {
    if (!dims_ok(s)) throw std::invalid_argument("edge matrices do not match spec dimensions");
    const int r = s.spec.rows, c = s.spec.cols;
    for (int j = 0; j < c; ++j)
        if (s.vertical[0][j] != s.spec.top[j] || s.vertical[r][j] != s.spec.bottom[j])
            return false;
    for (int i = 0; i < r; ++i)
        if (s.horizontal[i][0] != s.spec.left[i] || s.horizontal[i][c] != s.spec.right[i])
            return false;
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < c; ++j) {
            const bool t = s.vertical[i][j], b = s.vertical[i + 1][j];
            const bool l = s.horizontal[i][j], rr = s.horizontal[i][j + 1];
            const int in = (t ? 0 : 1) + (b ? 1 : 0) + (l ? 1 : 0) + (rr ? 0 : 1);
            if (in != 2) return false;
        }
    }
    return true;
}

std::vector<std::vector<int>> state_to_asm(const GridState& s) {
    const int n = s.spec.rows;
    if (s.spec.cols != n) throw std::invalid_argument("ASM conversion needs a square lattice");
    for (int j = 0; j < n; ++j)
        if (!s.spec.top[j] || s.spec.bottom[j])
            throw std::invalid_argument("ASM conversion needs domain-wall boundary");
    for (int i = 0; i < n; ++i)
        if (!s.spec.left[i] || s.spec.right[i])
            throw std::invalid_argument("ASM conversion needs domain-wall boundary");
    if (!validate_state(s)) throw std::invalid_argument("state is not valid for its spec");

    std::vector<std::vector<int>> matrix(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const bool t = s.vertical[i][j], b = s.vertical[i + 1][j];
            const bool l = s.horizontal[i][j], rr = s.horizontal[i][j + 1];
            if (t && !b && l && !rr)
                matrix[i][j] = 1;  // horizontal in, vertical out
            else if (!t && b && !l && rr)
                matrix[i][j] = -1;  // vertical in, horizontal out
        }
    }
    return matrix;
}

bool is_asm(const std::vector<std::vector<int>>& m) {
    const size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) return false;
    for (size_t i = 0; i < n; ++i) {
        int sum = 0, last = 0;
        for (size_t j = 0; j < n; ++j) {
            const int v = m[i][j];
            if (v < -1 || v > 1) return false;
            sum += v;
            if (v != 0) {
                if (last == v) return false;
                last = v;
            }
        }
        if (sum != 1) return false;
    }
    for (size_t j = 0; j < n; ++j) {
        int sum = 0, last = 0;
        for (size_t i = 0; i < n; ++i) {
            const int v = m[i][j];
            sum += v;
            if (v != 0) {
                if (last == v) return false;
                last = v;
            }
        }
        if (sum != 1) return false;
    }
    return true;
}

namespace {

std::string vertical_string(const std::vector<bool>& edges) {
    std::string out;
    for (bool up : edges) out += up ? 'U' : 'D';
    return out;
}

std::string horizontal_string(const std::vector<bool>& edges) {
    std::string out;
    for (bool rightward : edges) out += rightward ? 'R' : 'L';
    return out;
}

std::vector<bool> parse_arrows(const std::string& s, char one) {
    std::vector<bool> out;
    out.reserve(s.size());
    for (char ch : s) out.push_back(ch == one);
    return out;
}

}  // namespace

nlohmann::json state_to_json(const GridState& s) {
    nlohmann::json j;
    j["rows"] = s.spec.rows;
    j["cols"] = s.spec.cols;
    j["top"] = vertical_string(s.spec.top);
    j["bottom"] = vertical_string(s.spec.bottom);
    j["left"] = horizontal_string(s.spec.left);
    j["right"] = horizontal_string(s.spec.right);
    j["vertical"] = nlohmann::json::array();
    for (const auto& row : s.vertical) j["vertical"].push_back(vertical_string(row));
    j["horizontal"] = nlohmann::json::array();
    for (const auto& row : s.horizontal) j["horizontal"].push_back(horizontal_string(row));
    return j;
}

GridState state_from_json(const nlohmann::json& j) {
    BoundarySpec spec(j.at("rows").get<int>(), j.at("cols").get<int>(),
                      parse_arrows(j.at("top").get<std::string>(), 'U'),
                      parse_arrows(j.at("bottom").get<std::string>(), 'U'),
                      parse_arrows(j.at("left").get<std::string>(), 'R'),
                      parse_arrows(j.at("right").get<std::string>(), 'R'));
    GridState state{std::move(spec), {}, {}};
    for (const auto& row : j.at("vertical"))
        state.vertical.push_back(parse_arrows(row.get<std::string>(), 'U'));
    for (const auto& row : j.at("horizontal"))
        state.horizontal.push_back(parse_arrows(row.get<std::string>(), 'R'));
    return state;
}

std::string render_ascii(const GridState& s) {
    // Alternating lines of vertical and horizontal arrows, vertices as '+'.
    const int r = s.spec.rows, c = s.spec.cols;
    std::string out;
    for (int i = 0; i <= 2 * r; ++i) {
        std::string line;
        if (i % 2 == 0) {
            line += ' ';
            for (int j = 0; j < c; ++j) {
                line += s.vertical[i / 2][j] ? '^' : 'v';
                line += ' ';
            }
        } else {
            for (int j = 0; j <= c; ++j) {
                line += s.horizontal[i / 2][j] ? '>' : '<';
                if (j < c) line += '+';
            }
        }
        out += line;
        out += '\n';
    }
    return out;
}

}  // namespace icecount

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace icecount {

// Weakly decreasing tuple of nonnegative integers. Length matters:
// (2,0,0) and (2,0) are different partitions (trailing zeros set n).
class Partition {
public:
    explicit Partition(std::vector<long> parts);

    // Parses "2,2,0" (most significant part first).
    static Partition parse(const std::string& text);

    int length() const { return static_cast<int>(parts_.size()); }
    long part(int i) const { return parts_.at(static_cast<size_t>(i) - 1); }  // 1-based
    long first() const { return parts_.front(); }
    long second() const { return parts_.at(1); }  // requires length >= 2
    const std::vector<long>& parts() const { return parts_; }

    // lambda + rho with rho = (n, n-1, ..., 1); strictly decreasing column labels.
    std::vector<long> column_labels() const;

    // lambda + d*(1,...,1)
    Partition translated(long d) const;

    // (m+d, d, ..., d); every length-1 partition is a hook.
    bool is_hook() const;
    // (l1+d, n-2+d, ..., 1+d, d) with l1 >= n-1+d; requires length >= 2.
    bool is_staircase() const;

    std::string to_string() const;

    bool operator==(const Partition& other) const { return parts_ == other.parts_; }

private:
    std::vector<long> parts_;
};

}  // namespace icecount

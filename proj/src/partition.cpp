#include "icecount/partition.hpp"

#include <cctype>
#include <sstream>

namespace icecount {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("partition must have at least one part");
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("partition parts must be nonnegative");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::parse(const std::string& text) {
    std::vector<long> parts;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        size_t pos = 0;
        long value;
        try {
            value = std::stol(token, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed partition: " + text);
        }
        while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos]))) ++pos;
        if (pos != token.size()) throw std::invalid_argument("malformed partition: " + text);
        parts.push_back(value);
    }
    if (parts.empty()) throw std::invalid_argument("malformed partition: " + text);
    return Partition(std::move(parts));
}

std::vector<long> Partition::column_labels() const {
    const long n = length();
    std::vector<long> labels(parts_.size());
    for (long i = 0; i < n; ++i) labels[i] = parts_[i] + (n - i);
    return labels;
}

Partition Partition::translated(long d) const {
    std::vector<long> parts = parts_;
    for (long& p : parts) p += d;
    return Partition(std::move(parts));
}

bool Partition::is_hook() const {
    for (size_t i = 2; i < parts_.size(); ++i)
        if (parts_[i] != parts_[1]) return false;
    return true;
}

bool Partition::is_staircase() const {
    const long n = length();
    if (n < 2) return false;
    const long d = parts_.back();
    for (long i = 2; i <= n; ++i)
        if (part(i) != n - i + d) return false;
    return parts_[0] >= n - 1 + d;
}

std::string Partition::to_string() const {
    std::string out = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

}  // namespace icecount

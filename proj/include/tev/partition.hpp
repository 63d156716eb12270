#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace tev {

// Integer partition with nonincreasing positive parts.  Trailing zeros are
// stripped on construction so equal partitions always compare equal.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i - 1] < parts_[i])
                throw std::invalid_argument("partition parts must be nonincreasing");
        }
    }
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int height() const { return static_cast<int>(parts_.size()); }
    int width() const { return parts_.empty() ? 0 : parts_[0]; }
    // 0-based row; rows past the last part have length 0.
    int part(int i) const { return i >= 0 && i < height() ? parts_[i] : 0; }

    Partition conjugate() const {
        std::vector<int> conj(width(), 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) conj[j]++;
        return Partition(std::move(conj));
    }

    bool fits_in_box(int max_height, int max_width) const {
        return height() <= max_height && width() <= max_width;
    }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

inline std::string to_string(const Partition& p) {
    std::string s = "(";
    for (int i = 0; i < p.height(); ++i) {
        if (i) s += ",";
        s += std::to_string(p.parts()[i]);
    }
    return s + ")";
}

namespace detail {

template <typename Visit>
bool partitions_rec(int remaining, int max_parts, int max_part, std::vector<int>& acc,
                    Visit&& visit) {
    if (remaining == 0) return visit(Partition(acc));
    if (max_parts == 0) return true;
    const int lo = (remaining + max_parts - 1) / max_parts;
    const int hi = std::min(remaining, max_part);
    for (int p = lo; p <= hi; ++p) {
        acc.push_back(p);
        const bool cont = partitions_rec(remaining - p, max_parts - 1, p, acc, visit);
        acc.pop_back();
        if (!cont) return false;
    }
    return true;
}

}  // namespace detail

// All partitions of `size` with at most max_height parts, each at most
// max_width, in ascending lexicographic order by parts.  The visitor returns
// false to stop; the function returns false iff it was stopped.
template <typename Visit>
bool for_each_partition(int size, int max_height, int max_width, Visit&& visit) {
    if (size < 0) throw std::invalid_argument("partition size must be nonnegative");
    if (size == 0) return visit(Partition());
    if (max_height <= 0 || max_width <= 0) return true;
    std::vector<int> acc;
    return detail::partitions_rec(size, max_height, max_width, acc, visit);
}

inline std::vector<Partition> partitions_in_box(int size, int max_height, int max_width) {
    std::vector<Partition> out;
    for_each_partition(size, max_height, max_width, [&](const Partition& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

}  // namespace tev

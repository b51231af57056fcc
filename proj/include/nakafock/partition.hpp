#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace nakafock {

/// Integer partition: weakly decreasing positive parts. The empty
/// partition is valid and acts as the multiplicative unit label.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t k = 0; k < parts_.size(); ++k) {
            if (parts_[k] < 1)
                throw std::invalid_argument("Partition: parts must be positive");
            if (k + 1 < parts_.size() && parts_[k] < parts_[k + 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    int multiplicity(int value) const {
        return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
    }

    /// New partition with one extra part, re-sorted descending.
    Partition with_part(int value) const {
        if (value < 1) throw std::invalid_argument("Partition::with_part: value must be >= 1");
        Partition out;
        out.parts_ = parts_;
        auto it = std::lower_bound(out.parts_.begin(), out.parts_.end(), value,
                                   std::greater<int>());
        out.parts_.insert(it, value);
        return out;
    }

    /// New partition with one occurrence of `value` removed. The part must exist.
    Partition removing_one(int value) const {
        auto it = std::find(parts_.begin(), parts_.end(), value);
        if (it == parts_.end())
            throw std::invalid_argument("Partition::removing_one: no such part");
        Partition out;
        out.parts_ = parts_;
        out.parts_.erase(out.parts_.begin() + (it - parts_.begin()));
        return out;
    }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }

    // Canonical order: by weight, then reverse-lexicographic on the parts.
    // This is the serialization and enumeration order used everywhere.
    bool operator<(const Partition& o) const {
        const int wa = weight(), wb = o.weight();
        if (wa != wb) return wa < wb;
        return std::lexicographical_compare(o.parts_.begin(), o.parts_.end(),
                                            parts_.begin(), parts_.end());
    }

    /// "[3,2,1]"; the empty partition renders as "[]".
    std::string str() const {
        std::string s = "[";
        for (std::size_t k = 0; k < parts_.size(); ++k) {
            if (k) s += ',';
            s += std::to_string(parts_[k]);
        }
        s += ']';
        return s;
    }

private:
    std::vector<int> parts_;
};

inline Partition parse_partition(const std::string& text) {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw std::invalid_argument("parse_partition: expected \"[a,b,...]\"");
    std::vector<int> parts;
    std::size_t pos = 1;
    while (pos < text.size() - 1) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos || next > text.size() - 1) next = text.size() - 1;
        parts.push_back(std::stoi(text.substr(pos, next - pos)));
        pos = next + 1;
    }
    return Partition(std::move(parts));
}

/// All partitions of n, exactly once, in reverse-lexicographic order:
/// enumerate_partitions(4) = [4], [3,1], [2,2], [2,1,1], [1,1,1,1].
inline std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be >= 0");
    std::vector<Partition> out;
    std::vector<int> acc;
    std::function<void(int, int)> rec = [&](int rest, int cap) {
        if (rest == 0) {
            out.push_back(Partition(acc));
            return;
        }
        for (int k = std::min(rest, cap); k >= 1; --k) {
            acc.push_back(k);
            rec(rest - k, k);
            acc.pop_back();
        }
    };
    rec(n, n);
    return out;
}

/// Ordered list of non-negative integers; zeros allowed, order significant.
class Composition {
public:
    Composition() = default;

    explicit Composition(std::vector<int> entries) : entries_(std::move(entries)) {
        for (int e : entries_)
            if (e < 0) throw std::invalid_argument("Composition: entries must be >= 0");
    }

    Composition(std::initializer_list<int> entries)
        : Composition(std::vector<int>(entries)) {}

    const std::vector<int>& entries() const { return entries_; }
    int weight() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }
    int length() const { return static_cast<int>(entries_.size()); }

    bool operator==(const Composition& o) const { return entries_ == o.entries_; }

private:
    std::vector<int> entries_;
};

/// All ordered q-tuples of non-negative integers summing to n.
inline std::vector<Composition> compositions_of(int n, int q) {
    if (n < 0 || q < 0) throw std::invalid_argument("compositions_of: n, q must be >= 0");
    std::vector<Composition> out;
    if (q == 0) {
        if (n == 0) out.push_back(Composition{});
        return out;
    }
    std::vector<int> acc(static_cast<std::size_t>(q), 0);
    std::function<void(int, int)> rec = [&](int pos, int rest) {
        if (pos == q - 1) {
            acc[static_cast<std::size_t>(pos)] = rest;
            out.push_back(Composition(acc));
            return;
        }
        for (int v = 0; v <= rest; ++v) {
            acc[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, rest - v);
        }
    };
    rec(0, n);
    return out;
}

}  // namespace nakafock

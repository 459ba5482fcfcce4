#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace tgl {

/// Integer partition, parts weakly decreasing and positive.
class Partition {
   public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int x : parts_)
            if (x < 1) fail(ErrorKind::OutOfRange, "partition parts must be positive");
        if (!std::is_sorted(parts_.rbegin(), parts_.rend()))
            fail(ErrorKind::OutOfRange, "partition parts must be weakly decreasing");
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    std::size_t length() const noexcept { return parts_.size(); }
    int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    /// Transpose of the Young diagram.
    Partition conjugate() const {
        std::vector<int> out;
        if (parts_.empty()) return Partition{};
        for (int c = 1; c <= parts_.front(); ++c) {
            int len = 0;
            for (int x : parts_)
                if (x >= c) ++len;
            out.push_back(len);
        }
        return Partition(std::move(out));
    }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

    auto operator<=>(const Partition&) const = default;

   private:
    std::vector<int> parts_;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.str(); }

/// Cycle type of a permutation: count(i) is the number of i-cycles.
class CycleType {
   public:
    CycleType() = default;

    /// counts[i] = number of (i+1)-cycles.
    explicit CycleType(std::vector<int> counts) : counts_(std::move(counts)) {
        for (int c : counts_)
            if (c < 0) fail(ErrorKind::OutOfRange, "negative cycle count");
        trim();
    }

    static CycleType from_parts(const std::vector<int>& parts) {
        std::vector<int> counts;
        for (int x : parts) {
            if (x < 1) fail(ErrorKind::OutOfRange, "cycle lengths must be positive");
            if (static_cast<std::size_t>(x) > counts.size()) counts.resize(x, 0);
            ++counts[x - 1];
        }
        return CycleType(std::move(counts));
    }
    static CycleType from_partition(const Partition& p) { return from_parts(p.parts()); }
    static CycleType identity(int n) { return n == 0 ? CycleType{} : CycleType(std::vector<int>{n}); }
    static CycleType long_cycle(int n) {
        std::vector<int> c(n, 0);
        if (n > 0) c[n - 1] = 1;
        return CycleType(std::move(c));
    }

    /// Number of i-cycles, i >= 1.
    int count(int i) const noexcept {
        return (i >= 1 && static_cast<std::size_t>(i) <= counts_.size()) ? counts_[i - 1] : 0;
    }
    const std::vector<int>& counts() const noexcept { return counts_; }
    int max_length() const noexcept { return static_cast<int>(counts_.size()); }

    int n() const noexcept {
        int s = 0;
        for (std::size_t i = 0; i < counts_.size(); ++i) s += static_cast<int>(i + 1) * counts_[i];
        return s;
    }
    int num_cycles() const noexcept { return std::accumulate(counts_.begin(), counts_.end(), 0); }
    int sign() const noexcept {
        int parity = 0;
        for (std::size_t i = 0; i < counts_.size(); ++i) parity += static_cast<int>(i) * counts_[i];
        return parity % 2 ? -1 : 1;
    }

    /// Cycle lengths, largest first.
    std::vector<int> parts() const {
        std::vector<int> out;
        for (std::size_t i = counts_.size(); i-- > 0;)
            for (int c = 0; c < counts_[i]; ++c) out.push_back(static_cast<int>(i + 1));
        return out;
    }
    Partition to_partition() const { return Partition(parts()); }

    CycleType operator+(const CycleType& o) const {
        std::vector<int> c(std::max(counts_.size(), o.counts_.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = count(static_cast<int>(i + 1)) + o.count(static_cast<int>(i + 1));
        return CycleType(std::move(c));
    }

    std::string str() const { return to_partition().str(); }

    auto operator<=>(const CycleType&) const = default;

   private:
    void trim() {
        while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
    }
    std::vector<int> counts_;
};

inline std::ostream& operator<<(std::ostream& os, const CycleType& c) { return os << c.str(); }

namespace detail {
inline void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        cur.push_back(part);
        partitions_rec(remaining - part, part, cur, out);
        cur.pop_back();
    }
}
}  // namespace detail

/// All partitions of n in reverse-lexicographic order: (n), (n-1,1), (n-2,2), ...
inline std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) fail(ErrorKind::OutOfRange, "partitions of a negative integer");
    std::vector<Partition> out;
    std::vector<int> cur;
    detail::partitions_rec(n, n, cur, out);
    return out;
}

/// p(n) by the standard coin-change recurrence.
inline Integer partition_count(int n) {
    if (n < 0) return 0;
    std::vector<Integer> p(n + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int m = part; m <= n; ++m) p[m] += p[m - part];
    return p[n];
}

/// Cached partition lists and CycleType -> index maps, shared by dense class functions.
class ClassIndex {
   public:
    explicit ClassIndex(int n) : n_(n), partitions_(enumerate_partitions(n)) {
        for (std::size_t i = 0; i < partitions_.size(); ++i) {
            types_.push_back(CycleType::from_partition(partitions_[i]));
            index_.emplace(types_.back(), i);
        }
    }

    static const ClassIndex& of(int n) {
        static std::mutex mu;
        static std::map<int, std::unique_ptr<ClassIndex>> cache;
        std::lock_guard lock(mu);
        auto& slot = cache[n];
        if (!slot) slot = std::make_unique<ClassIndex>(n);
        return *slot;
    }

    int n() const noexcept { return n_; }
    std::size_t size() const noexcept { return types_.size(); }
    const std::vector<Partition>& partitions() const noexcept { return partitions_; }
    const std::vector<CycleType>& types() const noexcept { return types_; }
    const CycleType& type(std::size_t i) const { return types_.at(i); }

    std::size_t index(const CycleType& mu) const {
        auto it = index_.find(mu);
        if (it == index_.end()) fail(ErrorKind::SizeMismatch, "cycle type " + mu.str() + " is not a class of S_" + std::to_string(n_));
        return it->second;
    }

   private:
    int n_;
    std::vector<Partition> partitions_;
    std::vector<CycleType> types_;
    std::map<CycleType, std::size_t> index_;
};

/// Order of the centralizer of a permutation of type mu: prod_i i^{mu_i} mu_i!.
inline Integer z_mu(const CycleType& mu) {
    Integer z = 1;
    for (int i = 1; i <= mu.max_length(); ++i) {
        const int m = mu.count(i);
        if (m == 0) continue;
        z *= ipow(Integer(i), static_cast<unsigned long>(m)) * factorial(static_cast<unsigned long>(m));
    }
    return z;
}

/// Size of the conjugacy class of type mu in S_n.
inline Integer class_size(const CycleType& mu) {
    return factorial(static_cast<unsigned long>(mu.n())) / z_mu(mu);
}

}  // namespace tgl

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace symtrace {

/// A permutation of {1..k}, stored as its image array: image()[i-1] = pi(i).
/// Positions are 1-based throughout, matching the pi(i) convention used for
/// tensor-factor bookkeeping.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> image);

    static Permutation identity(int k);
    /// Builds the permutation with the given disjoint cycles on {1..k}.
    /// Elements not mentioned are fixed points.
    static Permutation from_cycles(int k, const std::vector<std::vector<int>>& cycles);

    int degree() const { return (int)image_.size(); }
    int apply(int i) const { return image_[i - 1]; }
    const std::vector<int>& image() const { return image_; }

    Permutation inverse() const;
    bool is_identity() const;

    /// +1 for even, -1 for odd permutations.
    int sign() const;

    /// Cycle decomposition in canonical order: every cycle is rotated so that
    /// its largest element comes last, cycles are sorted by increasing maxima,
    /// and 1-cycles are kept.  The cycle containing k is therefore last.
    std::vector<std::vector<int>> canonical_cycles() const;

    /// Cycle lengths sorted decreasingly (the conjugacy-class label).
    std::vector<int> cycle_type() const;

    std::string str() const;

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.image_ == b.image_;
    }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
    friend bool operator<(const Permutation& a, const Permutation& b) {
        return a.image_ < b.image_;
    }

private:
    std::vector<int> image_;
};

/// compose(p, q) applies q first: the result maps i to p(q(i)).
Permutation compose(const Permutation& p, const Permutation& q);

/// sigma * pi * sigma^{-1}.
Permutation conjugate(const Permutation& sigma, const Permutation& pi);

/// All k! permutations of degree k in lexicographic image order.
std::vector<Permutation> all_permutations(int k);

std::int64_t factorial(int k);

/// A partition of k: weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int k() const { return k_; }
    int num_parts() const { return (int)parts_.size(); }
    const std::vector<int>& parts() const { return parts_; }

    /// Number of standard tableaux of this shape, via the hook length formula.
    std::int64_t hook_dimension() const;

    std::string str() const;

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) {
        return a.parts_ < b.parts_;
    }

private:
    std::vector<int> parts_;
    int k_ = 0;
};

/// All partitions of k in reverse-lexicographic order: (k) first, (1,...,1) last.
std::vector<Partition> partitions(int k);

/// A filling of the Young diagram of `shape` with 1..k, no repetitions.
class Tableau {
public:
    Tableau(Partition shape, std::vector<std::vector<int>> rows);

    /// Row-major filling: 1..k left to right, top to bottom.
    static Tableau natural(const Partition& shape);

    const Partition& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    std::vector<std::vector<int>> columns() const;

    /// Permutations preserving each row (column) setwise.
    std::vector<Permutation> row_stabilizer() const;
    std::vector<Permutation> column_stabilizer() const;

private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
};

}  // namespace symtrace

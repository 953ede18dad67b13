#pragma once

#include <optional>
#include <vector>

#include "hodge/errors.hpp"

namespace hodge {

/// Bigraded dimension data h[p][q] of an n-dimensional compact complex
/// manifold, stored as an (n+1)x(n+1) matrix of non-negative integers.
/// Reads outside [0,n]x[0,n] yield 0; every consumer relies on that.
class HodgeDiamond {
public:
    HodgeDiamond() : HodgeDiamond(0) {}

    // All-zero diamond of the given dimension.
    explicit HodgeDiamond(int n);

    // Row-major entries, row p, column q. Throws ValidationError on a ragged
    // matrix or a negative entry.
    HodgeDiamond(int n, std::vector<std::vector<int>> entries);

    int dim() const { return n_; }

    // Zero-extended accessor; any (p, q) is a valid argument.
    int at(int p, int q) const {
        if (p < 0 || q < 0 || p > n_ || q > n_) return 0;
        return entries_[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
    }

    const std::vector<std::vector<int>>& entries() const { return entries_; }

    long long total() const;

    bool operator==(const HodgeDiamond& other) const = default;

private:
    int n_ = 0;
    std::vector<std::vector<int>> entries_;
};

/// De Rham dimension data b[0..2n]. Reads outside [0,2n] yield 0.
class BettiVector {
public:
    BettiVector() : BettiVector(0) {}

    explicit BettiVector(int n);

    // Throws ValidationError unless values has length 2n+1 with all entries >= 0.
    BettiVector(int n, std::vector<int> values);

    int dim() const { return n_; }

    int at(int k) const {
        if (k < 0 || k > 2 * n_) return 0;
        return values_[static_cast<std::size_t>(k)];
    }

    const std::vector<int>& values() const { return values_; }

    bool operator==(const BettiVector& other) const = default;

private:
    int n_ = 0;
    std::vector<int> values_;
};

/// Frolicher defect d[k] = sum_{p+q=k} h[p][q] - b[k]. Entries are signed so
/// that a validation-bypassed model can carry inconsistent data in tests; the
/// public constructor rejects negative entries.
class DefectVector {
public:
    DefectVector() = default;

    // Throws ValidationError on a negative entry or wrong length.
    DefectVector(int n, std::vector<int> values);

    // Testing hook: accepts negative entries. Not for production paths.
    static DefectVector unchecked(int n, std::vector<int> values);

    int dim() const { return n_; }

    int at(int k) const {
        if (k < 0 || k > 2 * n_) return 0;
        return values_[static_cast<std::size_t>(k)];
    }

    const std::vector<int>& values() const { return values_; }

    bool is_zero() const;

    // Least k with d[k] > 0, or nullopt when the vector vanishes.
    std::optional<int> first_positive() const;

    bool operator==(const DefectVector& other) const = default;

private:
    int n_ = 0;
    std::vector<int> values_;
};

/// Anti-diagonal profile of a diamond: dims.at(k) = sum_{p-q=k} h[p][q] for
/// k in [-n, n]. These are the Hochschild homology dimensions under HKR.
struct HochschildDims {
    int n = 0;
    std::vector<int> dims;  // index j holds k = j - n

    int at(int k) const {
        if (k < -n || k > n) return 0;
        return dims[static_cast<std::size_t>(k + n)];
    }

    bool operator==(const HochschildDims& other) const = default;
};

// Re-index d by (i, i) into a diamond of dimension target_dim:
// result[p][q] = d[p-i][q-i]. Requires target_dim >= d.dim() + i.
HodgeDiamond shift(const HodgeDiamond& d, int i, int target_dim);

// Entrywise sum; dimensions must agree.
HodgeDiamond direct_sum(const HodgeDiamond& a, const HodgeDiamond& b);

// h[p][q] == h[n-p][n-q] for all p, q.
bool serre_symmetric(const HodgeDiamond& d);

// h[p][q] == h[q][p] for all p, q.
bool hodge_symmetric(const HodgeDiamond& d);

// chi_p = sum_q (-1)^q h[p][q], for p = 0..n.
std::vector<int> euler_p(const HodgeDiamond& d);

// Alternating sum of Betti numbers.
int topological_euler(const BettiVector& b);

HochschildDims anti_diagonal_sums(const HodgeDiamond& d);

// Row sums b[k] = sum_{p+q=k} h[p][q]; the Betti vector forced by
// E1-degeneracy of the Frolicher spectral sequence.
BettiVector betti_from_diamond(const HodgeDiamond& d);

}  // namespace hodge

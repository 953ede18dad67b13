#pragma once

#include <optional>
#include <vector>

#include "hodge/model.hpp"

namespace hodge {

/// Dimensions along a finite window of a long exact sequence, flanked by
/// zeros. Entries are known non-negative integers or unknown markers.
class ExactSequenceDims {
public:
    using Entry = std::optional<int>;

    ExactSequenceDims() = default;

    // Knowns must be >= 0.
    explicit ExactSequenceDims(std::vector<Entry> entries);

    const std::vector<Entry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    std::size_t unknown_count() const;

    // Index of the single unknown; meaningful only when unknown_count() == 1.
    std::size_t unknown_index() const;

    // Copy with the single unknown replaced by value.
    ExactSequenceDims substituted(int value) const;

private:
    std::vector<Entry> entries_;
};

// True iff sum (-1)^i entries[i] = 0. Throws PreconditionError on unknowns.
bool alternating_sum_check(const ExactSequenceDims& s);

// The value forcing the alternating sum to zero. Requires exactly one
// unknown; a negative forced value raises ValidationError (inconsistent data).
int solve_unknown(const ExactSequenceDims& s);

/// Claimed relative Dolbeault dimensions of the pair (m, sub): cells with
/// p > sub.dim or q > sub.dim carry m's own numbers, the rest stay
/// undetermined (the long exact sequence fixes them only up to rank data of
/// restriction maps, which dimension bookkeeping cannot supply).
struct RelativeDimsTable {
    int n = 0;  // dimension of the ambient model
    std::vector<std::vector<std::optional<int>>> cells;

    std::optional<int> at(int p, int q) const {
        if (p < 0 || q < 0 || p > n || q > n) return 0;
        return cells[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
    }
};

RelativeDimsTable relative_dims_trivial_range(const ManifoldModel& m, const ManifoldModel& sub);

/// The window of the relative long exact sequence at fixed p, over q = 0..n:
///
///   0 -> R_0 -> h^{p,0}(m) -> h^{p,0}(sub) -> R_1 -> ... -> h^{p,n}(sub) -> 0
///
/// where R_q is the relative term in degree (p, q). R_q is filled from the
/// trivial range and left unknown otherwise. The relative term R_q sits at
/// index relative_term_index(q) = 3q.
ExactSequenceDims relative_les_window(const ManifoldModel& m, const ManifoldModel& sub, int p);

constexpr std::size_t relative_term_index(int q) { return static_cast<std::size_t>(3 * q); }

}  // namespace hodge

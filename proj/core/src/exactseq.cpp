#include "hodge/exactseq.hpp"

#include <string>

namespace hodge {

ExactSequenceDims::ExactSequenceDims(std::vector<Entry> entries) : entries_(std::move(entries)) {
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] && *entries_[i] < 0)
            throw ValidationError("ExactSequenceDims: negative dimension at index " + std::to_string(i));
}

std::size_t ExactSequenceDims::unknown_count() const {
    std::size_t count = 0;
    for (const auto& e : entries_)
        if (!e) ++count;
    return count;
}

std::size_t ExactSequenceDims::unknown_index() const {
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (!entries_[i]) return i;
    throw PreconditionError("ExactSequenceDims: no unknown entry");
}

ExactSequenceDims ExactSequenceDims::substituted(int value) const {
    if (unknown_count() != 1)
        throw PreconditionError("ExactSequenceDims::substituted needs exactly one unknown");
    auto entries = entries_;
    entries[unknown_index()] = value;
    return ExactSequenceDims(std::move(entries));
}

bool alternating_sum_check(const ExactSequenceDims& s) {
    if (s.unknown_count() != 0)
        throw PreconditionError("alternating_sum_check: sequence has unknown entries");
    long long sum = 0;
    const auto& entries = s.entries();
    for (std::size_t i = 0; i < entries.size(); ++i) sum += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(*entries[i]);
    return sum == 0;
}

int solve_unknown(const ExactSequenceDims& s) {
    const std::size_t unknowns = s.unknown_count();
    if (unknowns != 1)
        throw PreconditionError("solve_unknown: expected exactly one unknown, found " + std::to_string(unknowns));
    long long sum = 0;
    const auto& entries = s.entries();
    std::size_t hole = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (!entries[i]) {
            hole = i;
            continue;
        }
        sum += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(*entries[i]);
    }
    // sign * x + sum = 0
    const long long sign = (hole % 2 == 0) ? 1 : -1;
    const long long value = -sign * sum;
    if (value < 0)
        throw ValidationError("solve_unknown: forced value " + std::to_string(value) +
                              " is negative; the sequence data is inconsistent");
    return static_cast<int>(value);
}

RelativeDimsTable relative_dims_trivial_range(const ManifoldModel& m, const ManifoldModel& sub) {
    if (sub.dim >= m.dim)
        throw DimensionError("relative_dims_trivial_range: submanifold dimension " + std::to_string(sub.dim) +
                             " must be smaller than " + std::to_string(m.dim));
    RelativeDimsTable table;
    table.n = m.dim;
    table.cells.assign(static_cast<std::size_t>(m.dim) + 1,
                       std::vector<std::optional<int>>(static_cast<std::size_t>(m.dim) + 1, std::nullopt));
    for (int p = 0; p <= m.dim; ++p)
        for (int q = 0; q <= m.dim; ++q)
            if (p > sub.dim || q > sub.dim)
                table.cells[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = m.h(p, q);
    return table;
}

ExactSequenceDims relative_les_window(const ManifoldModel& m, const ManifoldModel& sub, int p) {
    const RelativeDimsTable relative = relative_dims_trivial_range(m, sub);
    std::vector<ExactSequenceDims::Entry> entries;
    entries.reserve(3 * static_cast<std::size_t>(m.dim) + 3);
    for (int q = 0; q <= m.dim; ++q) {
        entries.push_back(relative.at(p, q));
        entries.push_back(m.h(p, q));
        entries.push_back(sub.h(p, q));
    }
    return ExactSequenceDims(std::move(entries));
}

}  // namespace hodge

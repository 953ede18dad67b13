#include "hodge/diamond.hpp"

#include <string>

namespace hodge {

namespace {

std::vector<std::vector<int>> zero_matrix(int n) {
    return std::vector<std::vector<int>>(static_cast<std::size_t>(n) + 1,
                                         std::vector<int>(static_cast<std::size_t>(n) + 1, 0));
}

void require_non_negative_dim(int n, const char* what) {
    if (n < 0) throw ValidationError(std::string(what) + ": dimension must be non-negative");
}

}  // namespace

HodgeDiamond::HodgeDiamond(int n) : n_(n), entries_(zero_matrix((require_non_negative_dim(n, "HodgeDiamond"), n))) {}

HodgeDiamond::HodgeDiamond(int n, std::vector<std::vector<int>> entries) : n_(n), entries_(std::move(entries)) {
    require_non_negative_dim(n, "HodgeDiamond");
    const auto rows = static_cast<std::size_t>(n) + 1;
    if (entries_.size() != rows)
        throw ValidationError("HodgeDiamond: expected " + std::to_string(rows) + " rows, got " +
                              std::to_string(entries_.size()));
    for (std::size_t p = 0; p < rows; ++p) {
        if (entries_[p].size() != rows)
            throw ValidationError("HodgeDiamond: row " + std::to_string(p) + " has " +
                                  std::to_string(entries_[p].size()) + " columns, expected " + std::to_string(rows));
        for (std::size_t q = 0; q < rows; ++q)
            if (entries_[p][q] < 0)
                throw ValidationError("HodgeDiamond: negative entry at (" + std::to_string(p) + "," +
                                      std::to_string(q) + ")");
    }
}

long long HodgeDiamond::total() const {
    long long sum = 0;
    for (const auto& row : entries_)
        for (int v : row) sum += v;
    return sum;
}

BettiVector::BettiVector(int n)
    : n_((require_non_negative_dim(n, "BettiVector"), n)),
      values_(static_cast<std::size_t>(2 * n) + 1, 0) {}

BettiVector::BettiVector(int n, std::vector<int> values) : n_(n), values_(std::move(values)) {
    require_non_negative_dim(n, "BettiVector");
    const auto len = static_cast<std::size_t>(2 * n) + 1;
    if (values_.size() != len)
        throw ValidationError("BettiVector: expected " + std::to_string(len) + " entries, got " +
                              std::to_string(values_.size()));
    for (std::size_t k = 0; k < len; ++k)
        if (values_[k] < 0)
            throw ValidationError("BettiVector: negative entry at k=" + std::to_string(k));
}

DefectVector::DefectVector(int n, std::vector<int> values) : n_(n), values_(std::move(values)) {
    require_non_negative_dim(n, "DefectVector");
    const auto len = static_cast<std::size_t>(2 * n) + 1;
    if (values_.size() != len)
        throw ValidationError("DefectVector: expected " + std::to_string(len) + " entries, got " +
                              std::to_string(values_.size()));
    for (std::size_t k = 0; k < len; ++k)
        if (values_[k] < 0)
            throw ValidationError("DefectVector: negative defect at k=" + std::to_string(k) +
                                  " (Frolicher inequality violated)");
}

DefectVector DefectVector::unchecked(int n, std::vector<int> values) {
    DefectVector d;
    d.n_ = n;
    d.values_ = std::move(values);
    return d;
}

bool DefectVector::is_zero() const {
    for (int v : values_)
        if (v != 0) return false;
    return true;
}

std::optional<int> DefectVector::first_positive() const {
    for (std::size_t k = 0; k < values_.size(); ++k)
        if (values_[k] > 0) return static_cast<int>(k);
    return std::nullopt;
}

HodgeDiamond shift(const HodgeDiamond& d, int i, int target_dim) {
    if (i < 0) throw PreconditionError("shift: offset must be non-negative");
    if (target_dim < d.dim() + i)
        throw DimensionError("shift: target dimension " + std::to_string(target_dim) +
                             " too small for dimension " + std::to_string(d.dim()) + " shifted by " +
                             std::to_string(i));
    auto out = std::vector<std::vector<int>>(static_cast<std::size_t>(target_dim) + 1,
                                             std::vector<int>(static_cast<std::size_t>(target_dim) + 1, 0));
    for (int p = 0; p <= target_dim; ++p)
        for (int q = 0; q <= target_dim; ++q) out[p][q] = d.at(p - i, q - i);
    return HodgeDiamond(target_dim, std::move(out));
}

HodgeDiamond direct_sum(const HodgeDiamond& a, const HodgeDiamond& b) {
    if (a.dim() != b.dim())
        throw DimensionError("direct_sum: dimension mismatch (" + std::to_string(a.dim()) + " vs " +
                             std::to_string(b.dim()) + ")");
    auto out = a.entries();
    for (int p = 0; p <= a.dim(); ++p)
        for (int q = 0; q <= a.dim(); ++q) out[p][q] += b.at(p, q);
    return HodgeDiamond(a.dim(), std::move(out));
}

bool serre_symmetric(const HodgeDiamond& d) {
    const int n = d.dim();
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q)
            if (d.at(p, q) != d.at(n - p, n - q)) return false;
    return true;
}

bool hodge_symmetric(const HodgeDiamond& d) {
    for (int p = 0; p <= d.dim(); ++p)
        for (int q = 0; q < p; ++q)
            if (d.at(p, q) != d.at(q, p)) return false;
    return true;
}

std::vector<int> euler_p(const HodgeDiamond& d) {
    std::vector<int> chi(static_cast<std::size_t>(d.dim()) + 1, 0);
    for (int p = 0; p <= d.dim(); ++p) {
        int acc = 0;
        for (int q = 0; q <= d.dim(); ++q) acc += (q % 2 == 0 ? 1 : -1) * d.at(p, q);
        chi[static_cast<std::size_t>(p)] = acc;
    }
    return chi;
}

int topological_euler(const BettiVector& b) {
    int acc = 0;
    for (int k = 0; k <= 2 * b.dim(); ++k) acc += (k % 2 == 0 ? 1 : -1) * b.at(k);
    return acc;
}

HochschildDims anti_diagonal_sums(const HodgeDiamond& d) {
    HochschildDims hh;
    hh.n = d.dim();
    hh.dims.assign(static_cast<std::size_t>(2 * d.dim()) + 1, 0);
    for (int p = 0; p <= d.dim(); ++p)
        for (int q = 0; q <= d.dim(); ++q) hh.dims[static_cast<std::size_t>(p - q + d.dim())] += d.at(p, q);
    return hh;
}

BettiVector betti_from_diamond(const HodgeDiamond& d) {
    std::vector<int> b(static_cast<std::size_t>(2 * d.dim()) + 1, 0);
    for (int p = 0; p <= d.dim(); ++p)
        for (int q = 0; q <= d.dim(); ++q) b[static_cast<std::size_t>(p + q)] += d.at(p, q);
    return BettiVector(d.dim(), std::move(b));
}

}  // namespace hodge

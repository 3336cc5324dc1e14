#pragma once

#include <string>
#include <vector>

#include "rrcensus/root_system.hpp"

namespace rrcensus {

class LeadingTermSet;

// One part x_{ab}(deg) of a colored partition.  deg is the stored signed
// degree, so parts of negative degree carry deg <= -1 (census enumeration
// also admits deg == 0).
struct Part {
    Cell cell;
    int deg = -1;

    friend bool operator==(const Part&, const Part&) = default;
};

// deg first, then the cell order.
bool part_less(const Part& p1, const Part& p2) noexcept;

// Finite multiset of parts kept in canonical ascending order under
// part_less.  Immutable after construction.
class ColoredPartition {
public:
    ColoredPartition() = default;
    explicit ColoredPartition(std::vector<Part> parts);

    const std::vector<Part>& parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    long long degree() const noexcept { return degree_; }
    bool empty() const noexcept { return parts_.empty(); }
    // Multiset of part degrees, ascending.
    std::vector<int> shape() const;

    friend bool operator==(const ColoredPartition&, const ColoredPartition&) = default;

private:
    std::vector<Part> parts_;
    long long degree_ = 0;
};

// Order on colored partitions, compared in stages:
//   1. greater length is smaller,
//   2. smaller degree is smaller,
//   3. shapes in reverse lexicographic order (last, i.e. largest, entry
//      first; the first difference decides, larger entry = larger),
//   4. colors in reverse lexicographic order under cell_less.
bool partition_less(const ColoredPartition& pi, const ColoredPartition& kappa) noexcept;

// Multiset union; degree and length are additive.
ColoredPartition multiply(const ColoredPartition& kappa, const ColoredPartition& rho);

// 1 if the parts of rho are multiset-contained in pi, else 0.
int embeddings_of(const ColoredPartition& rho, const ColoredPartition& pi) noexcept;

// pi avoids every leading term, i.e. no 2-element sub-multiset of pi lies
// in lt.  Throws if some part has deg >= 0.
bool is_rr(const ColoredPartition& pi, const LeadingTermSet& lt);

// "12(-2)", "2_bar1_bar(-1)", ...
std::string to_string(Rank rank, const Part& p);
// Parts joined by '*' in canonical order; the empty partition renders "1".
std::string to_string(Rank rank, const ColoredPartition& pi);

} // namespace rrcensus

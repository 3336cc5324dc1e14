#pragma once

#include <vector>

#include "rrcensus/bigint.hpp"
#include "rrcensus/partitions.hpp"
#include "rrcensus/root_system.hpp"

namespace rrcensus {

/*
  Leading terms of the level-one relations.  They are quadratic, and
  membership depends only on the two cells and the degree gap:

    gap 0:  {x_{a1 b1}(-j), x_{a2 b2}(-j)} is a leading term iff some
            labelling of the pair has b2 >= b1 and a2 <= a1;
    gap 1:  x_{a1 b1}(-j-1) x_{a2 b2}(-j) is a leading term iff b1 <= a2,
            equivalently iff some r has the lower-degree cell in rows
            {1..r} and the higher-degree cell in columns {r..2n};
    gap 2+: never.

  Degree-shift invariance makes the set infinite across j but O(1) to
  query, so membership is computed on demand and nothing is stored.
*/

// Unordered same-degree cell pair, either orientation.
bool same_degree_pattern(Cell c1, Cell c2) noexcept;

// Ordered adjacent-degree pattern: `lower` colors the part of degree
// -j-1 and `higher` the part of degree -j.
bool adjacent_degree_pattern(Cell lower, Cell higher) noexcept;

// Membership for an unordered pair of parts (any degrees).
bool is_leading_term(Rank rank, const Part& p1, const Part& p2) noexcept;

// Same, for a quadratic colored partition.  Throws unless length == 2.
bool is_leading_term(Rank rank, const ColoredPartition& pair);

// Adjacent-degree membership through the triangle characterization:
// exists r with lower in rows {1..r} and higher in columns {r..2n}.
// Agrees with is_leading_term on its domain; throws unless the degrees
// differ by exactly one (lower = the more negative part).
bool is_leading_term_via_triangles(Rank rank, const Part& lower, const Part& higher);

// Number of leading-term cell patterns at a fixed degree gap (0 or 1);
// 0 for gap >= 2.  Closed forms: both gaps give
// sum_{r=1..2n} r * T(2n-r+1) with T(m) = m(m+1)/2.
Int count_leading_terms(Rank rank, int gap);

// The distinct 2-element sub-multisets of pi that are leading terms,
// each reported once.
std::vector<ColoredPartition> enumerate_leading_subsets(Rank rank, const ColoredPartition& pi);

// Handle used by is_rr; the set is fully determined by the rank.
class LeadingTermSet {
public:
    explicit LeadingTermSet(Rank rank) : rank_(rank) {}
    Rank rank() const noexcept { return rank_; }
    bool contains(const Part& p1, const Part& p2) const noexcept
    {
        return is_leading_term(rank_, p1, p2);
    }

private:
    Rank rank_;
};

} // namespace rrcensus

#include "rrcensus/leading_terms.hpp"

#include <algorithm>
#include <stdexcept>

namespace rrcensus {

bool same_degree_pattern(Cell c1, Cell c2) noexcept
{
    return (c2.row >= c1.row && c2.col <= c1.col) || (c1.row >= c2.row && c1.col <= c2.col);
}

bool adjacent_degree_pattern(Cell lower, Cell higher) noexcept
{
    return lower.row <= higher.col;
}

bool is_leading_term(Rank /*rank*/, const Part& p1, const Part& p2) noexcept
{
    const int gap = p1.deg < p2.deg ? p2.deg - p1.deg : p1.deg - p2.deg;
    if (gap == 0)
        return same_degree_pattern(p1.cell, p2.cell);
    if (gap == 1) {
        const Part& lower = p1.deg < p2.deg ? p1 : p2;
        const Part& higher = p1.deg < p2.deg ? p2 : p1;
        return adjacent_degree_pattern(lower.cell, higher.cell);
    }
    return false;
}

bool is_leading_term(Rank rank, const ColoredPartition& pair)
{
    if (pair.length() != 2)
        throw std::invalid_argument("is_leading_term: expected a quadratic partition, got length " +
                                    std::to_string(pair.length()));
    return is_leading_term(rank, pair.parts()[0], pair.parts()[1]);
}

bool is_leading_term_via_triangles(Rank rank, const Part& lower, const Part& higher)
{
    if (lower.deg + 1 != higher.deg)
        throw std::invalid_argument("is_leading_term_via_triangles: degrees must be adjacent");
    for (int r = 1; r <= rank.side(); ++r)
        if (in_lower_triangle(rank, lower.cell, r) && in_upper_triangle(rank, higher.cell, r))
            return true;
    return false;
}

Int count_leading_terms(Rank rank, int gap)
{
    if (gap < 0)
        throw std::invalid_argument("count_leading_terms: negative gap");
    if (gap >= 2)
        return 0;
    // gap 1: the lower cell lies in row r (r choices of column) and the
    // higher cell in columns {r..2n}, T(2n-r+1) cells.  gap 0: summing the
    // unordered patterns row by row gives the reversed sum, same value.
    Int total = 0;
    const int side = rank.side();
    for (int r = 1; r <= side; ++r) {
        const long long t = static_cast<long long>(side - r + 1) * (side - r + 2) / 2;
        total += static_cast<long long>(r) * t;
    }
    return total;
}

std::vector<ColoredPartition> enumerate_leading_subsets(Rank rank, const ColoredPartition& pi)
{
    const auto& parts = pi.parts();
    std::vector<std::pair<Part, Part>> found;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            if (is_leading_term(rank, parts[i], parts[j]))
                found.emplace_back(parts[i], parts[j]); // already part_less-sorted
    auto pair_less = [](const std::pair<Part, Part>& x, const std::pair<Part, Part>& y) {
        if (!(x.first == y.first))
            return part_less(x.first, y.first);
        return part_less(x.second, y.second);
    };
    std::sort(found.begin(), found.end(), pair_less);
    found.erase(std::unique(found.begin(), found.end()), found.end());
    std::vector<ColoredPartition> out;
    out.reserve(found.size());
    for (auto& [p1, p2] : found)
        out.push_back(ColoredPartition({p1, p2}));
    return out;
}

} // namespace rrcensus

#include "rrcensus/partitions.hpp"

#include <algorithm>
#include <stdexcept>

#include "rrcensus/leading_terms.hpp"

namespace rrcensus {

bool part_less(const Part& p1, const Part& p2) noexcept
{
    if (p1.deg != p2.deg)
        return p1.deg < p2.deg;
    return cell_less(p1.cell, p2.cell);
}

ColoredPartition::ColoredPartition(std::vector<Part> parts) : parts_(std::move(parts))
{
    std::sort(parts_.begin(), parts_.end(), part_less);
    for (const Part& p : parts_)
        degree_ += p.deg;
}

std::vector<int> ColoredPartition::shape() const
{
    std::vector<int> sh;
    sh.reserve(parts_.size());
    for (const Part& p : parts_)
        sh.push_back(p.deg);
    return sh;
}

bool partition_less(const ColoredPartition& pi, const ColoredPartition& kappa) noexcept
{
    if (pi.length() != kappa.length())
        return pi.length() > kappa.length();
    if (pi.degree() != kappa.degree())
        return pi.degree() < kappa.degree();
    const auto& a = pi.parts();
    const auto& b = kappa.parts();
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i].deg != b[i].deg)
            return a[i].deg < b[i].deg;
    for (std::size_t i = a.size(); i-- > 0;)
        if (!(a[i].cell == b[i].cell))
            return cell_less(a[i].cell, b[i].cell);
    return false;
}

ColoredPartition multiply(const ColoredPartition& kappa, const ColoredPartition& rho)
{
    std::vector<Part> merged;
    merged.reserve(kappa.parts().size() + rho.parts().size());
    std::merge(kappa.parts().begin(), kappa.parts().end(), rho.parts().begin(),
               rho.parts().end(), std::back_inserter(merged), part_less);
    return ColoredPartition(std::move(merged));
}

int embeddings_of(const ColoredPartition& rho, const ColoredPartition& pi) noexcept
{
    const auto& small = rho.parts();
    const auto& big = pi.parts();
    std::size_t j = 0;
    for (const Part& p : small) {
        while (j < big.size() && part_less(big[j], p))
            ++j;
        if (j == big.size() || !(big[j] == p))
            return 0;
        ++j;
    }
    return 1;
}

bool is_rr(const ColoredPartition& pi, const LeadingTermSet& lt)
{
    const auto& parts = pi.parts();
    for (const Part& p : parts)
        if (p.deg >= 0)
            throw std::invalid_argument("is_rr: partition has a part of degree >= 0");
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            if (lt.contains(parts[i], parts[j]))
                return false;
    return true;
}

std::string to_string(Rank rank, const Part& p)
{
    return cell_label(rank, p.cell) + "(" + std::to_string(p.deg) + ")";
}

std::string to_string(Rank rank, const ColoredPartition& pi)
{
    if (pi.empty())
        return "1";
    std::string out;
    for (const Part& p : pi.parts()) {
        if (!out.empty())
            out += '*';
        out += to_string(rank, p);
    }
    return out;
}

} // namespace rrcensus

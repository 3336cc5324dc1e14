#include "rrcensus/root_system.hpp"

#include <boost/multiprecision/integer.hpp>

#include <stdexcept>

namespace rrcensus {

Rank::Rank(int n) : n_(n)
{
    if (n < 2)
        throw std::invalid_argument("Rank: C_n requires n >= 2, got n = " + std::to_string(n));
}

bool cell_valid(Rank rank, Cell c) noexcept
{
    return 1 <= c.col && c.col <= c.row && c.row <= rank.side();
}

bool cell_less(Cell c1, Cell c2) noexcept
{
    if (c1.row != c2.row)
        return c1.row > c2.row;
    return c1.col > c2.col;
}

std::vector<Cell> all_cells(Rank rank)
{
    std::vector<Cell> cells;
    cells.reserve(static_cast<std::size_t>(rank.n()) * (2 * rank.n() + 1));
    for (int row = rank.side(); row >= 1; --row)
        for (int col = row; col >= 1; --col)
            cells.push_back(Cell{col, row});
    return cells;
}

namespace {

void check_row_index(Rank rank, int r)
{
    if (r < 1 || r > rank.side())
        throw std::out_of_range("triangle index r = " + std::to_string(r) +
                                " outside 1.." + std::to_string(rank.side()));
}

} // namespace

bool in_lower_triangle(Rank rank, Cell c, int r)
{
    check_row_index(rank, r);
    return c.row <= r;
}

bool in_upper_triangle(Rank rank, Cell c, int r)
{
    check_row_index(rank, r);
    return c.col >= r;
}

std::string index_label(Rank rank, int k)
{
    if (k <= rank.n())
        return std::to_string(k);
    return std::to_string(2 * rank.n() - k + 1) + "_bar";
}

std::string cell_label(Rank rank, Cell c)
{
    return index_label(rank, c.col) + index_label(rank, c.row);
}

Weight weight_2theta(Rank rank)
{
    Weight w(static_cast<std::size_t>(rank.n()), 0);
    w[0] = 4;
    return w;
}

Weight weight_3theta(Rank rank)
{
    Weight w(static_cast<std::size_t>(rank.n()), 0);
    w[0] = 6;
    return w;
}

Weight weight_3theta_minus_alpha1(Rank rank)
{
    Weight w(static_cast<std::size_t>(rank.n()), 0);
    w[0] = 5;
    w[1] = 1;
    return w;
}

Int weyl_dim(Rank rank, const Weight& lambda)
{
    const auto n = static_cast<std::size_t>(rank.n());
    if (lambda.size() != n)
        throw std::invalid_argument("weyl_dim: weight has length " +
                                    std::to_string(lambda.size()) + ", expected " +
                                    std::to_string(n));
    for (std::size_t i = 0; i < n; ++i) {
        const bool dominant = lambda[i] >= (i + 1 < n ? lambda[i + 1] : 0);
        if (!dominant)
            throw std::invalid_argument("weyl_dim: weight is not dominant integral");
    }

    // rho = (n, n-1, ..., 1)
    std::vector<long long> mu(n);
    for (std::size_t i = 0; i < n; ++i)
        mu[i] = lambda[i] + static_cast<long long>(n - i);

    Int num = 1, den = 1;
    auto factor = [&](long long top, long long bottom) {
        num *= top;
        den *= bottom;
        const Int g = boost::multiprecision::gcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    };

    for (std::size_t i = 0; i < n; ++i) {
        const auto rho_i = static_cast<long long>(n - i);
        factor(mu[i], rho_i); // root 2 e_i (the common factor 2 cancels)
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto rho_j = static_cast<long long>(n - j);
            factor(mu[i] - mu[j], rho_i - rho_j);
            factor(mu[i] + mu[j], rho_i + rho_j);
        }
    }

    if (den != 1)
        throw std::logic_error("weyl_dim: non-integral quotient");
    return num;
}

Int q3_dimension(Rank rank)
{
    return weyl_dim(rank, weight_2theta(rank)) + weyl_dim(rank, weight_3theta(rank)) +
           weyl_dim(rank, weight_3theta_minus_alpha1(rank));
}

Int q3_expected(Rank rank)
{
    return 2 * rank.n() * binomial(2 * rank.n() + 4, 5);
}

} // namespace rrcensus

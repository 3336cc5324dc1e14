#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rrcensus/root_system.hpp"

using namespace rrcensus;

TEST_CASE("rank validation")
{
    CHECK_THROWS_AS(Rank(1), std::invalid_argument);
    CHECK_THROWS_AS(Rank(0), std::invalid_argument);
    CHECK_THROWS_AS(Rank(-3), std::invalid_argument);
    CHECK(Rank(2).n() == 2);
    CHECK(Rank(2).side() == 4);
}

TEST_CASE("cell count is n(2n+1)")
{
    for (int n = 2; n <= 10; ++n) {
        const Rank rank(n);
        CHECK(all_cells(rank).size() == static_cast<std::size_t>(n * (2 * n + 1)));
        int valid = 0;
        for (int a = 1; a <= rank.side(); ++a)
            for (int b = 1; b <= rank.side(); ++b)
                valid += cell_valid(rank, Cell{a, b}) ? 1 : 0;
        CHECK(valid == n * (2 * n + 1));
    }
}

TEST_CASE("cell order examples")
{
    // the cell in the lower row comes first
    CHECK(cell_less(Cell{1, 2}, Cell{1, 1}));
    CHECK_FALSE(cell_less(Cell{1, 1}, Cell{1, 2}));
    // irreflexive
    for (const Cell& c : all_cells(Rank(3)))
        CHECK_FALSE(cell_less(c, c));
}

TEST_CASE("cells of C_2 in ascending order")
{
    const std::vector<Cell> expected = {
        {4, 4}, {3, 4}, {2, 4}, {1, 4}, {3, 3}, {2, 3}, {1, 3}, {2, 2}, {1, 2}, {1, 1},
    };
    CHECK(all_cells(Rank(2)) == expected);
    for (std::size_t i = 0; i + 1 < expected.size(); ++i)
        CHECK(cell_less(expected[i], expected[i + 1]));
}

TEST_CASE("cell order is a strict total order")
{
    for (int n = 2; n <= 3; ++n) {
        const auto cells = all_cells(Rank(n));
        for (const Cell& a : cells)
            for (const Cell& b : cells) {
                const int ways = int(cell_less(a, b)) + int(cell_less(b, a)) + int(a == b);
                CHECK(ways == 1); // trichotomy
            }
        for (const Cell& a : cells)
            for (const Cell& b : cells)
                for (const Cell& c : cells)
                    if (cell_less(a, b) && cell_less(b, c))
                        CHECK(cell_less(a, c));
    }
}

TEST_CASE("triangle membership")
{
    const Rank r3(3);
    CHECK(in_lower_triangle(r3, Cell{3, 4}, 4));
    CHECK(in_upper_triangle(r3, Cell{4, 6}, 4));
    for (int r = 1; r <= 6; ++r) {
        CHECK(in_lower_triangle(r3, Cell{1, 1}, r));
        for (const Cell& c : all_cells(r3))
            CHECK(in_upper_triangle(r3, c, 1));
    }

    const Rank r2(2);
    int lower = 0, upper = 0;
    for (const Cell& c : all_cells(r2)) {
        lower += in_lower_triangle(r2, c, 2) ? 1 : 0;
        upper += in_upper_triangle(r2, c, 3) ? 1 : 0;
    }
    CHECK(lower == 3);
    CHECK(upper == 3);

    CHECK_THROWS_AS(in_lower_triangle(r2, Cell{1, 1}, 0), std::out_of_range);
    CHECK_THROWS_AS(in_lower_triangle(r2, Cell{1, 1}, 5), std::out_of_range);
    CHECK_THROWS_AS(in_upper_triangle(r2, Cell{1, 1}, 5), std::out_of_range);
}

TEST_CASE("triangle characterization bridge")
{
    // some r admits (c1 in rows <= r, c2 in columns >= r) iff row(c1) <= col(c2)
    for (int n = 2; n <= 4; ++n) {
        const Rank rank(n);
        const auto cells = all_cells(rank);
        for (const Cell& c1 : cells)
            for (const Cell& c2 : cells) {
                bool witnessed = false;
                for (int r = 1; r <= rank.side(); ++r)
                    witnessed = witnessed ||
                                (in_lower_triangle(rank, c1, r) && in_upper_triangle(rank, c2, r));
                CHECK(witnessed == (c1.row <= c2.col));
            }
    }
}

TEST_CASE("index and cell labels")
{
    const Rank r3(3);
    CHECK(index_label(r3, 3) == "3");
    CHECK(index_label(r3, 4) == "3_bar");
    CHECK(index_label(r3, 6) == "1_bar");
    CHECK(cell_label(r3, Cell{3, 4}) == "33_bar");
    CHECK(cell_label(r3, Cell{1, 1}) == "11");
    const Rank r2(2);
    CHECK(cell_label(r2, Cell{4, 4}) == "1_bar1_bar");
}

TEST_CASE("weyl dimension closed forms")
{
    CHECK(weyl_dim(Rank(2), weight_2theta(Rank(2))) == 35);
    CHECK(weyl_dim(Rank(2), weight_3theta(Rank(2))) == 84);
    CHECK(weyl_dim(Rank(2), weight_3theta_minus_alpha1(Rank(2))) == 105);
    CHECK(weyl_dim(Rank(3), weight_2theta(Rank(3))) == 126);
    CHECK(weyl_dim(Rank(3), weight_3theta(Rank(3))) == 462);
    CHECK(weyl_dim(Rank(3), weight_3theta_minus_alpha1(Rank(3))) == 924);

    for (int n = 2; n <= 10; ++n) {
        const Rank rank(n);
        CHECK(weyl_dim(rank, weight_2theta(rank)) == binomial(2 * n + 3, 4));
        CHECK(weyl_dim(rank, weight_3theta(rank)) == binomial(2 * n + 5, 6));
        Int third = Int(2 * n + 5) * (n - 1) * binomial(2 * n + 3, 4);
        REQUIRE(third % 3 == 0);
        third /= 3;
        CHECK(weyl_dim(rank, weight_3theta_minus_alpha1(rank)) == third);
    }
}

TEST_CASE("q3 dimension identity")
{
    CHECK(q3_dimension(Rank(2)) == 224);
    CHECK(q3_dimension(Rank(3)) == 1512);
    CHECK(q3_expected(Rank(5)) == 10 * binomial(14, 5));
    for (int n = 2; n <= 10; ++n)
        CHECK(q3_dimension(Rank(n)) == q3_expected(Rank(n)));
}

TEST_CASE("weyl dimension edge cases")
{
    const Rank r3(3);
    CHECK(weyl_dim(r3, Weight{0, 0, 0}) == 1);
    CHECK(weyl_dim(r3, Weight{2, 0, 0}) == 21); // the adjoint C_3 module, dim n(2n+1)
    CHECK_THROWS_AS(weyl_dim(r3, Weight{0, 1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(weyl_dim(r3, Weight{1, 0, -1}), std::invalid_argument);
    CHECK_THROWS_AS(weyl_dim(r3, Weight{1, 0}), std::invalid_argument);
}

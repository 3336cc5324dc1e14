#pragma once

#include <string>
#include <vector>

#include "rrcensus/bigint.hpp"

namespace rrcensus {

/*
  Finite-type C_n data.

  The Cartan basis vectors x_{ab} are arranged in a triangular scheme of
  side 2n.  Rows and columns are indexed 1..2n after the reindexation
  k -> k, k-bar -> 2n-k+1, so a cell (column a, row b) is valid iff
  1 <= a <= b <= 2n and the scheme has n(2n+1) = dim C_n cells.  The
  barred alphabet {1,...,n,n-bar,...,1-bar} survives only in rendering.
*/

// Rank n >= 2 of the symplectic algebra C_n.
class Rank {
public:
    explicit Rank(int n);
    int n() const noexcept { return n_; }
    // Side of the triangular scheme (= 2n).
    int side() const noexcept { return 2 * n_; }

    friend bool operator==(Rank, Rank) = default;

private:
    int n_;
};

// Basis vector x_{ab}, column a and row b of the scheme.
struct Cell {
    int col = 1; // a
    int row = 1; // b

    friend bool operator==(Cell, Cell) = default;
};

bool cell_valid(Rank rank, Cell c) noexcept;

// Strict total order on cells: c1 precedes c2 iff c1 sits in a lower row,
// or in the same row further to the right.  (The alphabet order
// 1 > 2 > ... > 1-bar becomes numeric ascending after reindexation.)
bool cell_less(Cell c1, Cell c2) noexcept;

// All cells of the scheme, ascending under cell_less.
std::vector<Cell> all_cells(Rank rank);

// c in the triangle with rows {1,...,r}.  Throws if r is outside 1..2n.
bool in_lower_triangle(Rank rank, Cell c, int r);

// c in the triangle with columns {r,...,2n}.  Throws if r is outside 1..2n.
bool in_upper_triangle(Rank rank, Cell c, int r);

// Rendering of a row/column index: 1..n plain, n+1..2n as "k_bar".
std::string index_label(Rank rank, int k);
// "12", "2_bar1_bar", ...
std::string cell_label(Rank rank, Cell c);

// Dominant integral weight in epsilon coordinates (length n).
using Weight = std::vector<long long>;

Weight weight_2theta(Rank rank);             // (4, 0, ..., 0)
Weight weight_3theta(Rank rank);             // (6, 0, ..., 0)
Weight weight_3theta_minus_alpha1(Rank rank); // (5, 1, 0, ..., 0)

// dim L(lambda) by the Weyl dimension formula over the positive roots
// e_i - e_j, e_i + e_j (i < j) and 2 e_i, evaluated in exact arithmetic.
// Throws if lambda is not dominant integral (l_1 >= ... >= l_n >= 0) or
// has the wrong length.
Int weyl_dim(Rank rank, const Weight& lambda);

// dim L(2 theta) + dim L(3 theta) + dim L(3 theta - alpha_1).
Int q3_dimension(Rank rank);

// 2n * C(2n+4, 5); equals q3_dimension(rank) identically.
Int q3_expected(Rank rank);

} // namespace rrcensus

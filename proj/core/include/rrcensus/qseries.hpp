#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rrcensus/bigint.hpp"
#include "rrcensus/root_system.hpp"

namespace rrcensus {

// Dense power series in q with exact integer coefficients, truncated at
// a fixed inclusive order.  Addition, multiplication and geometric-factor
// expansion are exact and closed under the truncation.
class QSeries {
public:
    explicit QSeries(int trunc);
    static QSeries one(int trunc);

    int trunc() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const Int& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
    Int& coeff(int i) { return coeffs_.at(static_cast<std::size_t>(i)); }
    const std::vector<Int>& coeffs() const noexcept { return coeffs_; }

    QSeries& operator+=(const QSeries& rhs);
    QSeries& operator*=(const QSeries& rhs);
    friend QSeries operator+(QSeries lhs, const QSeries& rhs) { return lhs += rhs; }
    friend QSeries operator*(QSeries lhs, const QSeries& rhs) { return lhs *= rhs; }

    // Multiply by 1/(1 - q^d), d >= 1.
    QSeries& multiply_geometric(int d);

    friend bool operator==(const QSeries&, const QSeries&) = default;

private:
    std::vector<Int> coeffs_;
};

/*
  The three series of the identity, all with constant term 1:

  product_side     prod_{j odd} 1/(1-q^j) *
                   prod_{j >= 1, j != 0,+-1 mod n+2} 1/(1-q^{2j})
  congruence_side  partitions N = sum m f_m with f_m = 0 when
                   m = 0,+-2 mod 2n+4, counted by a bounded-part recursion
  rr_side          colored partitions over the alphabet D_n that avoid
                   both difference conditions, counted by backtracking
*/

// Element m_b of the colored alphabet D_n: a positive integer m in color
// b (the row), with the column a and the level j recovered from
// m = a + b - 1 + 2n(j-1), 1 <= a <= b.
struct ColoredInteger {
    int m = 1;
    int color = 1; // row b
    Cell cell;     // (a, b)
    int j = 1;

    friend bool operator==(const ColoredInteger&, const ColoredInteger&) = default;
};

// Color-b membership: m >= b and m = b, b+1, ..., 2b-1 mod 2n.
bool in_alphabet(Rank rank, int m, int color) noexcept;

// The member with principal degree m and color b, if any.
std::optional<ColoredInteger> make_colored_integer(Rank rank, int m, int color);

// All members with m <= n_max, ordered by (m, color).
std::vector<ColoredInteger> colored_alphabet(Rank rank, int n_max);

// The two difference conditions, evaluated on the recovered (a, b, j)
// triples: a degree pair (-j-1, -j) is forbidden when the row of the
// lower part is <= the column of the higher part, and an equal-degree
// pair when some labelling has b <= b' and a >= a' (equal members are
// always forbidden, so multiplicity one is implied).
bool forbidden_pair(const ColoredInteger& x, const ColoredInteger& y) noexcept;

QSeries product_side(Rank rank, int n_max);
QSeries congruence_side(Rank rank, int n_max);
// threads = 0 picks the hardware width; coefficients are identical at
// any width.
QSeries rr_side(Rank rank, int n_max, unsigned threads = 1);

struct IdentityRow {
    int N = 0;
    Int product;
    Int congruence;
    Int rr;
    bool equal = false;
};

struct IdentityReport {
    int n = 0;
    int n_max = 0;
    std::vector<IdentityRow> rows; // N = 0..n_max
    bool all_equal = false;
};

IdentityReport identity_report(Rank rank, int n_max, unsigned threads = 1);

// JSON rendering of a report (schema documented in the README).
std::string identity_report_to_json(const IdentityReport& report, int indent = 2);

} // namespace rrcensus

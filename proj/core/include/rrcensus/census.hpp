#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rrcensus/bigint.hpp"
#include "rrcensus/partitions.hpp"
#include "rrcensus/root_system.hpp"

namespace rrcensus {

/*
  Embedding census over the length-3 colored partitions of a degree
  m <= -3: the sum of max(#E(pi) - 1, 0), where E(pi) collects the
  embedded leading terms of pi, must equal 2n * C(2n+4, 5) at every
  degree.

  A partition with two embedded leading terms needs two part-pairs of
  degree gap <= 1, which forces the degree multiset into one of four
  shape families; every other length-3 shape has at most one close pair
  and contributes nothing, so the enumeration is restricted to:

    m = -3j-1:  (I)    (-j-1, -j, -j)
    m = -3j-2:  (II)   (-j-1, -j-1, -j)
    m = -3j-3:  (IIIa) (-j-2, -j-1, -j)   and   (IIIb) (-j-1)^3
*/

// max(#E(pi) - 1, 0): the number of distinct embedded leading terms
// beyond the first.
int embedding_excess(Rank rank, const ColoredPartition& pi);

// Family-I partitions x_{k1 l1}(-j-1) x_{k2 l2}(-j) x_{k3 l3}(-j) with at
// least two embedded leading terms, classified by which of the pairs
// (1,2), (1,3), (2,3) are leading terms (the same-degree parts taken in
// canonical order):
//   I1: all three, distinct same-degree parts
//   I2: equal same-degree parts (and the adjacent pair a leading term)
//   I3: (1,2) and (1,3) only
//   I4: (1,2) and (2,3) only
//   I5: (1,3) and (2,3) only
enum class SubcaseI { none, I1, I2, I3, I4, I5 };

const char* to_string(SubcaseI s) noexcept;

// Throws unless pi has shape (-j-1, -j, -j).
SubcaseI classify_case_i(Rank rank, const ColoredPartition& pi);

// The five quadruple sums in closed form, over k1 in 1..2n, l1 in 1..k1,
// k2 in k1..2n, l2 in k1..k2 (k3, l3 likewise for I5):
//   I1: 2(l2-k1) + (k2-l2)(k2-l2+1)
//   I2: 1
//   I3: (l2-k1)(2 k2-k1-l2+1)/2
//   I4: k1-1
//   I5: (2n-k3)(k1-1)
struct CaseISums {
    Int i1, i2, i3, i4, i5;
    Int total() const { return i1 + i2 + i3 + i4 + i5; }
};

CaseISums case_i_closed_form(Rank rank);

struct CensusReport {
    int n = 0;
    int m = 0;
    Int total;
    Int expected;
    bool match = false;
    // ("I") / ("II") / ("IIIa", "IIIb"), in enumeration order.
    std::vector<std::pair<std::string, Int>> per_family;
    // I1..I5, filled for family-I degrees only.
    std::vector<std::pair<std::string, Int>> per_subcase;
};

// Exhaustive census at degree m (m <= -3; throws otherwise).  threads = 0
// picks the hardware width; the result is identical at any width.
CensusReport census_degree(Rank rank, int m, unsigned threads = 1);

// JSON rendering of a report (schema documented in the README).
std::string census_report_to_json(const CensusReport& report, int indent = 2);

} // namespace rrcensus

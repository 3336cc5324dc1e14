#include "rrcensus/census.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include <json.hpp>

#include "rrcensus/leading_terms.hpp"
#include "rrcensus/parallel.hpp"

namespace rrcensus {

int embedding_excess(Rank rank, const ColoredPartition& pi)
{
    const auto embedded = enumerate_leading_subsets(rank, pi);
    return embedded.empty() ? 0 : static_cast<int>(embedded.size()) - 1;
}

const char* to_string(SubcaseI s) noexcept
{
    switch (s) {
    case SubcaseI::I1: return "I1";
    case SubcaseI::I2: return "I2";
    case SubcaseI::I3: return "I3";
    case SubcaseI::I4: return "I4";
    case SubcaseI::I5: return "I5";
    case SubcaseI::none: break;
    }
    return "none";
}

SubcaseI classify_case_i(Rank rank, const ColoredPartition& pi)
{
    const auto& p = pi.parts();
    if (p.size() != 3 || p[0].deg + 1 != p[1].deg || p[1].deg != p[2].deg)
        throw std::invalid_argument("classify_case_i: shape is not (-j-1, -j, -j)");

    if (p[1] == p[2]) {
        // The two adjacent pairs coincide as sub-multisets and the repeated
        // part is its own same-degree leading term, so E(pi) has two
        // elements exactly when the adjacent pair qualifies.
        return is_leading_term(rank, p[0], p[1]) ? SubcaseI::I2 : SubcaseI::none;
    }

    const bool lt12 = is_leading_term(rank, p[0], p[1]);
    const bool lt13 = is_leading_term(rank, p[0], p[2]);
    const bool lt23 = is_leading_term(rank, p[1], p[2]);
    const int count = int(lt12) + int(lt13) + int(lt23);
    if (count < 2)
        return SubcaseI::none;
    if (count == 3)
        return SubcaseI::I1;
    if (!lt23)
        return SubcaseI::I3;
    return lt12 ? SubcaseI::I4 : SubcaseI::I5;
}

CaseISums case_i_closed_form(Rank rank)
{
    const long long side = rank.side();
    CaseISums sums{0, 0, 0, 0, 0};
    for (long long k1 = 1; k1 <= side; ++k1) {
        const long long l1_choices = k1;
        for (long long k2 = k1; k2 <= side; ++k2) {
            for (long long l2 = k1; l2 <= k2; ++l2) {
                sums.i1 += l1_choices * (2 * (l2 - k1) + (k2 - l2) * (k2 - l2 + 1));
                sums.i2 += l1_choices;
                sums.i3 += l1_choices * ((l2 - k1) * (2 * k2 - k1 - l2 + 1) / 2);
                sums.i4 += l1_choices * (k1 - 1);
                sums.i5 += l1_choices * ((side - k2) * (k1 - 1));
            }
        }
    }
    return sums;
}

namespace {

struct Tally {
    Int family_a;
    Int family_b;
    std::array<Int, 5> subcase{};
};

int subcase_index(SubcaseI s)
{
    return static_cast<int>(s) - 1;
}

} // namespace

CensusReport census_degree(Rank rank, int m, unsigned threads)
{
    if (m > -3)
        throw std::invalid_argument("census_degree: degree m must be <= -3, got " +
                                    std::to_string(m));

    const auto cells = all_cells(rank);
    const std::size_t count = cells.size();
    const int residue = (-m) % 3;

    std::vector<Tally> slots(count);

    if (residue == 1) {
        // (I) (-j-1, -j, -j)
        const int j = (-m - 1) / 3;
        run_chunked(count, threads, count, [&](std::size_t slot, std::size_t lo, std::size_t hi) {
            for (std::size_t i1 = lo; i1 < hi; ++i1) {
                const Part p1{cells[i1], -j - 1};
                for (std::size_t i2 = 0; i2 < count; ++i2) {
                    const Part p2{cells[i2], -j};
                    for (std::size_t i3 = i2; i3 < count; ++i3) {
                        const ColoredPartition pi({p1, p2, Part{cells[i3], -j}});
                        const int excess = embedding_excess(rank, pi);
                        if (excess > 0) {
                            slots[slot].family_a += excess;
                            slots[slot].subcase[subcase_index(classify_case_i(rank, pi))] += excess;
                        }
                    }
                }
            }
        });
    } else if (residue == 2) {
        // (II) (-j-1, -j-1, -j)
        const int j = (-m - 2) / 3;
        run_chunked(count, threads, count, [&](std::size_t slot, std::size_t lo, std::size_t hi) {
            for (std::size_t i1 = lo; i1 < hi; ++i1) {
                const Part p1{cells[i1], -j - 1};
                for (std::size_t i2 = i1; i2 < count; ++i2) {
                    const Part p2{cells[i2], -j - 1};
                    for (std::size_t i3 = 0; i3 < count; ++i3) {
                        const ColoredPartition pi({p1, p2, Part{cells[i3], -j}});
                        const int excess = embedding_excess(rank, pi);
                        if (excess > 0)
                            slots[slot].family_a += excess;
                    }
                }
            }
        });
    } else {
        // (IIIa) (-j-2, -j-1, -j) and (IIIb) (-j-1)^3
        const int j = (-m - 3) / 3;
        run_chunked(count, threads, count, [&](std::size_t slot, std::size_t lo, std::size_t hi) {
            for (std::size_t i1 = lo; i1 < hi; ++i1) {
                const Part a1{cells[i1], -j - 2};
                for (std::size_t i2 = 0; i2 < count; ++i2) {
                    const Part a2{cells[i2], -j - 1};
                    for (std::size_t i3 = 0; i3 < count; ++i3) {
                        const ColoredPartition pi({a1, a2, Part{cells[i3], -j}});
                        const int excess = embedding_excess(rank, pi);
                        if (excess > 0)
                            slots[slot].family_a += excess;
                    }
                }
                const Part b1{cells[i1], -j - 1};
                for (std::size_t i2 = i1; i2 < count; ++i2) {
                    const Part b2{cells[i2], -j - 1};
                    for (std::size_t i3 = i2; i3 < count; ++i3) {
                        const ColoredPartition pi({b1, b2, Part{cells[i3], -j - 1}});
                        const int excess = embedding_excess(rank, pi);
                        if (excess > 0)
                            slots[slot].family_b += excess;
                    }
                }
            }
        });
    }

    Tally total;
    for (const Tally& t : slots) {
        total.family_a += t.family_a;
        total.family_b += t.family_b;
        for (int s = 0; s < 5; ++s)
            total.subcase[s] += t.subcase[s];
    }

    CensusReport report;
    report.n = rank.n();
    report.m = m;
    report.expected = q3_expected(rank);
    if (residue == 1) {
        report.per_family.emplace_back("I", total.family_a);
        static constexpr const char* names[] = {"I1", "I2", "I3", "I4", "I5"};
        for (int s = 0; s < 5; ++s)
            report.per_subcase.emplace_back(names[s], total.subcase[s]);
    } else if (residue == 2) {
        report.per_family.emplace_back("II", total.family_a);
    } else {
        report.per_family.emplace_back("IIIa", total.family_a);
        report.per_family.emplace_back("IIIb", total.family_b);
    }
    report.total = total.family_a + total.family_b;
    report.match = report.total == report.expected;
    return report;
}

std::string census_report_to_json(const CensusReport& report, int indent)
{
    nlohmann::json j;
    j["schema_version"] = 1;
    j["n"] = report.n;
    j["m"] = report.m;
    j["total"] = report.total.str();
    j["expected"] = report.expected.str();
    j["match"] = report.match;
    nlohmann::json families = nlohmann::json::object();
    for (const auto& [name, value] : report.per_family)
        families[name] = value.str();
    j["per_family"] = families;
    if (!report.per_subcase.empty()) {
        nlohmann::json subcases = nlohmann::json::object();
        for (const auto& [name, value] : report.per_subcase)
            subcases[name] = value.str();
        j["per_subcase"] = subcases;
    }
    return j.dump(indent);
}

} // namespace rrcensus

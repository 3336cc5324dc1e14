#include "rrcensus/qseries.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "rrcensus/parallel.hpp"

namespace rrcensus {

QSeries::QSeries(int trunc)
{
    if (trunc < 0)
        throw std::invalid_argument("QSeries: truncation order must be >= 0");
    coeffs_.assign(static_cast<std::size_t>(trunc) + 1, Int(0));
}

QSeries QSeries::one(int trunc)
{
    QSeries s(trunc);
    s.coeffs_[0] = 1;
    return s;
}

QSeries& QSeries::operator+=(const QSeries& rhs)
{
    if (trunc() != rhs.trunc())
        throw std::invalid_argument("QSeries: mismatched truncation orders");
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

QSeries& QSeries::operator*=(const QSeries& rhs)
{
    if (trunc() != rhs.trunc())
        throw std::invalid_argument("QSeries: mismatched truncation orders");
    const std::size_t size = coeffs_.size();
    std::vector<Int> out(size, Int(0));
    for (std::size_t i = 0; i < size; ++i) {
        if (coeffs_[i] == 0)
            continue;
        for (std::size_t k = 0; i + k < size; ++k) {
            if (rhs.coeffs_[k] == 0)
                continue;
            out[i + k] += coeffs_[i] * rhs.coeffs_[k];
        }
    }
    coeffs_ = std::move(out);
    return *this;
}

QSeries& QSeries::multiply_geometric(int d)
{
    if (d < 1)
        throw std::invalid_argument("QSeries: geometric factor needs d >= 1");
    for (std::size_t i = static_cast<std::size_t>(d); i < coeffs_.size(); ++i)
        coeffs_[i] += coeffs_[i - static_cast<std::size_t>(d)];
    return *this;
}

namespace {

void check_order(int n_max)
{
    if (n_max < 1)
        throw std::invalid_argument("series order n_max must be >= 1");
}

} // namespace

QSeries product_side(Rank rank, int n_max)
{
    check_order(n_max);
    QSeries s = QSeries::one(n_max);
    for (int d = 1; d <= n_max; d += 2)
        s.multiply_geometric(d);
    const int modulus = rank.n() + 2;
    for (int j = 1; 2 * j <= n_max; ++j) {
        const int r = j % modulus;
        if (r == 0 || r == 1 || r == modulus - 1)
            continue;
        s.multiply_geometric(2 * j);
    }
    return s;
}

namespace {

// Partitions of total into allowed parts <= k: either no part equals k,
// or one is removed and k stays admissible.
class BoundedPartCounter {
public:
    BoundedPartCounter(int n_max, std::vector<int> allowed_parts)
        : parts_(std::move(allowed_parts)),
          memo_(static_cast<std::size_t>(n_max + 1) * parts_.size())
    {
    }

    Int count(int total, std::size_t parts_available)
    {
        if (total == 0)
            return 1;
        if (parts_available == 0)
            return 0;
        auto& slot = memo_[static_cast<std::size_t>(total) * parts_.size() + parts_available - 1];
        if (slot)
            return *slot;
        Int ways = count(total, parts_available - 1);
        const int part = parts_[parts_available - 1];
        if (part <= total)
            ways += count(total - part, parts_available);
        slot = ways;
        return *slot;
    }

private:
    std::vector<int> parts_;
    std::vector<std::optional<Int>> memo_;
};

} // namespace

QSeries congruence_side(Rank rank, int n_max)
{
    check_order(n_max);
    const int modulus = 2 * rank.n() + 4;
    std::vector<int> parts;
    for (int m = 1; m <= n_max; ++m) {
        const int r = m % modulus;
        if (r != 0 && r != 2 && r != modulus - 2)
            parts.push_back(m);
    }
    BoundedPartCounter counter(n_max, parts);
    QSeries s(n_max);
    for (int N = 0; N <= n_max; ++N)
        s.coeff(N) = counter.count(N, parts.size());
    return s;
}

bool in_alphabet(Rank rank, int m, int color) noexcept
{
    if (color < 1 || color > rank.side() || m < color)
        return false;
    return (m - color) % rank.side() < color;
}

std::optional<ColoredInteger> make_colored_integer(Rank rank, int m, int color)
{
    if (!in_alphabet(rank, m, color))
        return std::nullopt;
    const int a = (m - color) % rank.side() + 1;
    const int j = (m - color - (a - 1)) / rank.side() + 1;
    return ColoredInteger{m, color, Cell{a, color}, j};
}

std::vector<ColoredInteger> colored_alphabet(Rank rank, int n_max)
{
    check_order(n_max);
    std::vector<ColoredInteger> members;
    for (int m = 1; m <= n_max; ++m)
        for (int color = 1; color <= rank.side(); ++color)
            if (auto member = make_colored_integer(rank, m, color))
                members.push_back(*member);
    return members;
}

bool forbidden_pair(const ColoredInteger& x, const ColoredInteger& y) noexcept
{
    const int gap = x.j < y.j ? y.j - x.j : x.j - y.j;
    if (gap >= 2)
        return false;
    if (gap == 1) {
        // The part of level j+1 has degree -j-1, one below the other part.
        const ColoredInteger& lower = x.j > y.j ? x : y;
        const ColoredInteger& higher = x.j > y.j ? y : x;
        return lower.cell.row <= higher.cell.col;
    }
    return (x.cell.row <= y.cell.row && x.cell.col >= y.cell.col) ||
           (y.cell.row <= x.cell.row && y.cell.col >= x.cell.col);
}

namespace {

// Count every pairwise-admissible subset of the alphabet once, at its
// total degree.  Letters are scanned in a fixed order, so a subset is
// produced exactly at its increasing index sequence.
struct RRCounter {
    const std::vector<ColoredInteger>& letters;
    int n_max;
    std::vector<Int>& coeff;
    std::vector<const ColoredInteger*> chosen;

    bool compatible(const ColoredInteger& candidate) const
    {
        for (const ColoredInteger* c : chosen)
            if (forbidden_pair(*c, candidate))
                return false;
        return true;
    }

    void extend(std::size_t index, int sum)
    {
        coeff[static_cast<std::size_t>(sum)] += 1;
        for (std::size_t k = index; k < letters.size(); ++k) {
            const ColoredInteger& cand = letters[k];
            if (sum + cand.m > n_max)
                continue;
            if (!compatible(cand))
                continue;
            chosen.push_back(&cand);
            extend(k + 1, sum + cand.m);
            chosen.pop_back();
        }
    }
};

} // namespace

QSeries rr_side(Rank rank, int n_max, unsigned threads)
{
    check_order(n_max);
    auto letters = colored_alphabet(rank, n_max);
    // Branch on the largest member first; ties broken by color.
    std::sort(letters.begin(), letters.end(), [](const ColoredInteger& a, const ColoredInteger& b) {
        if (a.m != b.m)
            return a.m > b.m;
        return a.color < b.color;
    });

    std::vector<std::vector<Int>> slots(letters.size(),
                                        std::vector<Int>(static_cast<std::size_t>(n_max) + 1, Int(0)));
    run_chunked(letters.size(), threads, letters.size(),
                [&](std::size_t slot, std::size_t lo, std::size_t hi) {
                    for (std::size_t first = lo; first < hi; ++first) {
                        RRCounter counter{letters, n_max, slots[slot], {}};
                        counter.chosen.push_back(&letters[first]);
                        counter.extend(first + 1, letters[first].m);
                    }
                });

    QSeries s(n_max);
    s.coeff(0) = 1; // the empty partition
    for (const auto& slot : slots)
        for (int i = 0; i <= n_max; ++i)
            s.coeff(i) += slot[static_cast<std::size_t>(i)];
    return s;
}

IdentityReport identity_report(Rank rank, int n_max, unsigned threads)
{
    check_order(n_max);
    const QSeries product = product_side(rank, n_max);
    const QSeries congruence = congruence_side(rank, n_max);
    const QSeries rr = rr_side(rank, n_max, threads);

    IdentityReport report;
    report.n = rank.n();
    report.n_max = n_max;
    report.all_equal = true;
    report.rows.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int N = 0; N <= n_max; ++N) {
        IdentityRow row;
        row.N = N;
        row.product = product.coeff(N);
        row.congruence = congruence.coeff(N);
        row.rr = rr.coeff(N);
        row.equal = row.product == row.congruence && row.congruence == row.rr;
        report.all_equal = report.all_equal && row.equal;
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::string identity_report_to_json(const IdentityReport& report, int indent)
{
    nlohmann::json j;
    j["schema_version"] = 1;
    j["n"] = report.n;
    j["n_max"] = report.n_max;
    j["all_equal"] = report.all_equal;
    nlohmann::json rows = nlohmann::json::array();
    for (const IdentityRow& row : report.rows) {
        nlohmann::json r;
        r["N"] = row.N;
        r["product"] = row.product.str();
        r["congruence"] = row.congruence.str();
        r["rr"] = row.rr.str();
        r["equal"] = row.equal;
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j.dump(indent);
}

} // namespace rrcensus

#include "tracecodes/predict.hpp"

#include <bit>
#include <stdexcept>

#include "tracecodes/charsums.hpp"

namespace tracecodes {

std::string to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::Odd: return "odd";
        case CaseTag::Two: return "two";
        case CaseTag::TwoModFour: return "two-mod-four";
        case CaseTag::ZeroModFour: return "zero-mod-four";
    }
    throw std::logic_error("unknown case tag");
}

CaseTag classify_case(int m, int h) {
    require_proper_divisor(h, m);
    const int r = m / h;
    if (r % 2 == 1) return CaseTag::Odd;
    if (r == 2) return CaseTag::Two;
    return r % 4 == 2 ? CaseTag::TwoModFour : CaseTag::ZeroModFour;
}

std::int64_t CasePrediction::min_weight() const {
    for (const auto& [w, mult] : dist) {
        if (w > 0 && mult > 0) return w;
    }
    return 0;
}

namespace {

std::int64_t pw(int e) { return std::int64_t{1} << e; }

// Rows of a predicted distribution counted per message element b in F_q^*.
// Weight-0 rows with positive multiplicity mean nonzero b with a zero
// codeword: the b -> c_b map then has a kernel of that size + 1, the true
// dimension drops accordingly and every multiplicity divides down.
CasePrediction collapse(CaseTag tag, int m, std::int64_t n,
                        std::map<std::int64_t, std::int64_t> rows_by_b) {
    for (const auto& [w, mult] : rows_by_b) {
        if (mult < 0)
            throw std::logic_error("negative predicted multiplicity at weight " +
                                   std::to_string(w));
        if (w < 0)
            throw std::logic_error("negative predicted weight");
    }
    std::erase_if(rows_by_b, [](const auto& row) { return row.second == 0; });
    const std::int64_t kernel = 1 + (rows_by_b.count(0) ? rows_by_b.at(0) : 0);
    if ((kernel & (kernel - 1)) != 0)
        throw std::logic_error("predicted zero-weight count + 1 is not a power of two");
    rows_by_b.erase(0);

    CasePrediction pred;
    pred.case_tag = tag;
    pred.n = n;
    pred.k = m - static_cast<int>(std::countr_zero(static_cast<std::uint64_t>(kernel)));
    pred.dist[0] = 1;
    for (const auto& [w, mult] : rows_by_b) {
        if (mult % kernel != 0)
            throw std::logic_error("predicted multiplicity not divisible by kernel size");
        pred.dist[w] = mult / kernel;
    }
    return pred;
}

} // namespace

CasePrediction predicted_code(int m, int h, int a) {
    const CaseTag tag = classify_case(m, h);
    if (a != 0 && a != 1) throw std::invalid_argument("a must be 0 or 1");
    const int r = m / h;
    const std::int64_t eps = (a == 0) ? +1 : -1; // (-1)^a

    switch (tag) {
        case CaseTag::Odd: {
            // n_a = 2^(m-1) + (-1)^a (2/r)^h 2^((m+h-2)/2) + a - 1, and the
            // three-row table at weights 2^(m-2), 2^(m-2) +- offsets.
            const std::int64_t sj =
                (jacobi2(static_cast<std::uint64_t>(r)) == -1 && (h & 1)) ? -1 : +1;
            const std::int64_t n = pw(m - 1) + eps * sj * pw((m + h - 2) / 2) + a - 1;
            std::map<std::int64_t, std::int64_t> rows;
            rows[pw(m - 2)] += pw(m - h - 1) - 1 + sj * pw((m - h - 2) / 2);
            rows[pw(m - 2) + eps * sj * pw((m + h - 2) / 2)] +=
                pw(m - h - 1) - sj * pw((m - h - 2) / 2);
            rows[pw(m - 2) + eps * sj * pw((m + h - 4) / 2)] += pw(m) - pw(m - h);
            return collapse(tag, m, n, std::move(rows));
        }
        case CaseTag::Two: {
            if (a == 0) {
                // [2^(m-1)-1, m-1] constant-weight code, all nonzero words
                // of weight 2^(m-2).
                CasePrediction pred;
                pred.case_tag = tag;
                pred.n = pw(m - 1) - 1;
                pred.k = m - 1;
                pred.dist[0] = 1;
                pred.dist[pw(m - 2)] = pw(m - 1) - 1;
                return pred;
            }
            std::map<std::int64_t, std::int64_t> rows;
            rows[pw(m - 1)] += 1;
            rows[pw(m - 2)] += pw(m) - 2;
            return collapse(tag, m, pw(m - 1), std::move(rows));
        }
        case CaseTag::TwoModFour: {
            const int e = m / 2;
            const std::int64_t n = pw(m - 1) + a - 1;
            std::map<std::int64_t, std::int64_t> rows;
            rows[pw(m - 2)] += pw(m) - pw(m - 2 * h) - 1;
            rows[pw(m - 2) - pw(e + h - 2)] += pw(m - 2 * h - 1) + eps * pw(e - h - 1);
            rows[pw(m - 2) + pw(e + h - 2)] += pw(m - 2 * h - 1) - eps * pw(e - h - 1);
            return collapse(tag, m, n, std::move(rows));
        }
        case CaseTag::ZeroModFour: {
            const int e = m / 2;
            // (-1)^((m+4a)/4) = (-1)^(m/4) * (-1)^a; 4 | m here.
            const std::int64_t sm = (m / 4) % 2 ? -1 : +1;
            const std::int64_t sigma = sm * eps;
            const std::int64_t n = pw(m - 1) - sigma * pw(e + h - 1) + a - 1;
            std::map<std::int64_t, std::int64_t> rows;
            rows[pw(m - 2) - sigma * pw(e + h - 2)] += pw(m) - pw(m - 2 * h);
            rows[pw(m - 2)] += pw(m - 2 * h - 1) - sm * pw(e - h - 1) - 1;
            rows[pw(m - 2) - sigma * pw(e + h - 1)] += pw(m - 2 * h - 1) + sm * pw(e - h - 1);
            return collapse(tag, m, n, std::move(rows));
        }
    }
    throw std::logic_error("unreachable case");
}

MomentReport pless_check(const WeightDistribution& dist) {
    MomentReport rep;
    unsigned __int128 s0 = 0, s1 = 0, s2 = 0;
    for (const auto& [w, mult] : dist.counts) {
        const auto uw = static_cast<unsigned __int128>(w);
        const auto um = static_cast<unsigned __int128>(mult);
        s0 += um;
        s1 += uw * um;
        s2 += uw * uw * um;
    }
    const auto n = static_cast<unsigned __int128>(dist.n);
    const unsigned __int128 two_k = static_cast<unsigned __int128>(1) << dist.k;

    rep.p0_lhs = s0;
    rep.p0_rhs = two_k;
    rep.p0_ok = rep.p0_lhs == rep.p0_rhs;
    rep.p1_lhs = 2 * s1;
    rep.p1_rhs = n * two_k;
    rep.p2_lhs = 4 * s2;
    rep.p2_rhs = n * (n + 1) * two_k;
    if (dist.k == 0) {
        // Single-codeword code: every coordinate is identically zero, the
        // hypotheses of P1/P2 are empty.
        rep.p1_ok = rep.p2_ok = true;
    } else {
        rep.p1_ok = rep.p1_lhs == rep.p1_rhs;
        rep.p2_ok = rep.p2_lhs == rep.p2_rhs;
    }
    return rep;
}

std::string u128_to_string(unsigned __int128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v != 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    return {s.rbegin(), s.rend()};
}

std::optional<std::int64_t> johnson_bound_1(std::int64_t n, std::int64_t d,
                                            std::int64_t w) {
    if (n < 1 || w < 1 || w > n || d < 1)
        throw std::invalid_argument("johnson_bound_1 requires n >= w >= 1 and d >= 1");
    // Work with the doubled form n*d / (2w^2 - 2wn + n*d) to keep delta = d/2
    // exact for odd d as well.
    const std::int64_t denom = 2 * w * w - 2 * w * n + n * d;
    if (denom <= 0) return std::nullopt;
    return (n * d) / denom;
}

} // namespace tracecodes

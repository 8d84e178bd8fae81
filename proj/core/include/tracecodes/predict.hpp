#ifndef TRACECODES_PREDICT_HPP
#define TRACECODES_PREDICT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "tracecodes/codes.hpp"

namespace tracecodes {

/// The four-way case split on m/h that selects the closed-form parameters.
enum class CaseTag { Odd, Two, TwoModFour, ZeroModFour };

std::string to_string(CaseTag tag);

CaseTag classify_case(int m, int h);

/// Closed-form (n, k, weight distribution). dist includes the weight-0 row
/// with multiplicity 1 and matches weight_distribution() exactly, including
/// the small-parameter cases where the generic tables put positive
/// multiplicity on weight 0 and the dimension drops below m.
struct CasePrediction {
    CaseTag case_tag = CaseTag::Odd;
    std::int64_t n = 0;
    int k = 0;
    std::map<std::int64_t, std::int64_t> dist;

    std::int64_t min_weight() const; // least nonzero weight, 0 if none
};

CasePrediction predicted_code(int m, int h, int a);

/// Power-moment identities evaluated on a weight distribution:
///   P0:   sum A_w            = 2^k
///   P1: 2*sum w A_w          = n * 2^k      (no identically-zero coordinate)
///   P2: 4*sum w^2 A_w        = n(n+1) * 2^k (dual distance >= 3)
/// For the k = 0 code P1/P2 hold vacuously (every coordinate is zero).
struct MomentReport {
    bool p0_ok = false, p1_ok = false, p2_ok = false;
    unsigned __int128 p0_lhs = 0, p0_rhs = 0;
    unsigned __int128 p1_lhs = 0, p1_rhs = 0;
    unsigned __int128 p2_lhs = 0, p2_rhs = 0;
};

MomentReport pless_check(const WeightDistribution& dist);

std::string u128_to_string(unsigned __int128 v);

/// Johnson bound I on the size of a binary constant-weight code:
/// floor(n*d / (2w^2 - 2wn + nd)), i.e. floor(n*delta / (w^2 - wn + n*delta))
/// with delta = d/2 handled exactly as a rational so odd d is usable too.
/// Returns nullopt when the denominator is not positive (bound inapplicable).
std::optional<std::int64_t> johnson_bound_1(std::int64_t n, std::int64_t d,
                                            std::int64_t w);

} // namespace tracecodes

#endif

#ifndef TRACECODES_CODES_HPP
#define TRACECODES_CODES_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "tracecodes/field.hpp"

namespace tracecodes {

/// The set D_a = { x in F_q^* : Tr(x^(2^h+1) + x) = a }, in ascending
/// integer-encoding order. That order fixes the coordinate order of the code.
struct DefiningSet {
    int m = 0;
    int h = 0;
    int a = 0;
    std::vector<FieldElem> elements;

    std::int64_t length() const { return static_cast<std::int64_t>(elements.size()); }
};

DefiningSet defining_set(const Field& field, int h, int a);

/// N_a = |{ x in F_q : Tr(x^(2^h+1) + x) = a }|, by direct count.
std::int64_t count_N(const Field& field, int h, int a);

/// N(a,b) = |{ x in F_q : Tr(x^(2^h+1) + x) = a and Tr(bx) = 0 }|, b != 0.
std::int64_t count_Nab(const Field& field, int h, int a, FieldElem b);

struct Codeword {
    std::vector<std::uint8_t> bits;
    std::int64_t weight = 0;
};

/// c_b = (Tr(b*d_1), ..., Tr(b*d_n)).
Codeword codeword(const Field& field, const DefiningSet& set, FieldElem b);

/// Hamming weight of c_b without materializing the bits.
std::int64_t codeword_weight(const Field& field, const DefiningSet& set, FieldElem b);

/// Exact weight distribution over distinct codewords. counts[0] == 1 always;
/// k = log2(#distinct codewords); d = least nonzero weight (0 for the zero code).
struct WeightDistribution {
    std::map<std::int64_t, std::int64_t> counts;
    std::int64_t n = 0;
    int k = 0;
    std::int64_t d = 0;

    bool operator==(const WeightDistribution&) const = default;
};

WeightDistribution weight_distribution(const Field& field, const DefiningSet& set);

/// Dual distance >= 3 holds iff the defining elements are nonzero and pairwise
/// distinct (no zero column and no repeated column in the generator matrix).
bool dual_distance_at_least_3(const DefiningSet& set);

} // namespace tracecodes

#endif

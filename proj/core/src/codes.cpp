#include "tracecodes/codes.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace tracecodes {

namespace {

void require_bit(int a) {
    if (a != 0 && a != 1) throw std::invalid_argument("a must be 0 or 1");
}

} // namespace

DefiningSet defining_set(const Field& field, int h, int a) {
    require_proper_divisor(h, field.m());
    require_bit(a);
    const std::uint64_t exp = (std::uint64_t{1} << h) + 1;
    DefiningSet set{field.m(), h, a, {}};
    for (FieldElem x = 1; x < field.q(); ++x) {
        if (field.trace(field.pow(x, exp) ^ x) == a) set.elements.push_back(x);
    }
    return set;
}

std::int64_t count_N(const Field& field, int h, int a) {
    require_proper_divisor(h, field.m());
    require_bit(a);
    const std::uint64_t exp = (std::uint64_t{1} << h) + 1;
    std::int64_t count = 0;
    for (FieldElem x = 0; x < field.q(); ++x) {
        if (field.trace(field.pow(x, exp) ^ x) == a) ++count;
    }
    return count;
}

std::int64_t count_Nab(const Field& field, int h, int a, FieldElem b) {
    require_proper_divisor(h, field.m());
    require_bit(a);
    if (b == 0) throw std::invalid_argument("count_Nab requires b != 0");
    const std::uint64_t exp = (std::uint64_t{1} << h) + 1;
    std::int64_t count = 0;
    for (FieldElem x = 0; x < field.q(); ++x) {
        if (field.trace(field.pow(x, exp) ^ x) == a && field.trace(field.mul(b, x)) == 0)
            ++count;
    }
    return count;
}

Codeword codeword(const Field& field, const DefiningSet& set, FieldElem b) {
    Codeword cw;
    cw.bits.reserve(set.elements.size());
    for (FieldElem d : set.elements) {
        const std::uint8_t bit = static_cast<std::uint8_t>(field.trace(field.mul(b, d)));
        cw.bits.push_back(bit);
        cw.weight += bit;
    }
    return cw;
}

std::int64_t codeword_weight(const Field& field, const DefiningSet& set, FieldElem b) {
    if (b == 0) return 0;
    std::int64_t w = 0;
    if (field.tabled()) {
        const auto& antilog = field.antilog_table();
        const auto& trace_bits = field.trace_bits();
        const std::uint32_t order = field.order();
        const std::uint32_t lb = field.log(b);
        for (FieldElem d : set.elements) {
            std::uint32_t idx = lb + field.log(d);
            if (idx >= order) idx -= order;
            w += trace_bits[antilog[idx]];
        }
        return w;
    }
    for (FieldElem d : set.elements) w += field.trace(field.mul(b, d));
    return w;
}

WeightDistribution weight_distribution(const Field& field, const DefiningSet& set) {
    // Count weights over all b in F_q, then collapse: b -> c_b is linear, so
    // every distinct codeword is hit exactly |kernel| times and the kernel
    // size is the number of b with c_b = 0.
    std::map<std::int64_t, std::int64_t> by_b;
    for (FieldElem b = 0; b < field.q(); ++b) ++by_b[codeword_weight(field, set, b)];

    const std::int64_t kernel = by_b[0];
    if (kernel <= 0 || (kernel & (kernel - 1)) != 0)
        throw std::logic_error("codeword kernel size must be a power of two");

    WeightDistribution dist;
    dist.n = set.length();
    dist.k = field.m() - static_cast<int>(std::countr_zero(static_cast<std::uint64_t>(kernel)));
    for (const auto& [w, cnt] : by_b) {
        if (cnt % kernel != 0)
            throw std::logic_error("codeword multiplicity not divisible by kernel size");
        dist.counts[w] = cnt / kernel;
    }
    dist.d = 0;
    for (const auto& [w, cnt] : dist.counts) {
        if (w > 0) {
            dist.d = w;
            break;
        }
    }
    return dist;
}

bool dual_distance_at_least_3(const DefiningSet& set) {
    std::vector<FieldElem> elems = set.elements;
    std::sort(elems.begin(), elems.end());
    if (!elems.empty() && elems.front() == 0) return false;
    return std::adjacent_find(elems.begin(), elems.end()) == elems.end();
}

} // namespace tracecodes

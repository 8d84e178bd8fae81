#ifndef TRACECODES_TEST_SUPPORT_HPP
#define TRACECODES_TEST_SUPPORT_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "tracecodes/field.hpp"

namespace tracecodes::testing {

// Independent oracles, kept deliberately naive: they must not share code with
// the implementation paths they check.

// Schoolbook polynomial product over GF(2).
inline std::uint64_t naive_polymul(std::uint64_t x, std::uint64_t y) {
    std::uint64_t acc = 0;
    for (int i = 0; i < 32; ++i)
        if ((y >> i) & 1) acc ^= x << i;
    return acc;
}

inline int naive_degree(std::uint64_t p) {
    int d = -1;
    for (int i = 0; i < 64; ++i)
        if ((p >> i) & 1) d = i;
    return d;
}

// Remainder of polynomial division over GF(2), long division.
inline std::uint64_t naive_polymod(std::uint64_t p, std::uint64_t divisor) {
    const int dd = naive_degree(divisor);
    for (int d = naive_degree(p); d >= dd; d = naive_degree(p))
        p ^= divisor << (d - dd);
    return p;
}

// Irreducibility by trial division against every lower-degree polynomial.
inline bool naive_irreducible(std::uint64_t poly) {
    const int deg = naive_degree(poly);
    if (deg < 1) return false;
    for (std::uint64_t f = 2; naive_degree(f) <= deg / 2; ++f) {
        if (naive_polymod(poly, f) == 0) return false;
    }
    return true;
}

// Field product straight from the definition: multiply then reduce.
inline FieldElem naive_field_mul(const Field& field, FieldElem x, FieldElem y) {
    return static_cast<FieldElem>(naive_polymod(naive_polymul(x, y), field.modulus()));
}

// Trace from its defining sum x + x^2 + ... + x^(2^(m-1)), using naive mul.
inline int naive_trace(const Field& field, FieldElem x) {
    FieldElem acc = 0, t = x;
    for (int i = 0; i < field.m(); ++i) {
        acc ^= t;
        t = naive_field_mul(field, t, t);
    }
    return static_cast<int>(acc & 1);
}

// Multiplicative order by repeated multiplication.
inline std::uint32_t naive_order(const Field& field, FieldElem x) {
    FieldElem acc = x;
    std::uint32_t n = 1;
    while (acc != 1) {
        acc = naive_field_mul(field, acc, x);
        ++n;
    }
    return n;
}

// Shared fields so each test file does not rebuild tables over and over.
inline const Field& field_of(int m) {
    static std::map<int, Field> cache;
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, Field(m)).first;
    return it->second;
}

struct Params {
    int m, h, a;
};

// All valid (m, h, a) with 2 <= m <= m_max.
inline std::vector<Params> all_cases(int m_max) {
    std::vector<Params> out;
    for (int m = 2; m <= m_max; ++m)
        for (int h = 1; h < m; ++h)
            if (m % h == 0)
                for (int a = 0; a <= 1; ++a) out.push_back({m, h, a});
    return out;
}

} // namespace tracecodes::testing

#endif

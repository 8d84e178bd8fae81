#include "tracecodes/field.hpp"

#include <numeric>

namespace tracecodes {

namespace {

// Carry-less product of two GF(2) polynomials (no reduction).
std::uint64_t clmul(std::uint64_t x, std::uint64_t y) {
    std::uint64_t acc = 0;
    while (y != 0) {
        if (y & 1) acc ^= x;
        x <<= 1;
        y >>= 1;
    }
    return acc;
}

// Reduce a polynomial of degree < 2*deg(modulus) modulo the modulus.
std::uint64_t polymod(std::uint64_t poly, std::uint64_t modulus) {
    const int md = poly_degree(modulus);
    for (int d = poly_degree(poly); d >= md; d = poly_degree(poly)) {
        poly ^= modulus << (d - md);
    }
    return poly;
}

std::uint64_t polygcd(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        a = polymod(a, b);
        std::swap(a, b);
    }
    return a;
}

std::uint64_t mulmod(std::uint64_t x, std::uint64_t y, std::uint64_t modulus) {
    return polymod(clmul(x, y), modulus);
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
    std::vector<std::uint32_t> primes;
    for (std::uint32_t p = 2; static_cast<std::uint64_t>(p) * p <= n; ++p) {
        if (n % p == 0) {
            primes.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) primes.push_back(n);
    return primes;
}

} // namespace

int poly_degree(std::uint64_t poly) {
    return poly == 0 ? -1 : 63 - std::countl_zero(poly);
}

bool is_irreducible(std::uint64_t poly) {
    const int m = poly_degree(poly);
    if (m < 1) return false;
    if (m == 1) return true;
    if ((poly & 1) == 0) return false; // divisible by x
    // f of degree m is irreducible iff x^(2^m) = x (mod f) and
    // gcd(x^(2^(m/p)) - x, f) = 1 for every prime p | m.
    std::uint64_t xp = 2; // x
    std::vector<std::uint64_t> frob_powers(m + 1);
    frob_powers[0] = xp;
    for (int i = 1; i <= m; ++i) {
        xp = mulmod(xp, xp, poly);
        frob_powers[i] = xp;
    }
    if (frob_powers[m] != 2) return false;
    for (std::uint32_t p : prime_factors(static_cast<std::uint32_t>(m))) {
        if (polygcd(frob_powers[m / p] ^ 2u, poly) != 1) return false;
    }
    return true;
}

FieldElem default_modulus(int m) {
    if (m < kMinDegree || m > kMaxDegree)
        throw std::invalid_argument("extension degree m must be in [2, 24], got " +
                                    std::to_string(m));
    // Smallest integer encoding = lexicographically smallest coefficient string.
    const std::uint64_t base = std::uint64_t{1} << m;
    for (std::uint64_t c = 1; c < base; c += 2) {
        if (is_irreducible(base | c)) return static_cast<FieldElem>(base | c);
    }
    throw std::logic_error("no irreducible polynomial found"); // unreachable
}

FieldElem next_irreducible(int m, FieldElem after) {
    const std::uint64_t base = std::uint64_t{1} << m;
    if (poly_degree(after) != m)
        throw std::invalid_argument("next_irreducible: 'after' must have degree m");
    for (std::uint64_t c = (after & (base - 1)) | 1; (c += 2) < base;) {
        if (is_irreducible(base | c)) return static_cast<FieldElem>(base | c);
    }
    throw std::invalid_argument("no irreducible polynomial of degree " +
                                std::to_string(m) + " above the given one");
}

Field::Field(int m, std::optional<FieldElem> modulus, TableMode mode) {
    if (m < kMinDegree || m > kMaxDegree)
        throw std::invalid_argument("extension degree m must be in [2, 24], got " +
                                    std::to_string(m));
    m_ = m;
    q_ = std::uint32_t{1} << m;
    if (modulus.has_value()) {
        if (poly_degree(*modulus) != m)
            throw std::invalid_argument("modulus must have degree exactly m");
        if (!is_irreducible(*modulus))
            throw std::invalid_argument("modulus polynomial is reducible");
        modulus_ = *modulus;
    } else {
        modulus_ = default_modulus(m);
    }

    // Trace of each basis monomial x^i; trace of an element is then the
    // parity of (element & trace_mask_).
    for (int i = 0; i < m; ++i) {
        std::uint64_t t = 0, xi = std::uint64_t{1} << i;
        std::uint64_t fr = xi;
        for (int k = 0; k < m; ++k) {
            t ^= fr;
            fr = mulmod(fr, fr, modulus_);
        }
        if (t > 1) throw std::logic_error("trace of basis element not in GF(2)");
        trace_mask_ |= static_cast<FieldElem>(t) << i;
    }

    // Smallest element of full multiplicative order, found without tables.
    const auto primes = prime_factors(order());
    auto pow_rm = [&](std::uint64_t base, std::uint32_t e) {
        std::uint64_t r = 1;
        while (e != 0) {
            if (e & 1) r = mulmod(r, base, modulus_);
            base = mulmod(base, base, modulus_);
            e >>= 1;
        }
        return r;
    };
    for (FieldElem c = 2; c < q_; ++c) {
        bool full_order = true;
        for (std::uint32_t p : primes) {
            if (pow_rm(c, order() / p) == 1) {
                full_order = false;
                break;
            }
        }
        if (full_order) {
            generator_ = c;
            break;
        }
    }

    tabled_ = (mode == TableMode::Tables) ||
              (mode == TableMode::Auto && m <= kMaxTabledDegree);
    if (tabled_) {
        antilog_.assign(order(), 0);
        log_.assign(q_, 0);
        std::uint64_t acc = 1;
        for (std::uint32_t i = 0; i < order(); ++i) {
            antilog_[i] = static_cast<FieldElem>(acc);
            log_[acc] = i;
            acc = mulmod(acc, generator_, modulus_);
        }
        if (acc != 1) throw std::logic_error("generator order mismatch");
        trace_bits_.assign(q_, 0);
        for (std::uint32_t x = 0; x < q_; ++x)
            trace_bits_[x] = static_cast<std::uint8_t>(trace(x));
    }
}

FieldElem Field::mul_notable(FieldElem x, FieldElem y) const {
    return static_cast<FieldElem>(polymod(clmul(x, y), modulus_));
}

FieldElem Field::pow(FieldElem x, std::uint64_t e) const {
    if (x == 0) return e == 0 ? 1 : 0;
    const std::uint64_t r = e % order();
    if (tabled_) {
        return antilog_[(static_cast<std::uint64_t>(log_[x]) * r) % order()];
    }
    FieldElem base = x, acc = 1;
    std::uint64_t k = r;
    while (k != 0) {
        if (k & 1) acc = mul_notable(acc, base);
        base = mul_notable(base, base);
        k >>= 1;
    }
    return acc;
}

FieldElem Field::inv(FieldElem x) const {
    if (x == 0) throw std::domain_error("inverse of 0 is undefined");
    if (tabled_) return antilog_[(order() - log_[x]) % order()];
    return pow(x, order() - 1);
}

FieldElem Field::frob(FieldElem x, unsigned k) const {
    k %= static_cast<unsigned>(m_);
    if (x == 0 || k == 0) return x;
    if (tabled_) {
        return antilog_[(static_cast<std::uint64_t>(log_[x]) << k) % order()];
    }
    FieldElem r = x;
    for (unsigned i = 0; i < k; ++i) r = mul_notable(r, r);
    return r;
}

FieldElem Field::rel_trace(FieldElem x, int b) const {
    if (b <= 0 || m_ % b != 0)
        throw std::invalid_argument("rel_trace requires b | m");
    const int l = m_ / b;
    FieldElem acc = x, t = x;
    for (int i = 1; i < l; ++i) {
        t = frob(t, static_cast<unsigned>(b));
        acc ^= t;
    }
    return acc;
}

std::uint32_t Field::log(FieldElem x) const {
    if (x == 0) throw std::domain_error("log of 0 is undefined");
    if (!tabled_) throw std::logic_error("log tables not built for this field");
    return log_[x];
}

std::string Field::modulus_binary() const {
    std::string s;
    for (int i = m_; i >= 0; --i) s.push_back((modulus_ >> i) & 1 ? '1' : '0');
    return s;
}

Field build_field(int m, std::optional<FieldElem> modulus, TableMode mode) {
    return Field(m, modulus, mode);
}

bool is_proper_divisor(int h, int m) { return h >= 1 && h < m && m % h == 0; }

void require_proper_divisor(int h, int m) {
    if (!is_proper_divisor(h, m))
        throw std::invalid_argument("h must be a proper divisor of m (h=" +
                                    std::to_string(h) + ", m=" + std::to_string(m) + ")");
}

std::uint32_t power_class_gcd(int m, int h) {
    return std::gcd((std::uint32_t{1} << h) + 1, (std::uint32_t{1} << m) - 1);
}

bool is_d_power(const Field& field, FieldElem a, int h) {
    if (a == 0) throw std::domain_error("is_d_power is defined on F_q^* only");
    require_proper_divisor(h, field.m());
    const std::uint32_t d = power_class_gcd(field.m(), h);
    return field.pow(a, field.order() / d) == 1;
}

} // namespace tracecodes

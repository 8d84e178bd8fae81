#ifndef TRACECODES_FIELD_HPP
#define TRACECODES_FIELD_HPP

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tracecodes {

// Elements of GF(2^m) in polynomial basis: bit i of the integer is the
// coefficient of x^i. 0 is the additive identity, 1 the multiplicative one.
using FieldElem = std::uint32_t;

constexpr int kMinDegree = 2;
constexpr int kMaxDegree = 24;
// Log/antilog tables are built up to this degree; above it multiplication
// falls back to carry-less shift-and-xor with modular reduction.
constexpr int kMaxTabledDegree = 20;

enum class TableMode { Auto, Tables, NoTables };

/// Immutable GF(2^m) descriptor. All member functions are pure reads, so a
/// built Field can be shared freely across threads.
class Field {
  public:
    Field(int m, std::optional<FieldElem> modulus = std::nullopt,
          TableMode mode = TableMode::Auto);

    int m() const { return m_; }
    std::uint32_t q() const { return q_; }
    std::uint32_t order() const { return q_ - 1; } // |F_q^*|
    FieldElem modulus() const { return modulus_; }
    FieldElem generator() const { return generator_; }
    bool tabled() const { return tabled_; }

    static FieldElem add(FieldElem x, FieldElem y) { return x ^ y; }

    FieldElem mul(FieldElem x, FieldElem y) const {
        if (tabled_) {
            if (x == 0 || y == 0) return 0;
            std::uint32_t s = log_[x] + log_[y];
            if (s >= order()) s -= order();
            return antilog_[s];
        }
        return mul_notable(x, y);
    }

    FieldElem square(FieldElem x) const { return mul(x, x); }

    FieldElem pow(FieldElem x, std::uint64_t e) const;
    FieldElem inv(FieldElem x) const;

    /// x^(2^k), the k-fold Frobenius.
    FieldElem frob(FieldElem x, unsigned k) const;

    /// Absolute trace Tr(x) = x + x^2 + ... + x^(2^(m-1)), as a bit.
    int trace(FieldElem x) const {
        return std::popcount(x & trace_mask_) & 1;
    }

    /// Relative trace onto the subfield F_{2^b}; requires b | m.
    FieldElem rel_trace(FieldElem x, int b) const;

    /// Discrete log to base generator(); x must be nonzero and tables built.
    std::uint32_t log(FieldElem x) const;
    FieldElem antilog(std::uint32_t k) const { return antilog_[k % order()]; }

    const std::vector<std::uint8_t>& trace_bits() const { return trace_bits_; }
    const std::vector<std::uint32_t>& log_table() const { return log_; }
    const std::vector<FieldElem>& antilog_table() const { return antilog_; }

    /// Binary string of the modulus polynomial, high bit first.
    std::string modulus_binary() const;

  private:
    FieldElem mul_notable(FieldElem x, FieldElem y) const;

    int m_ = 0;
    std::uint32_t q_ = 0;
    FieldElem modulus_ = 0;
    FieldElem generator_ = 0;
    FieldElem trace_mask_ = 0;
    bool tabled_ = false;
    std::vector<std::uint32_t> log_;
    std::vector<FieldElem> antilog_;
    std::vector<std::uint8_t> trace_bits_; // per-element absolute trace, tabled mode
};

Field build_field(int m, std::optional<FieldElem> modulus = std::nullopt,
                  TableMode mode = TableMode::Auto);

/// Degree of a bit-encoded polynomial over GF(2) (-1 for the zero polynomial).
int poly_degree(std::uint64_t poly);

/// Deterministic irreducibility test over GF(2) via x^(2^i) Frobenius powers.
bool is_irreducible(std::uint64_t poly);

/// Lexicographically smallest irreducible polynomial of the given degree.
FieldElem default_modulus(int m);

/// Smallest irreducible polynomial of degree m strictly above `after`
/// (pass the default modulus to get an alternative representation).
FieldElem next_irreducible(int m, FieldElem after);

/// Whether a is a (2^h+1)-th power in F_q^*, i.e. a = g^(t(2^h+1)) for some t.
bool is_d_power(const Field& field, FieldElem a, int h);

/// gcd(2^h+1, 2^m-1): the index relevant to (2^h+1)-th power classes.
std::uint32_t power_class_gcd(int m, int h);

/// True when h divides m and h != m.
bool is_proper_divisor(int h, int m);

/// Throws std::invalid_argument unless h is a proper divisor of m.
void require_proper_divisor(int h, int m);

} // namespace tracecodes

#endif

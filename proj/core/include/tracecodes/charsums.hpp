#ifndef TRACECODES_CHARSUMS_HPP
#define TRACECODES_CHARSUMS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tracecodes/field.hpp"

namespace tracecodes {

/// Additive character chi(c) = (-1)^Tr(c), valued in {+1, -1}.
inline int chi(const Field& field, FieldElem c) {
    return field.trace(c) ? -1 : +1;
}

/// Jacobi symbol (2/n) for odd n >= 1: (-1)^((n^2-1)/8).
int jacobi2(std::uint64_t n);

/// S_h(a,b) = sum over x in F_q of chi(a*x^(2^h+1) + b*x), by direct
/// enumeration of all 2^m terms. Exact signed integer.
std::int64_t weil_sum_brute(const Field& field, int h, FieldElem a, FieldElem b);

/// S_h(a,b) for a fixed a and every b at once, still by summing the 2^m
/// character terms (reorganized as a Walsh-Hadamard transform composed with
/// the trace bilinear form). result[b] == weil_sum_brute(field, h, a, b).
std::vector<std::int32_t> weil_sum_all_b(const Field& field, int h, FieldElem a);

/// Solution set of the linearized equation a^(2^h) * x^(2^2h) + a * x = rhs.
/// The full solution list is particular + span(kernel_basis); solutions()
/// materializes it (2^kernel_dimension elements, ascending).
struct LinearizedSolution {
    bool solvable = false;
    int kernel_dimension = 0;
    FieldElem particular = 0;               // valid when solvable
    std::vector<FieldElem> kernel_basis;    // kernel_dimension elements

    std::size_t solution_count() const {
        return solvable ? std::size_t{1} << kernel_dimension : 0;
    }
    std::vector<FieldElem> solutions() const;
};

/// Solves f(x) = a^(2^h)*x^(2^2h) + a*x = rhs over the polynomial basis by
/// GF(2) Gaussian elimination. Requires a != 0 and m/h even.
LinearizedSolution solve_linearized(const Field& field, FieldElem a, int h,
                                    FieldElem rhs);

/// Whether x^(2^2h) + x = 1 has a root in F_q, decided by brute search.
bool artin_schreier_solvable(const Field& field, int h);

/// The congruence form of the same criterion: m/h = 0 (mod 4).
inline bool artin_schreier_criterion(int m, int h) {
    require_proper_divisor(h, m);
    return (m / h) % 4 == 0;
}

enum class SumKind { Exact, TwoValued, Zero };

/// Closed-form value (or admissible value set) of S_h(a,b), together with
/// the tag of the case analysis that produced it.
struct SumPrediction {
    SumKind kind = SumKind::Exact;
    std::vector<std::int64_t> values; // ascending; singleton unless TwoValued
    std::string lemma;                // "1","2","3","3.1","4","5.1","5.2","9"

    bool admits(std::int64_t v) const {
        for (auto x : values)
            if (x == v) return true;
        return false;
    }
};

/// Evaluates S_h(a,b) for one fixed a and many b without redoing the
/// per-a setup (the (2^h+1)-th root of a in the odd case, the image table
/// of the linearized map in the even case).
class SumPredictor {
  public:
    /// With precompute_images, the even-case linearized map is tabulated once
    /// (O(2^m)) so that each predict(b) is O(1); otherwise each call solves
    /// the m x m system.
    SumPredictor(const Field& field, int h, FieldElem a,
                 bool precompute_images = true);
    std::optional<SumPrediction> predict(FieldElem b) const;

  private:
    const Field& field_;
    int h_;
    int ratio_; // m/h
    FieldElem a_;
    // odd m/h: c with c^(2^h+1) = a, so S_h(a,b) = S_h(1, b/c)
    FieldElem c_inv_ = 0;
    std::int64_t magnitude_ = 0; // 2^((m+h)/2) resp. 2^(e+h)
    int sign_j_ = 0;             // (2/(m/h))^h, odd case
    // even m/h
    bool a_is_power_ = false;
    int sign_e_ = 0; // (-1)^(e/h)
    std::int64_t base_magnitude_ = 0; // 2^e
    std::vector<FieldElem> preimage_; // one preimage of f per image value, or NONE
    static constexpr FieldElem kNoPreimage = ~FieldElem{0};
};

/// One-shot closed-form prediction of S_h(a,b) from the case analysis
/// (orthogonality for a = 0; otherwise the odd/even m/h case split).
/// Returns nullopt only if no case applies.
std::optional<SumPrediction> predict_sum(const Field& field, int h, FieldElem a,
                                         FieldElem b);

} // namespace tracecodes

#endif

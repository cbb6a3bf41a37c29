#pragma once

#include <array>
#include <string>

#include "nefvol/exact_linalg.hpp"
#include "nefvol/quadfield.hpp"

namespace nefvol {

/// Rational quaternion algebra (α, β): i² = α, j² = β, ij = -ji, with α ≥ β and α > 0.
class QuatAlg {
public:
    /// Throws SpecError if α ≤ 0, β = 0 or α < β.
    QuatAlg(long alpha, long beta);

    long alpha() const { return alpha_; }
    long beta() const { return beta_; }
    bool operator==(const QuatAlg&) const = default;

private:
    long alpha_;
    long beta_;
};

/// x + y·i + z·j + w·ij.
class QuatElem {
public:
    QuatElem(QuatAlg alg, Rational x, Rational y, Rational z, Rational w);
    static QuatElem scalar(QuatAlg alg, Rational x) { return {alg, std::move(x), 0, 0, 0}; }
    static QuatElem i(QuatAlg alg) { return {alg, 0, 1, 0, 0}; }
    static QuatElem j(QuatAlg alg) { return {alg, 0, 0, 1, 0}; }
    static QuatElem ij(QuatAlg alg) { return {alg, 0, 0, 0, 1}; }

    const QuatAlg& algebra() const { return alg_; }
    const Rational& x() const { return c_[0]; }
    const Rational& y() const { return c_[1]; }
    const Rational& z() const { return c_[2]; }
    const Rational& w() const { return c_[3]; }
    const std::array<Rational, 4>& coords() const { return c_; }
    bool is_zero() const;

    friend QuatElem operator+(const QuatElem& a, const QuatElem& b);
    friend QuatElem operator-(const QuatElem& a, const QuatElem& b);
    friend QuatElem operator*(const Rational& c, const QuatElem& a);

    bool operator==(const QuatElem&) const = default;
    std::string to_string() const;

private:
    QuatAlg alg_;
    std::array<Rational, 4> c_;
};

QuatElem quat_mul(const QuatElem& p, const QuatElem& q);
inline QuatElem operator*(const QuatElem& p, const QuatElem& q) { return quat_mul(p, q); }

Rational reduced_trace(const QuatElem& q);
Rational reduced_norm(const QuatElem& q);
/// n(x, y) = n(x + y) - n(x) - n(y).
Rational norm_pairing(const QuatElem& x, const QuatElem& y);
/// δ(x, y) = t(x)t(y) - 2n(x, y).
Rational delta_pairing(const QuatElem& x, const QuatElem& y);
/// [[δ(a,a), δ(a,b)], [δ(a,b), δ(b,b)]].
RatMatrix s_delta(const QuatElem& a, const QuatElem& b);

/// Gram matrix of the basis (1, a, b) of the symmetric endomorphisms:
/// [[2, t(a), t(b)], [t(a), 2n(a), n(a,b)], [t(b), n(a,b), 2n(b)]].
/// Throws NonIntegralError if any entry is not an integer.
IntSymMatrix intersection_matrix_q(const QuatElem& a, const QuatElem& b);

/// 2×2 matrix over Q(√α) with entries on the ω-basis.
struct Mat2 {
    std::array<QuadElem, 4> e;  // row-major
    const QuadElem& operator()(int r, int c) const { return e[static_cast<std::size_t>(2 * r + c)]; }
    QuadElem trace() const { return e[0] + e[3]; }
    QuadElem det() const { return e[0] * e[3] - e[1] * e[2]; }
    friend Mat2 operator*(const Mat2& a, const Mat2& b);
    bool operator==(const Mat2&) const = default;
};

/// Representation i ↦ diag(√α, -√α), j ↦ [[0, 1], [β, 0]].
/// Throws UnsupportedAlpha when α is a perfect square.
Mat2 mat2_rep(const QuatElem& q);

}  // namespace nefvol

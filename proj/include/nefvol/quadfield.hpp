#pragma once

#include <string>

#include "nefvol/exact_linalg.hpp"

namespace nefvol {

/// True iff no prime square divides d (trial division). Requires |d| >= 1.
bool is_squarefree(long d);

enum class OmegaKind {
    Sqrt,  ///< d ≡ 2,3 (mod 4): ω = √d, ω² = d
    Half,  ///< d ≡ 1 (mod 4): ω = (1+√d)/2, ω² = ω + (d-1)/4
};

/// Q(√d) together with its ring-of-integers generator ω.
class FieldDesc {
public:
    /// Throws SpecError for d = 0, d = 1 or non-square-free d.
    explicit FieldDesc(long d);

    long d() const { return d_; }
    OmegaKind kind() const { return kind_; }
    bool imaginary() const { return d_ < 0; }
    /// Rational c with ω² = c + ε·ω, ε = 0 (Sqrt) or 1 (Half).
    Rational omega_sq_const() const;

    bool operator==(const FieldDesc&) const = default;

private:
    long d_;
    OmegaKind kind_;
};

/// Exact element u + v·ω of Q(√d).
class QuadElem {
public:
    QuadElem(FieldDesc field, Rational u, Rational v);
    static QuadElem rational(FieldDesc field, Rational u) { return {field, std::move(u), 0}; }
    static QuadElem omega(FieldDesc field) { return {field, 0, 1}; }
    /// a + b·√d rewritten on the ω-basis.
    static QuadElem from_sqrt(FieldDesc field, const Rational& a, const Rational& b);

    const FieldDesc& field() const { return field_; }
    const Rational& u() const { return u_; }
    const Rational& v() const { return v_; }
    bool is_zero() const { return sgn(u_) == 0 && sgn(v_) == 0; }

    friend QuadElem operator+(const QuadElem& a, const QuadElem& b);
    friend QuadElem operator-(const QuadElem& a, const QuadElem& b);
    friend QuadElem operator-(const QuadElem& a);
    friend QuadElem operator*(const QuadElem& a, const QuadElem& b);
    friend QuadElem operator*(const Rational& c, const QuadElem& a);

    bool operator==(const QuadElem&) const = default;

    std::string to_string() const;

private:
    FieldDesc field_;
    Rational u_;
    Rational v_;
};

QuadElem mul(const QuadElem& a, const QuadElem& b);
QuadElem conj(const QuadElem& a);
Rational field_norm(const QuadElem& a);
Rational field_trace(const QuadElem& a);

/// Im(a)² for an imaginary quadratic field; RealFieldError if d > 0.
Rational im_sq(const QuadElem& a);
/// Re(a) for an imaginary quadratic field; RealFieldError if d > 0.
Rational re(const QuadElem& a);

}  // namespace nefvol

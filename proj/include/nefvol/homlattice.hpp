#pragma once

#include <array>

#include "nefvol/exact_linalg.hpp"
#include "nefvol/quadfield.hpp"

namespace nefvol {

/// Lattice Λ = Z + Z·fω in an imaginary quadratic field; End(C/Λ) = Z + Zfω.
struct CMLattice {
    FieldDesc field;
    long f;

    /// Throws SpecError unless d < 0 and f ≥ 1.
    CMLattice(FieldDesc field, long f);
    CMLattice(long d, long f) : CMLattice(FieldDesc(d), f) {}

    /// True iff z ∈ Z + Z·fω.
    bool contains(const QuadElem& z) const;
};

/// Hom(E1, E2) = {λ : λΛ1 ⊆ Λ2} for a CM pair, with its HNF basis on the ω-basis.
struct CMHomLattice {
    CMLattice source;
    CMLattice target;
    std::array<QuadElem, 2> basis;
    /// a(Λ1)/a(Λ2) = f1/f2.
    Rational area_ratio;
};

CMHomLattice hom_lattice_cm(const CMLattice& l1, const CMLattice& l2);

/// λ̂ = (a(Λ1)/a(Λ2))·conj(λ).
QuadElem dual_hom(const QuadElem& sigma, const CMHomLattice& hom);

/// deg λ = λ·λ̂. NonIntegralError if the value is not a nonnegative integer.
Integer deg_hom(const QuadElem& sigma, const CMHomLattice& hom);

/// σ1σ̂2 + σ2σ̂1 for the lattice basis (the polar form of the degree).
Integer degree_cross_term(const CMHomLattice& hom);

/// 4×4 Gram of F1..F4 on E1 × E2:
/// [[0,1,0,0],[1,0,0,0],[0,0,-2σ1σ̂1,-(σ1σ̂2+σ2σ̂1)],[0,0,-(σ1σ̂2+σ2σ̂1),-2σ2σ̂2]].
IntSymMatrix ns_gram_product_cm(const CMLattice& l1, const CMLattice& l2);
IntSymMatrix ns_gram_product_cm(const CMHomLattice& hom);

/// -4·Im(σ1·σ̂2)² as an exact integer.
Integer disc_product_cm(const CMLattice& l1, const CMLattice& l2);
Integer disc_product_cm(const CMHomLattice& hom);

/// Minimum of deg over nonzero elements of Hom(E1, E2).
Integer min_isogeny_degree_cm(const CMLattice& l1, const CMLattice& l2);

/// Λ1 = Z + Z·t1τ, Λ2 = Z + Z·t2τ with τ transcendental (no CM).
struct NoCMPair {
    long t1;
    long t2;
};

struct NoCMHomLattice {
    NoCMPair pair;
    /// Hom(E1, E2) = Z·generator.
    Integer generator;
    Rational area_ratio;
    Integer min_degree;
};

NoCMHomLattice hom_no_cm(const NoCMPair& pair);

}  // namespace nefvol

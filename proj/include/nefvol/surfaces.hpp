#pragma once

#include <string>
#include <variant>

#include "nefvol/exact_linalg.hpp"
#include "nefvol/quaternion.hpp"

namespace nefvol {

// Simple principally polarized abelian surfaces.

/// End(X) = Z.
struct Type0 {};
/// End_Q(X) = Q(√d), d > 0, conductor f.
struct Type1RealMult {
    long d;
    long f;
};
/// CM; (d, f) describe the real-quadratic order End^sym(X).
struct Type2CM {
    long d;
    long f;
};
/// Indefinite quaternion multiplication, End(X) = Z ⊕ Za ⊕ Zb ⊕ Zab.
struct Type3Quaternion {
    QuatAlg algebra;
    QuatElem a;
    QuatElem b;
};

// Products E1 × E2 of elliptic curves.

/// E1, E2 not isogenous.
struct TypeANonIsogenous {};
/// Isogenous without CM; minimal isogeny degree deg σ.
struct TypeBIsogenousNoCM {
    long deg_sigma;
};
/// Isogenous with CM by orders of conductors f1, f2 in Q(√d), d < 0.
struct TypeCIsogenousCM {
    long d;
    long f1;
    long f2;
};

using SurfaceSpec = std::variant<Type0, Type1RealMult, Type2CM, Type3Quaternion, TypeANonIsogenous,
                                 TypeBIsogenousNoCM, TypeCIsogenousCM>;

/// Short human-readable label, e.g. "Type1{d=2,f=3}".
std::string describe(const SurfaceSpec& spec);

/// Throws SpecError if any parameter constraint fails.
void validate_spec(const SurfaceSpec& spec);

struct SurfaceModel {
    SurfaceSpec spec;
    std::size_t rho;
    IntSymMatrix gram;
    IntVector canonical_ample;
    Integer discriminant;
};

/// Lattice basis of NS(X) and its intersection form. Verifies signature
/// (1, ρ-1), positivity of the canonical ample class and Δ = det(gram).
SurfaceModel build_model(const SurfaceSpec& spec);

/// H on the model's lattice basis together with its exact H².
struct AmpleClass {
    IntVector coords;
    Integer h_squared;
};

/// Accepts H iff H² > 0 and H·canonical_ample > 0. Throws AmpleError otherwise.
AmpleClass validate_ample(const IntSymMatrix& gram, const IntVector& canonical_ample, const IntVector& h);
inline AmpleClass validate_ample(const SurfaceModel& model, const IntVector& h) {
    return validate_ample(model.gram, model.canonical_ample, h);
}

/// Δ(X) from the type's closed formula (no Gram matrix involved).
Integer closed_form_discriminant(const SurfaceSpec& spec);

/// Nef cone volume from the type's closed formula, evaluated in doubles.
double closed_form_volume(const SurfaceSpec& spec, const AmpleClass& h);

}  // namespace nefvol

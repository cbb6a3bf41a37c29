#pragma once

#include <cstdint>
#include <span>

#include "nefvol/exact_linalg.hpp"

namespace nefvol {

/// Volume of the standard truncated cone {0 ≤ x1 ≤ 1, x1² ≥ x2² + ... + xρ²},
/// i.e. κ_{ρ-1}/ρ with κ_n the volume of the unit n-ball. Defined for 1 ≤ ρ ≤ 17.
double v_rho(int rho);

/// {x : xᵀSx ≥ 0, 0 ≤ hᵀSx ≤ 1} in lattice coordinates.
class TruncatedCone {
public:
    /// Throws SignatureError / NotPositiveError / DimensionError.
    TruncatedCone(IntSymMatrix gram, IntVector h);

    const IntSymMatrix& gram() const { return gram_; }
    const IntVector& h() const { return h_; }
    std::size_t dim() const { return gram_.dim(); }
    const Integer& h_squared() const { return h_squared_; }

private:
    IntSymMatrix gram_;
    IntVector h_;
    Integer h_squared_;
};

/// Membership in doubles. DimensionError if x has the wrong length.
bool contains(const TruncatedCone& cone, std::span<const double> x);
/// Exact membership for rational points.
bool contains(const TruncatedCone& cone, const std::vector<Rational>& x);

/// V_ρ / (sqrt|Δ| · (h²)^{ρ/2}) with Δ and h² exact.
double positive_cone_volume(const IntSymMatrix& gram, const IntVector& h);

struct McEstimate {
    double estimate = 0.0;
    double std_error = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::uint64_t hits = 0;
    bool operator==(const McEstimate&) const = default;
};

/// Samples per independently seeded chunk; fixes the stream layout.
inline constexpr std::uint64_t kMcChunkSize = 1u << 16;

/// Box-sampling Monte Carlo estimate of the truncated cone's volume. Points
/// are drawn in the Lorentz frame and tested with the original form, so the
/// frame algebra and the volume formula are checked independently. Results
/// depend only on (samples, seed); `threads` = 0 picks the hardware count.
McEstimate mc_volume(const TruncatedCone& cone, std::uint64_t samples, std::uint64_t seed, unsigned threads = 0);

/// True iff |estimate - exact| ≤ 4·stderr (+ 1e-12 relative slack for the
/// zero-variance one-dimensional case).
bool within_four_stderr(const McEstimate& mc, double exact);

enum class SurfaceMode { Abelian, Generic };

/// Vol(Nef) ≤ pos ≤ Vol(Big); the outer two coincide with pos on abelian surfaces.
struct VolumeBounds {
    double lower_is_nef;
    double pos;
    double upper_is_big;
    bool equal;
    bool operator==(const VolumeBounds&) const = default;
};

VolumeBounds volume_bounds(const IntSymMatrix& gram, const IntVector& h, SurfaceMode mode);

}  // namespace nefvol

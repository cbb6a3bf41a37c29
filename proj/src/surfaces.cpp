#include "nefvol/surfaces.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "nefvol/homlattice.hpp"
#include "nefvol/quadfield.hpp"

namespace nefvol {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require(bool ok, const std::string& what) {
    if (!ok) throw SpecError(what);
}

void check_real_quadratic(long d, long f) {
    require(d > 1, "real multiplication needs square-free d > 1, got d = " + std::to_string(d));
    require(is_squarefree(d), "d = " + std::to_string(d) + " is not square-free");
    require(f >= 1, "conductor f must be >= 1, got f = " + std::to_string(f));
}

// Gram of (L0, L_{fω}) from the characteristic polynomial of fω.
IntSymMatrix real_mult_gram(long d, long f) {
    const FieldDesc field(d);
    if (field.kind() == OmegaKind::Sqrt) return IntSymMatrix{{2, 0}, {0, -2 * f * f * d}};
    return IntSymMatrix{{2, f}, {f, f * f * (1 - d) / 2}};
}

Integer half_det_s_delta(const Type3Quaternion& q) {
    const RatMatrix s = s_delta(q.a, q.b);
    const Rational half_det = (s(0, 0) * s(1, 1) - s(0, 1) * s(1, 0)) / 2;
    if (half_det.get_den() != 1) throw NonIntegralError("det(S_delta)/2 = " + half_det.get_str() + " is not an integer");
    return half_det.get_num();
}

double h2_of(const AmpleClass& h) { return h.h_squared.get_d(); }

}  // namespace

std::string describe(const SurfaceSpec& spec) {
    std::ostringstream os;
    std::visit(overloaded{
                   [&](const Type0&) { os << "Type0"; },
                   [&](const Type1RealMult& s) { os << "Type1{d=" << s.d << ",f=" << s.f << "}"; },
                   [&](const Type2CM& s) { os << "Type2{d=" << s.d << ",f=" << s.f << "}"; },
                   [&](const Type3Quaternion& s) {
                       os << "Type3{alpha=" << s.algebra.alpha() << ",beta=" << s.algebra.beta() << ",a=" << s.a.to_string()
                          << ",b=" << s.b.to_string() << "}";
                   },
                   [&](const TypeANonIsogenous&) { os << "TypeA"; },
                   [&](const TypeBIsogenousNoCM& s) { os << "TypeB{deg=" << s.deg_sigma << "}"; },
                   [&](const TypeCIsogenousCM& s) { os << "TypeC{d=" << s.d << ",f1=" << s.f1 << ",f2=" << s.f2 << "}"; },
               },
               spec);
    return os.str();
}

void validate_spec(const SurfaceSpec& spec) {
    std::visit(overloaded{
                   [](const Type0&) {},
                   [](const Type1RealMult& s) { check_real_quadratic(s.d, s.f); },
                   [](const Type2CM& s) { check_real_quadratic(s.d, s.f); },
                   [](const Type3Quaternion& s) {
                       require(s.a.algebra() == s.algebra && s.b.algebra() == s.algebra,
                               "quaternion elements a, b must lie in the given algebra");
                   },
                   [](const TypeANonIsogenous&) {},
                   [](const TypeBIsogenousNoCM& s) {
                       require(s.deg_sigma >= 1, "deg sigma must be >= 1, got " + std::to_string(s.deg_sigma));
                   },
                   [](const TypeCIsogenousCM& s) {
                       require(s.d < 0, "CM product needs d < 0, got d = " + std::to_string(s.d));
                       require(is_squarefree(s.d), "d = " + std::to_string(s.d) + " is not square-free");
                       require(s.f1 >= 1 && s.f2 >= 1, "conductors f1, f2 must be >= 1");
                   },
               },
               spec);
}

SurfaceModel build_model(const SurfaceSpec& spec) {
    validate_spec(spec);
    auto [gram, ample] = std::visit(
        overloaded{
            [](const Type0&) { return std::pair{IntSymMatrix{{2}}, ints({1})}; },
            [](const Type1RealMult& s) { return std::pair{real_mult_gram(s.d, s.f), ints({1, 0})}; },
            [](const Type2CM& s) { return std::pair{real_mult_gram(s.d, s.f), ints({1, 0})}; },
            [](const Type3Quaternion& s) { return std::pair{intersection_matrix_q(s.a, s.b), ints({1, 0, 0})}; },
            [](const TypeANonIsogenous&) { return std::pair{IntSymMatrix{{0, 1}, {1, 0}}, ints({1, 1})}; },
            [](const TypeBIsogenousNoCM& s) {
                return std::pair{IntSymMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, -2 * s.deg_sigma}}, ints({1, 1, 0})};
            },
            [](const TypeCIsogenousCM& s) {
                return std::pair{ns_gram_product_cm(CMLattice(s.d, s.f1), CMLattice(s.d, s.f2)), ints({1, 1, 0, 0})};
            },
        },
        spec);

    if (!is_hyperbolic(gram)) {
        const Inertia in = signature(gram);
        throw SignatureError(describe(spec) + ": Gram matrix has inertia (" + std::to_string(in.positive) + ", " +
                             std::to_string(in.negative) + ", " + std::to_string(in.zero) + "), expected (1, " +
                             std::to_string(gram.dim() - 1) + ", 0)");
    }
    if (sgn(gram.square(ample)) <= 0) throw SignatureError(describe(spec) + ": canonical ample class has H^2 <= 0");
    const std::size_t rho = gram.dim();
    Integer disc = det_exact(gram);
    return SurfaceModel{spec, rho, std::move(gram), std::move(ample), std::move(disc)};
}

AmpleClass validate_ample(const IntSymMatrix& gram, const IntVector& canonical_ample, const IntVector& h) {
    if (h.size() != gram.dim())
        throw AmpleError("ample class has " + std::to_string(h.size()) + " coordinates, Picard number is " +
                         std::to_string(gram.dim()));
    Integer h2 = gram.square(h);
    if (sgn(h2) <= 0) throw AmpleError("H^2 = " + h2.get_str() + " is not positive");
    const Integer cross = gram.bilinear(h, canonical_ample);
    if (sgn(cross) <= 0)
        throw AmpleError("H lies in the negative component of the positive cone (H.H0 = " + cross.get_str() + ")");
    return AmpleClass{h, std::move(h2)};
}

Integer closed_form_discriminant(const SurfaceSpec& spec) {
    validate_spec(spec);
    return std::visit(
        overloaded{
            [](const Type0&) { return Integer(2); },
            [](const Type1RealMult& s) {
                const Integer f2d = Integer(s.f) * s.f * s.d;
                return FieldDesc(s.d).kind() == OmegaKind::Sqrt ? Integer(-4 * f2d) : Integer(-f2d);
            },
            [](const Type2CM& s) {
                const Integer f2d = Integer(s.f) * s.f * s.d;
                return FieldDesc(s.d).kind() == OmegaKind::Sqrt ? Integer(-4 * f2d) : Integer(-f2d);
            },
            [](const Type3Quaternion& s) { return half_det_s_delta(s); },
            [](const TypeANonIsogenous&) { return Integer(-1); },
            [](const TypeBIsogenousNoCM& s) { return Integer(2 * s.deg_sigma); },
            [](const TypeCIsogenousCM& s) {
                const FieldDesc field(s.d);
                const Integer l = std::lcm(s.f1, s.f2);
                // -4·L²·Im(ω)² with Im(ω)² = |d| or |d|/4.
                const Integer abs_d = -s.d;
                return field.kind() == OmegaKind::Sqrt ? Integer(-4 * l * l * abs_d) : Integer(-l * l * abs_d);
            },
        },
        spec);
}

double closed_form_volume(const SurfaceSpec& spec, const AmpleClass& h) {
    validate_spec(spec);
    using std::numbers::pi;
    const double h2 = h2_of(h);
    return std::visit(
        overloaded{
            [&](const Type0&) { return 1.0 / std::sqrt(2.0 * h2); },
            [&](const Type1RealMult& s) {
                const double base = static_cast<double>(s.f) * std::sqrt(static_cast<double>(s.d)) * h2;
                return FieldDesc(s.d).kind() == OmegaKind::Sqrt ? 1.0 / (2.0 * base) : 1.0 / base;
            },
            [&](const Type2CM& s) {
                const double base = static_cast<double>(s.f) * std::sqrt(static_cast<double>(s.d)) * h2;
                return FieldDesc(s.d).kind() == OmegaKind::Sqrt ? 1.0 / (2.0 * base) : 1.0 / base;
            },
            [&](const Type3Quaternion& s) {
                const RatMatrix sd = s_delta(s.a, s.b);
                const Rational det = sd(0, 0) * sd(1, 1) - sd(0, 1) * sd(1, 0);
                return pi * std::sqrt(2.0) / (3.0 * std::sqrt(std::abs(det.get_d())) * std::pow(h2, 1.5));
            },
            [&](const TypeANonIsogenous&) { return 1.0 / h2; },
            [&](const TypeBIsogenousNoCM& s) {
                return pi / (3.0 * std::sqrt(2.0 * static_cast<double>(s.deg_sigma)) * std::pow(h2, 1.5));
            },
            [&](const TypeCIsogenousCM& s) {
                const double l = static_cast<double>(std::lcm(s.f1, s.f2));
                const double base = l * std::sqrt(static_cast<double>(-s.d)) * h2 * h2;
                return FieldDesc(s.d).kind() == OmegaKind::Sqrt ? pi / (6.0 * base) : pi / (3.0 * base);
            },
        },
        spec);
}

}  // namespace nefvol

#include "nefvol/quadfield.hpp"

#include <cstdlib>

namespace nefvol {

bool is_squarefree(long d) {
    if (d == 0) throw DomainError("is_squarefree requires |d| >= 1");
    unsigned long n = static_cast<unsigned long>(d < 0 ? -d : d);
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return false;
        while (n % p == 0) n /= p;
    }
    return true;
}

namespace {

OmegaKind kind_for(long d) {
    // C++ % keeps the sign of d; normalize into [0, 4).
    const long r = ((d % 4) + 4) % 4;
    return r == 1 ? OmegaKind::Half : OmegaKind::Sqrt;
}

void require_same_field(const QuadElem& a, const QuadElem& b) {
    if (!(a.field() == b.field()))
        throw FieldMismatch("Q(sqrt " + std::to_string(a.field().d()) + ") vs Q(sqrt " +
                            std::to_string(b.field().d()) + ")");
}

void require_imaginary(const FieldDesc& f) {
    if (!f.imaginary()) throw RealFieldError("field Q(sqrt " + std::to_string(f.d()) + ") is real");
}

}  // namespace

FieldDesc::FieldDesc(long d) : d_(d), kind_(kind_for(d)) {
    if (d == 0 || d == 1) throw SpecError("d must not be 0 or 1");
    if (!is_squarefree(d)) throw SpecError("d = " + std::to_string(d) + " is not square-free");
}

Rational FieldDesc::omega_sq_const() const {
    if (kind_ == OmegaKind::Sqrt) return Rational(d_);
    return Rational(d_ - 1) / 4;
}

QuadElem::QuadElem(FieldDesc field, Rational u, Rational v)
    : field_(field), u_(std::move(u)), v_(std::move(v)) {
    u_.canonicalize();
    v_.canonicalize();
}

QuadElem QuadElem::from_sqrt(FieldDesc field, const Rational& a, const Rational& b) {
    if (field.kind() == OmegaKind::Sqrt) return {field, a, b};
    // √d = 2ω - 1
    return {field, a - b, 2 * b};
}

QuadElem operator+(const QuadElem& a, const QuadElem& b) {
    require_same_field(a, b);
    return {a.field_, a.u_ + b.u_, a.v_ + b.v_};
}

QuadElem operator-(const QuadElem& a, const QuadElem& b) {
    require_same_field(a, b);
    return {a.field_, a.u_ - b.u_, a.v_ - b.v_};
}

QuadElem operator-(const QuadElem& a) { return {a.field_, -a.u_, -a.v_}; }

QuadElem operator*(const QuadElem& a, const QuadElem& b) {
    require_same_field(a, b);
    // (u1 + v1ω)(u2 + v2ω) = u1u2 + (u1v2 + v1u2)ω + v1v2·ω²
    const Rational c = a.field_.omega_sq_const();
    const Rational vv = a.v_ * b.v_;
    Rational u = a.u_ * b.u_ + vv * c;
    Rational v = a.u_ * b.v_ + a.v_ * b.u_;
    if (a.field_.kind() == OmegaKind::Half) v += vv;
    return {a.field_, std::move(u), std::move(v)};
}

QuadElem operator*(const Rational& c, const QuadElem& a) { return {a.field_, c * a.u_, c * a.v_}; }

std::string QuadElem::to_string() const {
    return u_.get_str() + " + " + v_.get_str() + "w";
}

QuadElem mul(const QuadElem& a, const QuadElem& b) { return a * b; }

QuadElem conj(const QuadElem& a) {
    if (a.field().kind() == OmegaKind::Sqrt) return {a.field(), a.u(), -a.v()};
    // conj(ω) = 1 - ω
    return {a.field(), a.u() + a.v(), -a.v()};
}

Rational field_norm(const QuadElem& a) {
    const Rational c = a.field().omega_sq_const();
    if (a.field().kind() == OmegaKind::Sqrt) return a.u() * a.u() - c * a.v() * a.v();
    return a.u() * a.u() + a.u() * a.v() - c * a.v() * a.v();
}

Rational field_trace(const QuadElem& a) {
    if (a.field().kind() == OmegaKind::Sqrt) return 2 * a.u();
    return 2 * a.u() + a.v();
}

Rational im_sq(const QuadElem& a) {
    require_imaginary(a.field());
    Rational omega_im_sq(-a.field().d());
    if (a.field().kind() == OmegaKind::Half) omega_im_sq /= 4;
    return a.v() * a.v() * omega_im_sq;
}

Rational re(const QuadElem& a) {
    require_imaginary(a.field());
    if (a.field().kind() == OmegaKind::Sqrt) return a.u();
    return a.u() + a.v() / 2;
}

}  // namespace nefvol

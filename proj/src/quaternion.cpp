#include "nefvol/quaternion.hpp"

namespace nefvol {

namespace {

void require_same_algebra(const QuatElem& a, const QuatElem& b) {
    if (!(a.algebra() == b.algebra())) throw AlgebraMismatch("quaternion elements from different algebras");
}

Integer require_integer(const Rational& r, const char* what) {
    if (r.get_den() != 1) throw NonIntegralError(std::string(what) + " = " + r.get_str() + " is not an integer");
    return r.get_num();
}

}  // namespace

QuatAlg::QuatAlg(long alpha, long beta) : alpha_(alpha), beta_(beta) {
    if (alpha <= 0) throw SpecError("quaternion algebra needs alpha > 0");
    if (beta == 0) throw SpecError("quaternion algebra needs beta != 0");
    if (alpha < beta) throw SpecError("quaternion algebra needs alpha >= beta");
}

QuatElem::QuatElem(QuatAlg alg, Rational x, Rational y, Rational z, Rational w)
    : alg_(alg), c_{std::move(x), std::move(y), std::move(z), std::move(w)} {
    for (auto& c : c_) c.canonicalize();
}

bool QuatElem::is_zero() const {
    for (const auto& c : c_)
        if (sgn(c) != 0) return false;
    return true;
}

QuatElem operator+(const QuatElem& a, const QuatElem& b) {
    require_same_algebra(a, b);
    return {a.alg_, a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2], a.c_[3] + b.c_[3]};
}

QuatElem operator-(const QuatElem& a, const QuatElem& b) {
    require_same_algebra(a, b);
    return {a.alg_, a.c_[0] - b.c_[0], a.c_[1] - b.c_[1], a.c_[2] - b.c_[2], a.c_[3] - b.c_[3]};
}

QuatElem operator*(const Rational& c, const QuatElem& a) {
    return {a.alg_, c * a.c_[0], c * a.c_[1], c * a.c_[2], c * a.c_[3]};
}

std::string QuatElem::to_string() const {
    return c_[0].get_str() + " + " + c_[1].get_str() + "i + " + c_[2].get_str() + "j + " + c_[3].get_str() + "ij";
}

QuatElem quat_mul(const QuatElem& p, const QuatElem& q) {
    require_same_algebra(p, q);
    const Rational a(p.algebra().alpha());
    const Rational b(p.algebra().beta());
    const auto& [x1, y1, z1, w1] = p.coords();
    const auto& [x2, y2, z2, w2] = q.coords();
    // Products of basis units: ii = α, jj = β, kk = -αβ, ij = k, ji = -k,
    // ik = αj, ki = -αj, jk = -βi, kj = βi  (k = ij).
    Rational x = x1 * x2 + a * y1 * y2 + b * z1 * z2 - a * b * w1 * w2;
    Rational y = x1 * y2 + y1 * x2 - b * z1 * w2 + b * w1 * z2;
    Rational z = x1 * z2 + z1 * x2 + a * y1 * w2 - a * w1 * y2;
    Rational w = x1 * w2 + w1 * x2 + y1 * z2 - z1 * y2;
    return {p.algebra(), std::move(x), std::move(y), std::move(z), std::move(w)};
}

Rational reduced_trace(const QuatElem& q) { return 2 * q.x(); }

Rational reduced_norm(const QuatElem& q) {
    const Rational a(q.algebra().alpha());
    const Rational b(q.algebra().beta());
    return q.x() * q.x() - a * q.y() * q.y() - b * q.z() * q.z() + a * b * q.w() * q.w();
}

Rational norm_pairing(const QuatElem& x, const QuatElem& y) {
    require_same_algebra(x, y);
    return reduced_norm(x + y) - reduced_norm(x) - reduced_norm(y);
}

Rational delta_pairing(const QuatElem& x, const QuatElem& y) {
    require_same_algebra(x, y);
    return reduced_trace(x) * reduced_trace(y) - 2 * norm_pairing(x, y);
}

RatMatrix s_delta(const QuatElem& a, const QuatElem& b) {
    RatMatrix m(2, 2);
    m(0, 0) = delta_pairing(a, a);
    m(0, 1) = m(1, 0) = delta_pairing(a, b);
    m(1, 1) = delta_pairing(b, b);
    return m;
}

IntSymMatrix intersection_matrix_q(const QuatElem& a, const QuatElem& b) {
    require_same_algebra(a, b);
    const Integer ta = require_integer(reduced_trace(a), "t(a)");
    const Integer tb = require_integer(reduced_trace(b), "t(b)");
    const Integer na = require_integer(reduced_norm(a), "n(a)");
    const Integer nb = require_integer(reduced_norm(b), "n(b)");
    const Integer nab = require_integer(norm_pairing(a, b), "n(a,b)");
    IntMatrix m(3, 3);
    m(0, 0) = 2;
    m(0, 1) = m(1, 0) = ta;
    m(0, 2) = m(2, 0) = tb;
    m(1, 1) = 2 * na;
    m(1, 2) = m(2, 1) = nab;
    m(2, 2) = 2 * nb;
    return IntSymMatrix(std::move(m));
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
    return Mat2{{a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0), a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1),
                 a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0), a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1)}};
}

Mat2 mat2_rep(const QuatElem& q) {
    // α = s²·d' with d' square-free.
    long alpha = q.algebra().alpha();
    long s = 1;
    for (long p = 2; p * p <= alpha; ++p)
        while (alpha % (p * p) == 0) {
            alpha /= p * p;
            s *= p;
        }
    if (alpha == 1) throw UnsupportedAlpha("alpha = " + std::to_string(q.algebra().alpha()) + " is a perfect square");
    const FieldDesc field(alpha);
    auto num = [&](const Rational& r) { return QuadElem::rational(field, r); };
    const QuadElem zero = num(0);
    const QuadElem root = QuadElem::from_sqrt(field, 0, s);  // √α

    const Mat2 one{{num(1), zero, zero, num(1)}};
    const Mat2 i_rep{{root, zero, zero, -root}};
    const Mat2 j_rep{{zero, num(1), num(q.algebra().beta()), zero}};
    const Mat2 k_rep = i_rep * j_rep;

    Mat2 out{{zero, zero, zero, zero}};
    for (std::size_t n = 0; n < 4; ++n)
        out.e[n] = q.x() * one.e[n] + q.y() * i_rep.e[n] + q.z() * j_rep.e[n] + q.w() * k_rep.e[n];
    return out;
}

}  // namespace nefvol

#include "nefvol/homlattice.hpp"

#include <string>

namespace nefvol {

namespace {

Integer as_integer(const Rational& r, const char* what) {
    if (r.get_den() != 1) throw NonIntegralError(std::string(what) + " = " + r.get_str() + " is not an integer");
    return r.get_num();
}

Integer lcm_den(const std::vector<Rational>& values) {
    Integer l = 1;
    for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    return l;
}

}  // namespace

CMLattice::CMLattice(FieldDesc field_, long f_) : field(field_), f(f_) {
    if (!field.imaginary()) throw SpecError("CM lattice needs d < 0, got d = " + std::to_string(field.d()));
    if (f < 1) throw SpecError("conductor must be >= 1, got f = " + std::to_string(f));
}

bool CMLattice::contains(const QuadElem& z) const {
    if (!(z.field() == field)) throw FieldMismatch("element not in the lattice's field");
    if (z.u().get_den() != 1 || z.v().get_den() != 1) return false;
    return mpz_divisible_ui_p(z.v().get_num_mpz_t(), static_cast<unsigned long>(f)) != 0;
}

CMHomLattice hom_lattice_cm(const CMLattice& l1, const CMLattice& l2) {
    if (!(l1.field == l2.field))
        throw FieldMismatch("CM lattices over Q(sqrt " + std::to_string(l1.field.d()) + ") and Q(sqrt " +
                            std::to_string(l2.field.d()) + ")");
    const FieldDesc& k = l1.field;
    // λ·1 ∈ Λ2 forces λ = p·1 + q·(f2ω) with p, q ∈ Z. The remaining
    // condition is λ·(f1ω) ∈ Λ2: its coordinates on (1, f2ω) must be integral.
    const std::array<QuadElem, 2> ambient{QuadElem::rational(k, 1), Rational(l2.f) * QuadElem::omega(k)};
    const QuadElem g = Rational(l1.f) * QuadElem::omega(k);

    std::vector<Rational> coeff;  // coeff[2*unknown + component]
    for (const auto& e : ambient) {
        const QuadElem prod = e * g;
        coeff.push_back(prod.u());
        coeff.push_back(prod.v() / l2.f);
    }
    const Integer den = lcm_den(coeff);

    // Rows: p, q, then one slack row per component scaled by the modulus.
    IntMatrix system(4, 2);
    for (std::size_t unknown = 0; unknown < 2; ++unknown)
        for (std::size_t comp = 0; comp < 2; ++comp) {
            const Rational scaled = coeff[2 * unknown + comp] * den;
            system(unknown, comp) = scaled.get_num();
        }
    system(2, 0) = den;
    system(3, 1) = den;

    std::vector<IntVector> uv;
    for (const auto& sol : left_kernel(system)) uv.push_back({sol[0], sol[1] * l2.f});
    const auto basis = hnf_basis(uv);
    if (basis.size() != 2) throw NonIntegralError("Hom lattice is not of rank 2");

    auto to_elem = [&](const IntVector& c) { return QuadElem(k, Rational(c[0]), Rational(c[1])); };
    Rational ratio(l1.f);
    ratio /= l2.f;
    ratio.canonicalize();
    return CMHomLattice{l1, l2, {to_elem(basis[0]), to_elem(basis[1])}, ratio};
}

QuadElem dual_hom(const QuadElem& sigma, const CMHomLattice& hom) { return hom.area_ratio * conj(sigma); }

Integer deg_hom(const QuadElem& sigma, const CMHomLattice& hom) {
    const Integer deg = as_integer(hom.area_ratio * field_norm(sigma), "deg");
    if (sgn(deg) < 0 || (sgn(deg) == 0 && !sigma.is_zero()))
        throw NonIntegralError("degree of a nonzero homomorphism must be positive");
    return deg;
}

Integer degree_cross_term(const CMHomLattice& hom) {
    const auto& [s1, s2] = hom.basis;
    return as_integer(field_trace(s1 * dual_hom(s2, hom)), "sigma1*dual(sigma2) + sigma2*dual(sigma1)");
}

IntSymMatrix ns_gram_product_cm(const CMHomLattice& hom) {
    IntMatrix m(4, 4);
    m(0, 1) = m(1, 0) = 1;
    m(2, 2) = -2 * deg_hom(hom.basis[0], hom);
    m(3, 3) = -2 * deg_hom(hom.basis[1], hom);
    m(2, 3) = m(3, 2) = -degree_cross_term(hom);
    IntSymMatrix gram(std::move(m));
    if (!is_hyperbolic(gram)) throw SignatureError("product Gram matrix does not have signature (1, 3)");
    return gram;
}

IntSymMatrix ns_gram_product_cm(const CMLattice& l1, const CMLattice& l2) {
    return ns_gram_product_cm(hom_lattice_cm(l1, l2));
}

Integer disc_product_cm(const CMHomLattice& hom) {
    const QuadElem cross = hom.basis[0] * dual_hom(hom.basis[1], hom);
    return as_integer(-4 * im_sq(cross), "-4 Im(sigma1*dual(sigma2))^2");
}

Integer disc_product_cm(const CMLattice& l1, const CMLattice& l2) {
    return disc_product_cm(hom_lattice_cm(l1, l2));
}

Integer min_isogeny_degree_cm(const CMLattice& l1, const CMLattice& l2) {
    const CMHomLattice hom = hom_lattice_cm(l1, l2);
    // deg(xσ1 + yσ2) = a x² + b xy + c y², positive definite.
    Integer a = deg_hom(hom.basis[0], hom);
    Integer b = degree_cross_term(hom);
    Integer c = deg_hom(hom.basis[1], hom);

    Integer k;
    for (;;) {
        if (mpz_cmpabs(b.get_mpz_t(), a.get_mpz_t()) > 0) {
            // x ↦ x - k y with b - 2ka ∈ (-a, a].
            Integer num = a - b;
            Integer two_a = 2 * a;
            mpz_fdiv_q(k.get_mpz_t(), num.get_mpz_t(), two_a.get_mpz_t());
            k = -k;
            // now b - 2ka lies in (-a, a]
            const Integer b_new = b - 2 * k * a;
            c = c - k * b + k * k * a;
            b = b_new;
        }
        if (a > c) {
            std::swap(a, c);
            b = -b;
            continue;
        }
        if (mpz_cmpabs(b.get_mpz_t(), a.get_mpz_t()) <= 0) break;
    }

    // The minimum of a reduced form is a; confirm on a small box.
    Integer best = a;
    for (long x = -2; x <= 2; ++x)
        for (long y = -2; y <= 2; ++y) {
            if (x == 0 && y == 0) continue;
            const Integer v = a * x * x + b * x * y + c * y * y;
            if (v < best) best = v;
        }
    return best;
}

NoCMHomLattice hom_no_cm(const NoCMPair& pair) {
    if (pair.t1 < 1 || pair.t2 < 1) throw SpecError("no-CM lattice parameters must be >= 1");
    // λ ∈ Z from λ·1 ∈ Λ2; λ·t1τ ∈ Λ2 needs t1·λ ∈ t2·Z.
    IntMatrix system(2, 1);
    system(0, 0) = pair.t1;
    system(1, 0) = pair.t2;
    const auto kernel = left_kernel(system);
    if (kernel.size() != 1) throw NonIntegralError("no-CM Hom lattice is not of rank 1");
    const Integer gen = hnf_basis(std::vector<IntVector>{IntVector{kernel[0][0]}}).at(0).at(0);

    Rational ratio(pair.t1);
    ratio /= pair.t2;
    ratio.canonicalize();
    const Integer deg = as_integer(ratio * Rational(gen * gen), "deg");
    return NoCMHomLattice{pair, gen, ratio, deg};
}

}  // namespace nefvol

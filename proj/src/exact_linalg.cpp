#include "nefvol/exact_linalg.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace nefvol {

IntVector ints(std::initializer_list<long> values) {
    IntVector out;
    out.reserve(values.size());
    for (long v : values) out.emplace_back(v);
    return out;
}

template <typename T>
DenseMatrix<T>::DenseMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionError("ragged matrix literal");
        for (long v : r) data_.emplace_back(v);
    }
}

template <typename T>
void DenseMatrix<T>::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

template <typename T>
DenseMatrix<T> DenseMatrix<T>::transposed() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

template class DenseMatrix<Integer>;
template class DenseMatrix<Rational>;

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (sgn(a(i, k)) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

IntVector operator*(const IntMatrix& a, const IntVector& x) {
    if (a.cols() != x.size()) throw DimensionError("matrix-vector shape mismatch");
    IntVector y(a.rows(), Integer(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
    return y;
}

IntSymMatrix::IntSymMatrix(IntMatrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw DimensionError("Gram matrix must be square");
    for (std::size_t i = 0; i < m_.rows(); ++i)
        for (std::size_t j = i + 1; j < m_.cols(); ++j)
            if (m_(i, j) != m_(j, i))
                throw DimensionError("Gram matrix is not symmetric at (" + std::to_string(i) +
                                     ", " + std::to_string(j) + ")");
}

Integer IntSymMatrix::bilinear(const IntVector& x, const IntVector& y) const {
    if (x.size() != dim() || y.size() != dim())
        throw DimensionError("vector length does not match Gram dimension");
    Integer acc = 0;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (sgn(x[i]) == 0) continue;
        Integer row = 0;
        for (std::size_t j = 0; j < dim(); ++j) row += m_(i, j) * y[j];
        acc += x[i] * row;
    }
    return acc;
}

IntSymMatrix IntSymMatrix::congruent(const IntMatrix& u) const {
    return IntSymMatrix(u.transposed() * m_ * u);
}

RatMatrix IntSymMatrix::to_rational() const {
    RatMatrix r(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j) r(i, j) = Rational(m_(i, j));
    return r;
}

Integer det_exact(const IntMatrix& input) {
    if (input.rows() != input.cols()) throw DimensionError("determinant of non-square matrix");
    const std::size_t n = input.rows();
    if (n == 0) return 1;
    IntMatrix a = input;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(a(k, k)) == 0) {
            std::size_t p = k + 1;
            while (p < n && sgn(a(p, k)) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a(k, k) * a(i, j) - a(i, k) * a(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = std::move(t);
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

Inertia signature(const RatMatrix& input) {
    if (input.rows() != input.cols()) throw DimensionError("signature of non-square matrix");
    RatMatrix a = input;
    const std::size_t n = a.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (a(i, j) != a(j, i)) throw DimensionError("signature of non-symmetric matrix");

    // Symmetric swap of index p and q (rows and columns).
    auto sym_swap = [&](std::size_t p, std::size_t q) {
        if (p == q) return;
        a.swap_rows(p, q);
        for (std::size_t r = 0; r < n; ++r) std::swap(a(r, p), a(r, q));
    };
    // row_p += c·row_q, col_p += c·col_q
    auto sym_add = [&](std::size_t p, std::size_t q, const Rational& c) {
        for (std::size_t r = 0; r < n; ++r) a(p, r) += c * a(q, r);
        for (std::size_t r = 0; r < n; ++r) a(r, p) += c * a(r, q);
    };

    Inertia out;
    std::size_t i = 0;
    while (i < n) {
        std::size_t piv = i;
        while (piv < n && sgn(a(piv, piv)) == 0) ++piv;
        if (piv == n) {
            // All remaining diagonal entries vanish; look for an off-diagonal one.
            bool found = false;
            for (std::size_t p = i; p < n && !found; ++p)
                for (std::size_t q = p + 1; q < n && !found; ++q)
                    if (sgn(a(p, q)) != 0) {
                        // New diagonal at p becomes 2·a(p,q) ≠ 0.
                        sym_add(p, q, Rational(1));
                        piv = p;
                        found = true;
                    }
            if (!found) {
                out.zero += n - i;
                break;
            }
        }
        sym_swap(i, piv);
        const Rational pivot = a(i, i);
        for (std::size_t r = i + 1; r < n; ++r) {
            if (sgn(a(r, i)) == 0) continue;
            const Rational c = -a(r, i) / pivot;
            sym_add(r, i, c);
        }
        if (sgn(pivot) > 0)
            ++out.positive;
        else
            ++out.negative;
        ++i;
    }
    return out;
}

bool is_hyperbolic(const IntSymMatrix& m) {
    return m.dim() >= 1 && signature(m) == Inertia{1, m.dim() - 1, 0};
}

namespace {

// Row-style HNF on the leading `ncols` columns of `a`, applying every row
// operation to the full rows. Returns the number of pivot rows; rows from
// that index on are zero in the leading columns.
std::size_t hermite_reduce(IntMatrix& a, std::size_t ncols) {
    const std::size_t m = a.rows();
    std::size_t r = 0;
    Integer q;
    auto axpy_row = [&](std::size_t dst, std::size_t src, const Integer& c) {
        for (std::size_t j = 0; j < a.cols(); ++j) a(dst, j) -= c * a(src, j);
    };
    for (std::size_t c = 0; c < ncols && r < m; ++c) {
        for (;;) {
            std::size_t best = m;
            for (std::size_t k = r; k < m; ++k) {
                if (sgn(a(k, c)) == 0) continue;
                if (best == m || mpz_cmpabs(a(k, c).get_mpz_t(), a(best, c).get_mpz_t()) < 0) best = k;
            }
            if (best == m) break;
            a.swap_rows(r, best);
            bool cleared = true;
            for (std::size_t k = r + 1; k < m; ++k) {
                if (sgn(a(k, c)) == 0) continue;
                mpz_fdiv_q(q.get_mpz_t(), a(k, c).get_mpz_t(), a(r, c).get_mpz_t());
                axpy_row(k, r, q);
                if (sgn(a(k, c)) != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (sgn(a(r, c)) == 0) continue;
        if (sgn(a(r, c)) < 0)
            for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) = -a(r, j);
        for (std::size_t k = 0; k < r; ++k) {
            mpz_fdiv_q(q.get_mpz_t(), a(k, c).get_mpz_t(), a(r, c).get_mpz_t());
            if (sgn(q) != 0) axpy_row(k, r, q);
        }
        ++r;
    }
    return r;
}

}  // namespace

std::vector<IntVector> hnf_basis(const std::vector<IntVector>& generators) {
    if (generators.empty()) return {};
    const std::size_t n = generators.front().size();
    IntMatrix a(generators.size(), n);
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (generators[i].size() != n) throw DimensionError("generators of unequal length");
        for (std::size_t j = 0; j < n; ++j) a(i, j) = generators[i][j];
    }
    const std::size_t rank = hermite_reduce(a, n);
    std::vector<IntVector> basis;
    basis.reserve(rank);
    for (std::size_t i = 0; i < rank; ++i) basis.push_back(a.row(i));
    return basis;
}

std::vector<IntVector> left_kernel(const IntMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    IntMatrix aug(rows, cols + rows);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug(i, j) = m(i, j);
        aug(i, cols + i) = 1;
    }
    const std::size_t rank = hermite_reduce(aug, cols);
    std::vector<IntVector> kernel;
    for (std::size_t i = rank; i < rows; ++i) {
        const IntVector full = aug.row(i);
        kernel.emplace_back(full.begin() + static_cast<std::ptrdiff_t>(cols), full.end());
    }
    return hnf_basis(kernel);
}

LorentzFrame lorentz_frame(const IntSymMatrix& form, const IntVector& h) {
    const std::size_t n = form.dim();
    if (h.size() != n) throw DimensionError("ample vector length does not match Gram dimension");
    if (!is_hyperbolic(form)) throw SignatureError("form does not have signature (1, rho-1)");
    const Integer h2 = form.square(h);
    if (sgn(h2) <= 0) throw NotPositiveError("h^T S h must be positive");

    using Vec = Eigen::Matrix<long double, Eigen::Dynamic, 1>;
    using Mat = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
    Mat s(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s(i, j) = static_cast<long double>(form(i, j).get_d());

    std::vector<Vec> basis;
    std::vector<long double> norms;  // +1 for the first axis, -1 afterwards
    Vec first(n);
    for (std::size_t i = 0; i < n; ++i) first(i) = static_cast<long double>(h[i].get_d());
    first /= std::sqrt(static_cast<long double>(h2.get_d()));
    basis.push_back(first);
    norms.push_back(1.0L);

    auto orthogonalize = [&](Vec v) {
        for (int pass = 0; pass < 2; ++pass)
            for (std::size_t k = 0; k < basis.size(); ++k) {
                const long double c = basis[k].dot(s * v) / norms[k];
                v -= c * basis[k];
            }
        return v;
    };

    std::vector<bool> used(n, false);
    while (basis.size() < n) {
        std::size_t pick = n;
        long double best = 0.0L;
        Vec best_vec;
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j]) continue;
            Vec v = orthogonalize(Vec::Unit(n, j));
            const long double q = v.dot(s * v);
            if (pick == n || q < best) {
                pick = j;
                best = q;
                best_vec = v;
            }
        }
        if (pick == n || !(best < 0.0L)) throw SignatureError("complement of h is not negative definite");
        used[pick] = true;
        basis.push_back(best_vec / std::sqrt(-best));
        norms.push_back(-1.0L);
    }

    Eigen::MatrixXd t(n, n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) t(i, k) = static_cast<double>(basis[k](i));
    return LorentzFrame{std::move(t), form};
}

double frame_residual(const LorentzFrame& frame) {
    const auto n = static_cast<Eigen::Index>(frame.source_form.dim());
    Eigen::MatrixXd s(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            s(i, j) = frame.source_form(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).get_d();
    Eigen::MatrixXd target = -Eigen::MatrixXd::Identity(n, n);
    if (n > 0) target(0, 0) = 1.0;
    const Eigen::MatrixXd diff = frame.transform.transpose() * s * frame.transform - target;
    return n == 0 ? 0.0 : diff.cwiseAbs().maxCoeff();
}

}  // namespace nefvol

#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include <Eigen/Dense>
#include <gmpxx.h>

#include "nefvol/errors.hpp"

namespace nefvol {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

/// Builds an IntVector from machine integers, e.g. `ints({1, 1, 0})`.
IntVector ints(std::initializer_list<long> values);

/// Dense row-major matrix over an exact ring (Integer or Rational).
template <typename T>
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
    DenseMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const {
        return {data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_};
    }
    void swap_rows(std::size_t a, std::size_t b);

    DenseMatrix transposed() const;
    bool operator==(const DenseMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = DenseMatrix<Integer>;
using RatMatrix = DenseMatrix<Rational>;

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& x);

/// Symmetric integer matrix: the Gram matrix of an integral quadratic form.
class IntSymMatrix {
public:
    /// Throws DimensionError unless `m` is square and symmetric.
    explicit IntSymMatrix(IntMatrix m);
    IntSymMatrix(std::initializer_list<std::initializer_list<long>> rows)
        : IntSymMatrix(IntMatrix(rows)) {}

    std::size_t dim() const { return m_.rows(); }
    const Integer& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    const IntMatrix& matrix() const { return m_; }

    Integer bilinear(const IntVector& x, const IntVector& y) const;
    Integer square(const IntVector& x) const { return bilinear(x, x); }
    /// Uᵀ S U.
    IntSymMatrix congruent(const IntMatrix& u) const;

    RatMatrix to_rational() const;

    bool operator==(const IntSymMatrix& other) const = default;

private:
    IntMatrix m_;
};

/// Exact determinant by fraction-free (Bareiss) elimination. 0×0 gives 1.
Integer det_exact(const IntMatrix& m);
inline Integer det_exact(const IntSymMatrix& m) { return det_exact(m.matrix()); }

struct Inertia {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;
    bool operator==(const Inertia&) const = default;
};

/// Inertia of a rational symmetric matrix via exact congruent diagonalization.
Inertia signature(const RatMatrix& m);
inline Inertia signature(const IntSymMatrix& m) { return signature(m.to_rational()); }

/// True iff the form has signature (1, dim-1, 0).
bool is_hyperbolic(const IntSymMatrix& m);

/// Canonical row-style Hermite normal form basis of the lattice spanned by
/// `generators`: upper echelon, positive pivots, entries above each pivot in
/// [0, pivot). Zero vectors are dropped; empty input gives an empty basis.
std::vector<IntVector> hnf_basis(const std::vector<IntVector>& generators);

/// HNF basis of {x ∈ Z^rows : xᵀ M = 0}.
std::vector<IntVector> left_kernel(const IntMatrix& m);

/// Real change of basis T with Tᵀ S T = diag(1, -1, ..., -1) whose first
/// column is h / sqrt(hᵀ S h).
struct LorentzFrame {
    Eigen::MatrixXd transform;
    IntSymMatrix source_form;
};

LorentzFrame lorentz_frame(const IntSymMatrix& form, const IntVector& h);

/// max_ij |Tᵀ S T - diag(1, -1, ..., -1)|.
double frame_residual(const LorentzFrame& frame);

}  // namespace nefvol

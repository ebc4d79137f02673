#pragma once

#include "core/types.hpp"

#include <vector>

namespace schrobpx {

/// Real sparse matrix in compressed row form with an explicit symmetry flag.
/// Thin wrapper over Eigen's row-major sparse matrix; all heavy lifting is
/// delegated to Eigen.
class SparseOperator {
public:
    using Storage = Eigen::SparseMatrix<double, Eigen::RowMajor>;
    using Triplet = Eigen::Triplet<double>;

    SparseOperator() = default;
    SparseOperator(Index rows, Index cols) : mat_(rows, cols) {}
    explicit SparseOperator(Storage mat) : mat_(std::move(mat)) { mat_.makeCompressed(); }

    static SparseOperator fromTriplets(Index rows, Index cols,
                                       const std::vector<Triplet>& triplets,
                                       bool symmetric = false);
    static SparseOperator identity(Index n);
    static SparseOperator diagonal(const Vector& d);
    static SparseOperator fromDense(const Matrix& dense, double drop_tol = 0.0);

    Index rows() const { return mat_.rows(); }
    Index cols() const { return mat_.cols(); }
    Index nonZeros() const { return mat_.nonZeros(); }

    bool symmetricFlag() const { return symmetric_; }
    void setSymmetricFlag(bool s) { symmetric_ = s; }

    /// Exact structural + numerical symmetry check (not the flag).
    bool isSymmetric(double tol = 0.0) const;

    Vector apply(const Vector& x) const;
    Vector applyTranspose(const Vector& x) const;
    ComplexVector apply(const ComplexVector& x) const;
    ComplexVector applyTranspose(const ComplexVector& x) const;

    SparseOperator transpose() const;
    SparseOperator multiply(const SparseOperator& other) const;
    SparseOperator scaled(double c) const;

    Matrix dense() const { return Matrix(mat_); }
    const Storage& eigen() const { return mat_; }
    Storage& eigen() { return mat_; }

    /// Max nonzero count over rows / over columns.
    Index maxRowNonZeros() const;
    Index maxColNonZeros() const;
    /// max_ij |a_ij|
    double maxAbsEntry() const;

private:
    Storage mat_;
    bool symmetric_ = false;
};

} // namespace schrobpx

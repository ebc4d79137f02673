#include "core/sparse_operator.hpp"

namespace schrobpx {

SparseOperator SparseOperator::fromTriplets(Index rows, Index cols,
                                            const std::vector<Triplet>& triplets,
                                            bool symmetric) {
    Storage m(rows, cols);
    m.setFromTriplets(triplets.begin(), triplets.end());
    m.makeCompressed();
    SparseOperator out(std::move(m));
    out.symmetric_ = symmetric;
    return out;
}

SparseOperator SparseOperator::identity(Index n) {
    Storage m(n, n);
    m.setIdentity();
    SparseOperator out(std::move(m));
    out.symmetric_ = true;
    return out;
}

SparseOperator SparseOperator::diagonal(const Vector& d) {
    std::vector<Triplet> t;
    t.reserve(static_cast<size_t>(d.size()));
    for (Index i = 0; i < d.size(); ++i) t.emplace_back(i, i, d[i]);
    return fromTriplets(d.size(), d.size(), t, true);
}

SparseOperator SparseOperator::fromDense(const Matrix& dense, double drop_tol) {
    std::vector<Triplet> t;
    for (Index i = 0; i < dense.rows(); ++i)
        for (Index j = 0; j < dense.cols(); ++j)
            if (std::abs(dense(i, j)) > drop_tol) t.emplace_back(i, j, dense(i, j));
    return fromTriplets(dense.rows(), dense.cols(), t);
}

bool SparseOperator::isSymmetric(double tol) const {
    if (rows() != cols()) return false;
    Storage diff = Storage(mat_ - Storage(mat_.transpose()));
    double norm = 0.0;
    for (Index k = 0; k < diff.outerSize(); ++k)
        for (Storage::InnerIterator it(diff, k); it; ++it)
            norm = std::max(norm, std::abs(it.value()));
    return norm <= tol;
}

Vector SparseOperator::apply(const Vector& x) const {
    require(x.size() == cols(), ErrorCode::DimensionMismatch, "SparseOperator::apply: size mismatch");
    return mat_ * x;
}

Vector SparseOperator::applyTranspose(const Vector& x) const {
    require(x.size() == rows(), ErrorCode::DimensionMismatch,
            "SparseOperator::applyTranspose: size mismatch");
    return mat_.transpose() * x;
}

ComplexVector SparseOperator::apply(const ComplexVector& x) const {
    require(x.size() == cols(), ErrorCode::DimensionMismatch, "SparseOperator::apply: size mismatch");
    return mat_.cast<Complex>() * x;
}

ComplexVector SparseOperator::applyTranspose(const ComplexVector& x) const {
    require(x.size() == rows(), ErrorCode::DimensionMismatch,
            "SparseOperator::applyTranspose: size mismatch");
    return mat_.transpose().cast<Complex>() * x;
}

SparseOperator SparseOperator::transpose() const {
    SparseOperator out{Storage(mat_.transpose())};
    out.symmetric_ = symmetric_;
    return out;
}

SparseOperator SparseOperator::multiply(const SparseOperator& other) const {
    require(cols() == other.rows(), ErrorCode::DimensionMismatch,
            "SparseOperator::multiply: inner dimensions differ");
    return SparseOperator{Storage(mat_ * other.mat_)};
}

SparseOperator SparseOperator::scaled(double c) const {
    SparseOperator out{Storage(c * mat_)};
    out.symmetric_ = symmetric_;
    return out;
}

Index SparseOperator::maxRowNonZeros() const {
    Index best = 0;
    for (Index i = 0; i < mat_.outerSize(); ++i) {
        Index count = 0;
        for (Storage::InnerIterator it(mat_, i); it; ++it) ++count;
        best = std::max(best, count);
    }
    return best;
}

Index SparseOperator::maxColNonZeros() const {
    std::vector<Index> counts(static_cast<size_t>(cols()), 0);
    for (Index i = 0; i < mat_.outerSize(); ++i)
        for (Storage::InnerIterator it(mat_, i); it; ++it) ++counts[static_cast<size_t>(it.col())];
    Index best = 0;
    for (Index c : counts) best = std::max(best, c);
    return best;
}

double SparseOperator::maxAbsEntry() const {
    double best = 0.0;
    for (Index i = 0; i < mat_.outerSize(); ++i)
        for (Storage::InnerIterator it(mat_, i); it; ++it)
            best = std::max(best, std::abs(it.value()));
    return best;
}

} // namespace schrobpx

#pragma once

#include <optional>
#include <vector>

#include "poscert/rational.hpp"
#include "poscert/unipoly.hpp"

namespace poscert {

// Dense matrix over Q. Small-scale exact linear algebra: quotient-ring
// multiplication operators, RUR solves, Gram eliminations.
class QMat {
public:
    QMat() : rows_(0), cols_(0) {}
    QMat(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c, Rat(0)) {}

    static QMat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    QMat operator*(const QMat& b) const;
    std::vector<Rat> apply(const std::vector<Rat>& v) const;

    bool operator==(const QMat& b) const {
        return rows_ == b.rows_ && cols_ == b.cols_ && a_ == b.a_;
    }

    // Solves A x = b by Gaussian elimination; empty when singular.
    std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const;

    // det(T I - A) via a similarity reduction to Hessenberg form followed
    // by the standard recurrence.
    UvPoly charpoly() const;

    // Naive characteristic polynomial by cofactor expansion of T I - A;
    // only sensible for very small matrices (cross-check oracle).
    UvPoly charpoly_expansion() const;

    // Monic minimal polynomial of the vector v under A (the lowest-degree
    // monic p with p(A) v = 0).
    UvPoly minpoly_of_vector(const std::vector<Rat>& v) const;

private:
    std::size_t rows_, cols_;
    std::vector<Rat> a_;
};

}  // namespace poscert

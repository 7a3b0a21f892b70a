#include "poscert/matrix.hpp"

#include <stdexcept>

namespace poscert {

QMat QMat::identity(std::size_t n) {
    QMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMat QMat::operator*(const QMat& b) const {
    if (cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    QMat r(rows_, b.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                if (b.at(k, j) == 0) continue;
                r.at(i, j) += aik * b.at(k, j);
            }
        }
    return r;
}

std::vector<Rat> QMat::apply(const std::vector<Rat>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix/vector shape mismatch");
    std::vector<Rat> out(rows_, Rat(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if (at(i, j) == 0 || v[j] == 0) continue;
            out[i] += at(i, j) * v[j];
        }
    return out;
}

std::optional<std::vector<Rat>> QMat::solve(const std::vector<Rat>& b) const {
    if (rows_ != cols_ || b.size() != rows_) throw std::invalid_argument("solve shape mismatch");
    std::size_t n = rows_;
    QMat m = *this;
    std::vector<Rat> rhs = b;
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m.at(piv, k) == 0) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(k, j));
            std::swap(rhs[piv], rhs[k]);
        }
        Rat inv = Rat(1) / m.at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m.at(i, k) == 0) continue;
            Rat f = m.at(i, k) * inv;
            m.at(i, k) = 0;
            for (std::size_t j = k + 1; j < n; ++j) {
                if (m.at(k, j) == 0) continue;
                m.at(i, j) -= f * m.at(k, j);
            }
            rhs[i] -= f * rhs[k];
        }
    }
    std::vector<Rat> x(n, Rat(0));
    for (std::size_t i = n; i-- > 0;) {
        Rat s = rhs[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= m.at(i, j) * x[j];
        x[i] = s / m.at(i, i);
    }
    return x;
}

UvPoly QMat::charpoly() const {
    if (rows_ != cols_) throw std::invalid_argument("charpoly of non-square matrix");
    std::size_t n = rows_;
    if (n == 0) return UvPoly::constant(Rat(1));
    QMat h = *this;

    // similarity reduction to upper Hessenberg form
    for (std::size_t k = 0; k + 2 < n; ++k) {
        std::size_t piv = k + 1;
        while (piv < n && h.at(piv, k) == 0) ++piv;
        if (piv == n) continue;
        if (piv != k + 1) {
            for (std::size_t j = 0; j < n; ++j) std::swap(h.at(piv, j), h.at(k + 1, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(h.at(i, piv), h.at(i, k + 1));
        }
        Rat inv = Rat(1) / h.at(k + 1, k);
        for (std::size_t i = k + 2; i < n; ++i) {
            if (h.at(i, k) == 0) continue;
            Rat f = h.at(i, k) * inv;
            // row_i -= f * row_{k+1}; col_{k+1} += f * col_i (similarity)
            for (std::size_t j = 0; j < n; ++j) h.at(i, j) -= f * h.at(k + 1, j);
            for (std::size_t r = 0; r < n; ++r) h.at(r, k + 1) += f * h.at(r, i);
        }
    }

    // p_k(T) = det(T I - H[0..k-1, 0..k-1])
    std::vector<UvPoly> p(n + 1);
    p[0] = UvPoly::constant(Rat(1));
    for (std::size_t k = 0; k < n; ++k) {
        // expand along the last row of the (k+1)x(k+1) block
        UvPoly acc = (UvPoly::variable() - UvPoly::constant(h.at(k, k))) * p[k];
        Rat subprod(1);
        for (std::size_t i = k; i-- > 0;) {
            subprod *= h.at(i + 1, i);
            if (h.at(i, k) != 0 && subprod != 0)
                acc = acc - p[i].scaled(h.at(i, k) * subprod);
            if (subprod == 0) break;
        }
        p[k + 1] = acc;
    }
    return p[n];
}

namespace {

UvPoly det_expand(const std::vector<std::vector<UvPoly>>& m) {
    std::size_t n = m.size();
    if (n == 1) return m[0][0];
    UvPoly acc;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<UvPoly>> sub(n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t jj = 0; jj < n; ++jj)
                if (jj != j) sub[i - 1].push_back(m[i][jj]);
        UvPoly term = m[0][j] * det_expand(sub);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace

UvPoly QMat::charpoly_expansion() const {
    if (rows_ != cols_) throw std::invalid_argument("charpoly of non-square matrix");
    std::size_t n = rows_;
    if (n == 0) return UvPoly::constant(Rat(1));
    std::vector<std::vector<UvPoly>> m(n, std::vector<UvPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            m[i][j] = UvPoly::constant(-at(i, j));
            if (i == j) m[i][j] = m[i][j] + UvPoly::variable();
        }
    return det_expand(m);
}

UvPoly QMat::minpoly_of_vector(const std::vector<Rat>& v) const {
    if (rows_ != cols_) throw std::invalid_argument("minpoly of non-square matrix");
    std::size_t n = rows_;
    // Incremental elimination over the Krylov vectors v, Av, A^2 v, ...
    // rows: reduced vectors; combo[r] = coefficients expressing row r in
    // terms of the Krylov basis.
    std::vector<std::vector<Rat>> rows, combos;
    std::vector<std::size_t> lead;
    std::vector<Rat> cur = v;
    std::vector<Rat> curcombo(1, Rat(1));
    for (std::size_t step = 0; step <= n; ++step) {
        std::vector<Rat> red = cur;
        std::vector<Rat> combo = curcombo;
        combo.resize(step + 1, Rat(0));
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (red[lead[r]] == 0) continue;
            Rat f = red[lead[r]];
            for (std::size_t j = 0; j < n; ++j) red[j] -= f * rows[r][j];
            for (std::size_t j = 0; j < combos[r].size(); ++j) combo[j] -= f * combos[r][j];
        }
        std::size_t l = 0;
        while (l < n && red[l] == 0) ++l;
        if (l == n) {
            // dependency found: combo gives the polynomial coefficients
            UvPoly p{std::vector<Rat>(combo.begin(), combo.end())};
            return p.monic();
        }
        Rat inv = Rat(1) / red[l];
        for (auto& x : red) x *= inv;
        for (auto& x : combo) x *= inv;
        rows.push_back(red);
        combos.push_back(combo);
        lead.push_back(l);
        cur = apply(cur);
        curcombo.assign(step + 2, Rat(0));
        curcombo[step + 1] = 1;
    }
    throw std::logic_error("minpoly_of_vector: no dependency found");
}

}  // namespace poscert

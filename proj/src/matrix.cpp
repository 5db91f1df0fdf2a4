#include "prodrange/matrix.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace prodrange {

double positive_contraction_violation(const ComplexMatrix& m);  // eig.cpp

ComplexMatrix::ComplexMatrix(int n, std::initializer_list<cplx> entries) : n_(n), a_(entries) {
    if (a_.size() != static_cast<size_t>(n) * n)
        throw std::invalid_argument("ComplexMatrix: entry count does not match dimension");
}

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diag(const std::vector<cplx>& d) {
    ComplexMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.dim(); ++i) m(i, i) = d[static_cast<size_t>(i)];
    return m;
}

ComplexMatrix ComplexMatrix::diag(const std::vector<double>& d) {
    ComplexMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.dim(); ++i) m(i, i) = d[static_cast<size_t>(i)];
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix r(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix r(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

ComplexMatrix ComplexMatrix::conj() const {
    ComplexMatrix r(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r(i, j) = std::conj((*this)(i, j));
    return r;
}

cplx ComplexMatrix::trace() const {
    cplx t = 0.0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const cplx& z : a_) s += std::norm(z);
    return std::sqrt(s);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
    for (cplx& z : a_) z *= s;
    return *this;
}

void ComplexMatrix::set_block(int row, int col, const ComplexMatrix& b) {
    for (int i = 0; i < b.dim(); ++i)
        for (int j = 0; j < b.dim(); ++j) (*this)(row + i, col + j) = b(i, j);
}

ComplexMatrix ComplexMatrix::block(int row, int col, int size) const {
    ComplexMatrix b(size);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) b(i, j) = (*this)(row + i, col + j);
    return b;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    return (*this - adjoint()).frobenius_norm() <= tol;
}

bool ComplexMatrix::is_projection(double tol) const {
    return is_hermitian(tol) && ((*this) * (*this) - *this).frobenius_norm() <= tol;
}

bool ComplexMatrix::is_positive_contraction(double tol) const {
    if (!is_hermitian(tol)) return false;
    for (int i = 0; i < n_; ++i) {
        double d = (*this)(i, i).real();
        if (d < -tol || d > 1.0 + tol) return false;
    }
    // exact spectral check, defined in eig.cpp
    return positive_contraction_violation(*this) <= tol;
}

bool ComplexMatrix::is_scalar(double tol) const {
    if (n_ == 0) return true;
    cplx c = (*this)(0, 0);
    ComplexMatrix d = *this;
    for (int i = 0; i < n_; ++i) d(i, i) -= c;
    return d.frobenius_norm() <= tol;
}

bool ComplexMatrix::is_normal(double tol) const {
    ComplexMatrix aa = (*this) * adjoint();
    ComplexMatrix a2 = adjoint() * (*this);
    double scale = frobenius_norm();
    return (aa - a2).frobenius_norm() <= tol * std::max(1.0, scale * scale);
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    int n = a.dim();
    ComplexMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            cplx aik = a(i, k);
            if (aik == cplx(0.0)) continue;
            for (int j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }

std::vector<cplx> matvec(const ComplexMatrix& a, const std::vector<cplx>& x) {
    int n = a.dim();
    std::vector<cplx> y(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        cplx s = 0.0;
        for (int j = 0; j < n; ++j) s += a(i, j) * x[static_cast<size_t>(j)];
        y[static_cast<size_t>(i)] = s;
    }
    return y;
}

cplx quadratic_form(const ComplexMatrix& m, const std::vector<cplx>& x) {
    std::vector<cplx> y = matvec(m, x);
    cplx s = 0.0;
    for (size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
    return s;
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
    ComplexMatrix h = m + m.adjoint();
    h *= 0.5;
    return h;
}

ComplexMatrix direct_sum(const std::vector<ComplexMatrix>& blocks) {
    int n = 0;
    for (const auto& b : blocks) n += b.dim();
    ComplexMatrix r(n);
    int off = 0;
    for (const auto& b : blocks) {
        r.set_block(off, off, b);
        off += b.dim();
    }
    return r;
}

}  // namespace prodrange

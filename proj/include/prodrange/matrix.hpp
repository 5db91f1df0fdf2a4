#ifndef PRODRANGE_MATRIX_HPP
#define PRODRANGE_MATRIX_HPP

#include <complex>
#include <initializer_list>
#include <vector>

namespace prodrange {

using cplx = std::complex<double>;

/// Dense n-by-n complex matrix, row-major storage. The single carrier type
/// for every operator (A, B, P, Q, dilations) in the library.
class ComplexMatrix {
  public:
    ComplexMatrix() : n_(0) {}
    explicit ComplexMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}
    ComplexMatrix(int n, std::initializer_list<cplx> entries);

    static ComplexMatrix identity(int n);
    static ComplexMatrix zero(int n) { return ComplexMatrix(n); }
    static ComplexMatrix diag(const std::vector<cplx>& d);
    static ComplexMatrix diag(const std::vector<double>& d);

    int dim() const { return n_; }

    cplx& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const cplx& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    const std::vector<cplx>& data() const { return a_; }
    std::vector<cplx>& data() { return a_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conj() const;

    cplx trace() const;
    double frobenius_norm() const;

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(cplx s);

    /// Places `block` with its top-left corner at (row, col).
    void set_block(int row, int col, const ComplexMatrix& block);
    ComplexMatrix block(int row, int col, int size) const;

    // structural predicates, decidable to a tolerance
    bool is_hermitian(double tol = 1e-8) const;
    bool is_projection(double tol = 1e-8) const;
    bool is_positive_contraction(double tol = 1e-8) const;
    bool is_scalar(double tol = 1e-8) const;
    bool is_normal(double tol = 1e-8) const;

  private:
    int n_;
    std::vector<cplx> a_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, ComplexMatrix a);

std::vector<cplx> matvec(const ComplexMatrix& a, const std::vector<cplx>& x);

/// x* M x for a (not necessarily unit) vector x.
cplx quadratic_form(const ComplexMatrix& m, const std::vector<cplx>& x);

/// (M + M*)/2
ComplexMatrix hermitian_part(const ComplexMatrix& m);

/// Direct sum diag(blocks...).
ComplexMatrix direct_sum(const std::vector<ComplexMatrix>& blocks);

}  // namespace prodrange

#endif

#pragma once

#include <complex>
#include <vector>

namespace symtrace {

using cplx = std::complex<double>;

/// Dense complex matrix.  An optional slot structure (d_1,...,d_k with
/// prod d_i = rows = cols) enables the tensor-leg operations: partial trace,
/// partial transpose, and embedding into a larger slot list.
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}

    static CMatrix identity(int n);
    static CMatrix zero(int n) { return CMatrix(n, n); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    cplx& at(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
    const cplx& at(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

    const std::vector<int>& slots() const { return slots_; }
    bool has_slots() const { return !slots_.empty(); }
    /// Attaches a slot structure; throws if the sizes are inconsistent.
    CMatrix& with_slots(std::vector<int> dims);

    CMatrix operator+(const CMatrix& o) const;
    CMatrix operator-(const CMatrix& o) const;
    CMatrix operator*(const CMatrix& o) const;
    CMatrix operator*(cplx s) const;
    CMatrix operator-() const { return *this * cplx(-1.0); }
    CMatrix& operator+=(const CMatrix& o);

    CMatrix adjoint() const;
    CMatrix transpose() const;
    CMatrix conj() const;

    cplx trace() const;
    double frobenius() const;
    double max_abs() const;
    bool all_finite() const;

    /// max entry of |M - M^dag| <= 1e-12 (1 + ||M||_F)
    bool is_hermitian_within(double scale_tol = 1e-12) const;

    std::string str() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<cplx> a_;
    std::vector<int> slots_;
};

/// Hilbert-Schmidt inner product tr(A^dag B).
cplx hs_inner(const CMatrix& A, const CMatrix& B);

/// Kronecker product; slot lists concatenate (a plain matrix counts as one slot).
CMatrix kron(const CMatrix& A, const CMatrix& B);

/// Traces out the (1-based) slots in S; S may be empty (returns M) or all
/// slots (1x1 result).  Remaining slots keep their relative order.
CMatrix partial_trace(const CMatrix& M, const std::vector<int>& S);

/// Transposes the (1-based) slots in S in place of the full transpose.
CMatrix partial_transpose(const CMatrix& M, const std::vector<int>& S);

/// Builds the operator on slot list `dims` that acts as `op` on the listed
/// slots (op's own slot order = the order of `slots`) and trivially elsewhere.
CMatrix embed_op(const CMatrix& op, const std::vector<int>& slots, const std::vector<int>& dims);

/// All eigenvalues of a hermitian matrix, ascending.  Uses cyclic Jacobi on
/// the 2n x 2n real-symmetric embedding [[Re,-Im],[Im,Re]]; the matrix is
/// symmetrized as (M+M^dag)/2 first.
std::vector<double> eigenvalues_hermitian(const CMatrix& M);

double min_eigenvalue_hermitian(const CMatrix& M);
double max_eigenvalue_hermitian(const CMatrix& M);

}  // namespace symtrace

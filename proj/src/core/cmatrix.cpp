#include "core/cmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace symtrace {

CMatrix CMatrix::identity(int n) {
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

CMatrix& CMatrix::with_slots(std::vector<int> dims) {
    long prod = 1;
    for (int d : dims) {
        if (d < 1) throw std::invalid_argument("slot dimension must be positive");
        prod *= d;
    }
    if (prod != rows_ || rows_ != cols_)
        throw std::invalid_argument("slot structure inconsistent with matrix size");
    slots_ = std::move(dims);
    return *this;
}

CMatrix CMatrix::operator+(const CMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in +");
    CMatrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

CMatrix CMatrix::operator-(const CMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in -");
    CMatrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

CMatrix CMatrix::operator*(const CMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch in *");
    CMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int l = 0; l < cols_; ++l) {
            cplx v = at(i, l);
            if (v == cplx(0.0)) continue;
            const cplx* src = &o.a_[std::size_t(l) * o.cols_];
            cplx* dst = &r.a_[std::size_t(i) * o.cols_];
            for (int j = 0; j < o.cols_; ++j) dst[j] += v * src[j];
        }
    }
    return r;
}

CMatrix CMatrix::operator*(cplx s) const {
    CMatrix r = *this;
    for (auto& v : r.a_) v *= s;
    return r;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in +=");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

CMatrix CMatrix::adjoint() const {
    CMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = std::conj(at(i, j));
    r.slots_ = slots_;
    return r;
}

CMatrix CMatrix::transpose() const {
    CMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    r.slots_ = slots_;
    return r;
}

CMatrix CMatrix::conj() const {
    CMatrix r = *this;
    for (auto& v : r.a_) v = std::conj(v);
    return r;
}

cplx CMatrix::trace() const {
    cplx t = 0.0;
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
    return t;
}

double CMatrix::frobenius() const {
    double s = 0.0;
    for (const auto& v : a_) s += std::norm(v);
    return std::sqrt(s);
}

double CMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& v : a_) m = std::max(m, std::abs(v));
    return m;
}

bool CMatrix::all_finite() const {
    for (const auto& v : a_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

bool CMatrix::is_hermitian_within(double scale_tol) const {
    if (rows_ != cols_) return false;
    return (*this - adjoint()).max_abs() <= scale_tol * (1.0 + frobenius());
}

std::string CMatrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            const cplx& v = at(i, j);
            os << "(" << v.real() << "," << v.imag() << ") ";
        }
        os << "\n";
    }
    return os.str();
}

cplx hs_inner(const CMatrix& A, const CMatrix& B) {
    if (A.rows() != B.rows() || A.cols() != B.cols())
        throw std::invalid_argument("shape mismatch in hs_inner");
    cplx s = 0.0;
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j) s += std::conj(A.at(i, j)) * B.at(i, j);
    return s;
}

CMatrix kron(const CMatrix& A, const CMatrix& B) {
    CMatrix r(A.rows() * B.rows(), A.cols() * B.cols());
    for (int ia = 0; ia < A.rows(); ++ia)
        for (int ja = 0; ja < A.cols(); ++ja) {
            cplx v = A.at(ia, ja);
            if (v == cplx(0.0)) continue;
            for (int ib = 0; ib < B.rows(); ++ib)
                for (int jb = 0; jb < B.cols(); ++jb)
                    r.at(ia * B.rows() + ib, ja * B.cols() + jb) = v * B.at(ib, jb);
        }
    std::vector<int> dims = A.has_slots() ? A.slots() : std::vector<int>{A.rows()};
    const std::vector<int> db = B.has_slots() ? B.slots() : std::vector<int>{B.rows()};
    dims.insert(dims.end(), db.begin(), db.end());
    if (r.rows() == r.cols() && r.rows() > 0) r.with_slots(dims);
    return r;
}

namespace {

struct SlotIndex {
    std::vector<int> dims;
    std::vector<long> stride;

    explicit SlotIndex(const std::vector<int>& d) : dims(d), stride(d.size()) {
        long s = 1;
        for (int i = (int)d.size() - 1; i >= 0; --i) {
            stride[i] = s;
            s *= d[i];
        }
    }
    long total() const {
        long t = 1;
        for (int d : dims) t *= d;
        return t;
    }
    void digits(long idx, std::vector<int>& out) const {
        out.resize(dims.size());
        for (std::size_t i = 0; i < dims.size(); ++i) {
            out[i] = int(idx / stride[i]);
            idx %= stride[i];
        }
    }
    long pack(const std::vector<int>& dg) const {
        long idx = 0;
        for (std::size_t i = 0; i < dims.size(); ++i) idx += long(dg[i]) * stride[i];
        return idx;
    }
};

void require_slots(const CMatrix& M) {
    if (!M.has_slots()) throw std::invalid_argument("matrix has no slot structure");
}

void check_subset(const std::vector<int>& S, int nslots) {
    std::vector<char> seen(nslots + 1, 0);
    for (int s : S) {
        if (s < 1 || s > nslots) throw std::invalid_argument("invalid slot index");
        if (seen[s]) throw std::invalid_argument("repeated slot index");
        seen[s] = 1;
    }
}

}  // namespace

CMatrix partial_trace(const CMatrix& M, const std::vector<int>& S) {
    require_slots(M);
    check_subset(S, (int)M.slots().size());
    if (S.empty()) return M;

    SlotIndex full(M.slots());
    std::vector<char> traced(M.slots().size() + 1, 0);
    for (int s : S) traced[s] = 1;

    std::vector<int> kept_dims, kept_pos, traced_pos;
    for (std::size_t i = 0; i < M.slots().size(); ++i) {
        if (traced[i + 1]) traced_pos.push_back((int)i);
        else {
            kept_dims.push_back(M.slots()[i]);
            kept_pos.push_back((int)i);
        }
    }
    if (kept_dims.empty()) kept_dims.push_back(1);

    SlotIndex kept(kept_dims);
    std::vector<int> tdims;
    for (int p : traced_pos) tdims.push_back(M.slots()[p]);
    SlotIndex tr(tdims.empty() ? std::vector<int>{1} : tdims);

    CMatrix out((int)kept.total(), (int)kept.total());
    std::vector<int> di(full.dims.size()), dj(full.dims.size());
    std::vector<int> kd(kept.dims.size()), td(tr.dims.size());

    for (long i = 0; i < kept.total(); ++i) {
        kept.digits(i, kd);
        for (long j = 0; j < kept.total(); ++j) {
            kept.digits(j, dj);  // reuse dj buffer for kept digits of j
            cplx sum = 0.0;
            for (long t = 0; t < tr.total(); ++t) {
                tr.digits(t, td);
                for (std::size_t p = 0; p < kept_pos.size(); ++p) {
                    di[kept_pos[p]] = kd[p];
                }
                for (std::size_t p = 0; p < traced_pos.size(); ++p) di[traced_pos[p]] = td[p];
                long row = full.pack(di);
                for (std::size_t p = 0; p < kept_pos.size(); ++p) di[kept_pos[p]] = dj[p];
                long col = full.pack(di);
                sum += M.at((int)row, (int)col);
            }
            out.at((int)i, (int)j) = sum;
        }
    }
    if (!kept_pos.empty()) {
        std::vector<int> dims;
        for (int p : kept_pos) dims.push_back(M.slots()[p]);
        out.with_slots(dims);
    }
    return out;
}

CMatrix partial_transpose(const CMatrix& M, const std::vector<int>& S) {
    require_slots(M);
    check_subset(S, (int)M.slots().size());
    if (S.empty()) return M;

    SlotIndex full(M.slots());
    std::vector<char> flip(M.slots().size() + 1, 0);
    for (int s : S) flip[s] = 1;

    CMatrix out(M.rows(), M.cols());
    std::vector<int> di(full.dims.size()), dj(full.dims.size());
    for (long i = 0; i < full.total(); ++i) {
        full.digits(i, di);
        for (long j = 0; j < full.total(); ++j) {
            full.digits(j, dj);
            // swap row/col digits on the flipped slots
            std::vector<int> ri = di, rj = dj;
            for (std::size_t p = 0; p < full.dims.size(); ++p)
                if (flip[p + 1]) std::swap(ri[p], rj[p]);
            out.at((int)full.pack(ri), (int)full.pack(rj)) = M.at((int)i, (int)j);
        }
    }
    out.with_slots(M.slots());
    return out;
}

CMatrix embed_op(const CMatrix& op, const std::vector<int>& slots, const std::vector<int>& dims) {
    SlotIndex full(dims);
    std::vector<char> used(dims.size() + 1, 0);
    std::vector<int> op_dims;
    for (int s : slots) {
        if (s < 1 || s > (int)dims.size()) throw std::invalid_argument("embed slot out of range");
        if (used[s]) throw std::invalid_argument("repeated embed slot");
        used[s] = 1;
        op_dims.push_back(dims[s - 1]);
    }
    SlotIndex sub(op_dims.empty() ? std::vector<int>{1} : op_dims);
    if (op.rows() != sub.total() || op.cols() != sub.total())
        throw std::invalid_argument("embedded operator size mismatch");

    std::vector<int> env_pos;
    std::vector<int> env_dims;
    for (std::size_t i = 0; i < dims.size(); ++i)
        if (!used[i + 1]) {
            env_pos.push_back((int)i);
            env_dims.push_back(dims[i]);
        }
    SlotIndex env(env_dims.empty() ? std::vector<int>{1} : env_dims);

    CMatrix out((int)full.total(), (int)full.total());
    std::vector<int> si(sub.dims.size()), sj(sub.dims.size()), ed(env.dims.size());
    std::vector<int> di(dims.size()), dj(dims.size());
    for (long i = 0; i < sub.total(); ++i) {
        sub.digits(i, si);
        for (long j = 0; j < sub.total(); ++j) {
            cplx v = op.at((int)i, (int)j);
            if (v == cplx(0.0)) continue;
            sub.digits(j, sj);
            for (long e = 0; e < env.total(); ++e) {
                env.digits(e, ed);
                for (std::size_t p = 0; p < slots.size(); ++p) {
                    di[slots[p] - 1] = si[p];
                    dj[slots[p] - 1] = sj[p];
                }
                for (std::size_t p = 0; p < env_pos.size(); ++p) {
                    di[env_pos[p]] = ed[p];
                    dj[env_pos[p]] = ed[p];
                }
                out.at((int)full.pack(di), (int)full.pack(dj)) = v;
            }
        }
    }
    out.with_slots(dims);
    return out;
}

namespace {

// Cyclic Jacobi for a real symmetric matrix held in a flat buffer.
std::vector<double> jacobi_symmetric(std::vector<double>& A, int n) {
    auto idx = [n](int i, int j) { return std::size_t(i) * n + j; };

    double fro = 0.0;
    for (std::size_t i = 0; i < A.size(); ++i) fro += A[i] * A[i];
    fro = std::sqrt(fro);
    const double stop = 1e-14 * (fro > 0 ? fro : 1.0);

    for (int sweep = 0; sweep < 60; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += 2.0 * A[idx(p, q)] * A[idx(p, q)];
        if (std::sqrt(off) < stop) break;

        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = A[idx(p, q)];
                if (apq == 0.0) continue;
                double theta = (A[idx(q, q)] - A[idx(p, p)]) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;

                for (int r = 0; r < n; ++r) {
                    double arp = A[idx(r, p)], arq = A[idx(r, q)];
                    A[idx(r, p)] = c * arp - s * arq;
                    A[idx(r, q)] = s * arp + c * arq;
                }
                for (int r = 0; r < n; ++r) {
                    double apr = A[idx(p, r)], aqr = A[idx(q, r)];
                    A[idx(p, r)] = c * apr - s * aqr;
                    A[idx(q, r)] = s * apr + c * aqr;
                }
            }
        }
    }

    std::vector<double> eig(n);
    for (int i = 0; i < n; ++i) eig[i] = A[idx(i, i)];
    std::sort(eig.begin(), eig.end());
    return eig;
}

}  // namespace

std::vector<double> eigenvalues_hermitian(const CMatrix& M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("eigenvalues of a non-square matrix");
    if (!M.all_finite()) throw std::invalid_argument("non-finite entries");
    const int n = M.rows();
    CMatrix H = (M + M.adjoint()) * cplx(0.5);

    // real-symmetric embedding; every eigenvalue of H appears twice
    const int m = 2 * n;
    std::vector<double> A(std::size_t(m) * m, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double re = H.at(i, j).real(), im = H.at(i, j).imag();
            A[std::size_t(i) * m + j] = re;
            A[std::size_t(i + n) * m + (j + n)] = re;
            A[std::size_t(i) * m + (j + n)] = -im;
            A[std::size_t(i + n) * m + j] = im;
        }
    std::vector<double> doubled = jacobi_symmetric(A, m);
    std::vector<double> eig(n);
    for (int i = 0; i < n; ++i) eig[i] = doubled[2 * i];  // pairs are adjacent after sorting
    return eig;
}

double min_eigenvalue_hermitian(const CMatrix& M) { return eigenvalues_hermitian(M).front(); }

double max_eigenvalue_hermitian(const CMatrix& M) { return eigenvalues_hermitian(M).back(); }

}  // namespace symtrace

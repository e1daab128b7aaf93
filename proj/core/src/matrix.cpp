#include "posetcoho/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace posetcoho {

IntMat IntMat::identity(std::size_t n) {
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool IntMat::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

IntMat IntMat::transposed() const {
    IntMat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMat IntMat::operator*(const IntMat& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("IntMat::operator*: shape mismatch");
    IntMat r(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& x = (*this)(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) r(i, j) += x * rhs(k, j);
        }
    return r;
}

IntMat IntMat::operator+(const IntMat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("IntMat::operator+: shape mismatch");
    IntMat r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + rhs.a_[i];
    return r;
}

IntMat IntMat::operator-(const IntMat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("IntMat::operator-: shape mismatch");
    IntMat r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - rhs.a_[i];
    return r;
}

IntMat IntMat::operator-() const {
    IntMat r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
    return r;
}

IntMat IntMat::rows_subset(const std::vector<std::size_t>& idx) const {
    IntMat r(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(idx[i], j);
    return r;
}

IntMat IntMat::cols_subset(const std::vector<std::size_t>& idx) const {
    IntMat r(rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) r(i, j) = (*this)(i, idx[j]);
    return r;
}

void IntMat::set_block(std::size_t i0, std::size_t j0, const IntMat& b) {
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) (*this)(i0 + i, j0 + j) = b(i, j);
}

std::string IntMat::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
    }
    os << "]";
    return os.str();
}

IntMat hstack(const IntMat& a, const IntMat& b) {
    if (a.cols() == 0 && a.rows() == 0) return b;
    if (b.cols() == 0 && b.rows() == 0) return a;
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
    IntMat r(a.rows(), a.cols() + b.cols());
    r.set_block(0, 0, a);
    r.set_block(0, a.cols(), b);
    return r;
}

IntMat vstack(const IntMat& a, const IntMat& b) {
    if (a.cols() == 0 && a.rows() == 0) return b;
    if (b.cols() == 0 && b.rows() == 0) return a;
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: col mismatch");
    IntMat r(a.rows() + b.rows(), a.cols());
    r.set_block(0, 0, a);
    r.set_block(a.rows(), 0, b);
    return r;
}

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// Quotient with minimal-magnitude remainder: |a - q*b| <= |b|/2. Keeps
// coefficient growth during elimination under control.
Int rounded_div(const Int& a, const Int& b) {
    Int q = a / b;
    Int r = a - q * b;
    if (2 * abs_int(r) > abs_int(b)) q += (r < 0) == (b < 0) ? 1 : -1;
    return q;
}

struct SnfWork {
    IntMat a, u, v;
    bool transforms;

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
        if (transforms)
            for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u(i, c), u(j, c));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
        if (transforms)
            for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v(r, i), v(r, j));
    }
    // row i -= q * row j
    void row_axpy(std::size_t i, std::size_t j, const Int& q) {
        if (q == 0) return;
        for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) -= q * a(j, c);
        if (transforms)
            for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) -= q * u(j, c);
    }
    // col i -= q * col j
    void col_axpy(std::size_t i, std::size_t j, const Int& q) {
        if (q == 0) return;
        for (std::size_t r = 0; r < a.rows(); ++r) a(r, i) -= q * a(r, j);
        if (transforms)
            for (std::size_t r = 0; r < v.rows(); ++r) v(r, i) -= q * v(r, j);
    }
    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
        if (transforms)
            for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) = -u(i, c);
    }
};

}  // namespace

SmithForm smith(const IntMat& a_in, bool transforms) {
    SnfWork w{a_in, IntMat::identity(a_in.rows()), IntMat::identity(a_in.cols()), transforms};
    const std::size_t m = a_in.rows(), n = a_in.cols();
    std::size_t t = 0;
    while (t < m && t < n) {
        bool trailing_zero = false;
        for (;;) {
            // re-select the smallest nonzero entry of the trailing submatrix
            // as the pivot on every sweep; the pivot magnitude at least
            // halves whenever a sweep leaves a remainder, which keeps both
            // the sweep count and the coefficient growth bounded
            std::size_t pi = t, pj = t;
            Int best = 0;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    const Int& x = w.a(i, j);
                    if (x == 0) continue;
                    Int ax = abs_int(x);
                    if (best == 0 || ax < best) {
                        best = ax;
                        pi = i;
                        pj = j;
                    }
                }
            if (best == 0) {
                trailing_zero = true;
                break;
            }
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (w.a(i, t) == 0) continue;
                w.row_axpy(i, t, rounded_div(w.a(i, t), w.a(t, t)));
                if (w.a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (w.a(t, j) == 0) continue;
                w.col_axpy(j, t, rounded_div(w.a(t, j), w.a(t, t)));
                if (w.a(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            // pivot must divide the rest of the submatrix for the
            // divisibility chain; fold in a bad row and retry
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (w.a(i, j) % w.a(t, t) != 0) {
                        w.row_axpy(t, i, Int(-1));
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (trailing_zero) break;
        if (w.a(t, t) < 0) w.negate_row(t);
        ++t;
    }
    SmithForm out;
    out.rank = t;
    out.d = std::move(w.a);
    if (transforms) {
        out.u = std::move(w.u);
        out.v = std::move(w.v);
    }
    out.diag.reserve(t);
    for (std::size_t i = 0; i < t; ++i) out.diag.push_back(out.d(i, i));
    return out;
}

std::size_t rank_of(const IntMat& a) { return smith(a, false).rank; }

std::vector<Int> invariant_factors(const IntMat& a) { return smith(a, false).diag; }

IntMat kernel_basis(const IntMat& a) {
    if (a.cols() == 0) return IntMat(0, 0);
    if (a.rows() == 0) return IntMat::identity(a.cols());
    SmithForm s = smith(a);
    std::vector<std::size_t> idx;
    for (std::size_t j = s.rank; j < a.cols(); ++j) idx.push_back(j);
    return s.v.cols_subset(idx);
}

std::optional<IntMat> solve_in_span(const IntMat& k, const IntMat& m) {
    if (k.rows() != m.rows()) throw std::invalid_argument("solve_in_span: row mismatch");
    if (m.cols() == 0) return IntMat(k.cols(), 0);
    SmithForm s = smith(k);
    IntMat um = s.u * m;
    IntMat y(k.cols(), m.cols());
    for (std::size_t i = 0; i < k.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (i < s.rank) {
                if (um(i, j) % s.diag[i] != 0) return std::nullopt;
                if (i < k.cols()) y(i, j) = um(i, j) / s.diag[i];
            } else if (um(i, j) != 0) {
                return std::nullopt;
            }
        }
    return s.v * y;
}

bool in_span(const IntMat& k, const IntMat& m) { return solve_in_span(k, m).has_value(); }

IntMat preimage_lattice(const IntMat& a, const IntMat& r) {
    if (r.cols() == 0) return kernel_basis(a);
    IntMat ker = kernel_basis(hstack(a, r));
    std::vector<std::size_t> idx(a.cols());
    for (std::size_t i = 0; i < a.cols(); ++i) idx[i] = i;
    return column_lattice_basis(ker.rows_subset(idx));
}

IntMat column_lattice_basis(const IntMat& m) {
    if (m.cols() == 0) return IntMat(m.rows(), 0);
    SmithForm s = smith(m);
    IntMat uinv = inverse_unimodular(s.u);
    IntMat b(m.rows(), s.rank);
    for (std::size_t j = 0; j < s.rank; ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) b(i, j) = uinv(i, j) * s.diag[j];
    return b;
}

IntMat inverse_unimodular(const IntMat& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse_unimodular: not square");
    auto x = solve_in_span(a, IntMat::identity(a.rows()));
    if (!x) throw std::invalid_argument("inverse_unimodular: matrix is not invertible over the integers");
    return *x;
}

}  // namespace posetcoho

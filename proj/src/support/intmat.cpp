#include "support/intmat.hpp"

#include <algorithm>
#include <cstdlib>

namespace morse {

long long checked_add(long long a, long long b) {
    __int128 s = (__int128)a + b;
    if (s > INT64_MAX || s < INT64_MIN)
        throw std::overflow_error("integer overflow in matrix arithmetic");
    return (long long)s;
}

long long checked_mul(long long a, long long b) {
    __int128 s = (__int128)a * b;
    if (s > INT64_MAX || s < INT64_MIN)
        throw std::overflow_error("integer overflow in matrix arithmetic");
    return (long long)s;
}

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

IntMat IntMat::mul(const IntMat& o) const {
    if (cols_ != o.rows_)
        throw std::invalid_argument("matrix dimension mismatch");
    IntMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            long long x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.cols_; ++j)
                r.at(i, j) = checked_add(r.at(i, j), checked_mul(x, o.at(k, j)));
        }
    return r;
}

std::vector<long long> IntMat::mul(const std::vector<long long>& v) const {
    if ((int)v.size() != cols_)
        throw std::invalid_argument("matrix/vector dimension mismatch");
    std::vector<long long> r(rows_, 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0)
                r[i] = checked_add(r[i], checked_mul(at(i, j), v[j]));
    return r;
}

bool IntMat::is_zero() const {
    for (long long x : a_)
        if (x != 0) return false;
    return true;
}

long long IntMat::det() const {
    if (rows_ != cols_)
        throw std::invalid_argument("determinant of non-square matrix");
    int n = rows_;
    if (n == 0) return 1;
    // Bareiss fraction-free elimination.
    std::vector<std::vector<__int128>> m(n, std::vector<__int128>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[i][j] = at(i, j);
    __int128 prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i][k] != 0) { p = i; break; }
            if (p < 0) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    __int128 d = m[n - 1][n - 1] * sign;
    if (d > INT64_MAX || d < INT64_MIN)
        throw std::overflow_error("determinant overflow");
    return (long long)d;
}

namespace {

struct Worker {
    IntMat a, u, uinv, v, vinv;

    // row r1 += f * row r2 on a, u; inverse transform maintained on uinv.
    void row_add(int r1, int r2, long long f) {
        for (int j = 0; j < a.cols(); ++j)
            a.at(r1, j) = checked_add(a.at(r1, j), checked_mul(f, a.at(r2, j)));
        for (int j = 0; j < u.cols(); ++j)
            u.at(r1, j) = checked_add(u.at(r1, j), checked_mul(f, u.at(r2, j)));
        for (int i = 0; i < uinv.rows(); ++i)
            uinv.at(i, r2) = checked_add(uinv.at(i, r2), checked_mul(-f, uinv.at(i, r1)));
    }

    void col_add(int c1, int c2, long long f) {
        for (int i = 0; i < a.rows(); ++i)
            a.at(i, c1) = checked_add(a.at(i, c1), checked_mul(f, a.at(i, c2)));
        for (int i = 0; i < v.rows(); ++i)
            v.at(i, c1) = checked_add(v.at(i, c1), checked_mul(f, v.at(i, c2)));
        for (int j = 0; j < vinv.cols(); ++j)
            vinv.at(c2, j) = checked_add(vinv.at(c2, j), checked_mul(-f, vinv.at(c1, j)));
    }

    void row_swap(int r1, int r2) {
        if (r1 == r2) return;
        for (int j = 0; j < a.cols(); ++j) std::swap(a.at(r1, j), a.at(r2, j));
        for (int j = 0; j < u.cols(); ++j) std::swap(u.at(r1, j), u.at(r2, j));
        for (int i = 0; i < uinv.rows(); ++i) std::swap(uinv.at(i, r1), uinv.at(i, r2));
    }

    void col_swap(int c1, int c2) {
        if (c1 == c2) return;
        for (int i = 0; i < a.rows(); ++i) std::swap(a.at(i, c1), a.at(i, c2));
        for (int i = 0; i < v.rows(); ++i) std::swap(v.at(i, c1), v.at(i, c2));
        for (int j = 0; j < vinv.cols(); ++j) std::swap(vinv.at(c1, j), vinv.at(c2, j));
    }

    void row_negate(int r) {
        for (int j = 0; j < a.cols(); ++j) a.at(r, j) = -a.at(r, j);
        for (int j = 0; j < u.cols(); ++j) u.at(r, j) = -u.at(r, j);
        for (int i = 0; i < uinv.rows(); ++i) uinv.at(i, r) = -uinv.at(i, r);
    }
};

} // namespace

SmithForm smith_normal_form(IntMat a0) {
    Worker w;
    int m = a0.rows(), n = a0.cols();
    w.a = std::move(a0);
    w.u = IntMat::identity(m);
    w.uinv = IntMat::identity(m);
    w.v = IntMat::identity(n);
    w.vinv = IntMat::identity(n);

    int t = 0;
    while (t < m && t < n) {
        // Pivot: smallest nonzero magnitude in the remaining block.
        int pr = -1, pc = -1;
        long long best = 0;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j) {
                long long x = std::llabs(w.a.at(i, j));
                if (x != 0 && (pr < 0 || x < best)) { best = x; pr = i; pc = j; }
            }
        if (pr < 0) break;
        w.row_swap(t, pr);
        w.col_swap(t, pc);
        if (w.a.at(t, t) < 0)
            w.row_negate(t);

        bool clean = true;
        for (int i = t + 1; i < m; ++i) {
            long long q = w.a.at(i, t) / w.a.at(t, t);
            if (q != 0) w.row_add(i, t, -q);
            if (w.a.at(i, t) != 0) clean = false;
        }
        for (int j = t + 1; j < n; ++j) {
            long long q = w.a.at(t, j) / w.a.at(t, t);
            if (q != 0) w.col_add(j, t, -q);
            if (w.a.at(t, j) != 0) clean = false;
        }
        if (!clean)
            continue; // remainders became new, smaller pivot candidates
        // Divisibility: fold in any entry the pivot does not divide.
        long long p = w.a.at(t, t);
        int bi = -1, bj = -1;
        for (int i = t + 1; i < m && bi < 0; ++i)
            for (int j = t + 1; j < n; ++j)
                if (w.a.at(i, j) % p != 0) { bi = i; bj = j; break; }
        if (bi >= 0) {
            w.row_add(t, bi, 1);
            continue;
        }
        ++t;
    }

    SmithForm out;
    out.rank = t;
    for (int i = 0; i < t; ++i)
        out.diag.push_back(w.a.at(i, i));
    out.d = std::move(w.a);
    out.u = std::move(w.u);
    out.u_inv = std::move(w.uinv);
    out.v = std::move(w.v);
    out.v_inv = std::move(w.vinv);
    return out;
}

} // namespace morse

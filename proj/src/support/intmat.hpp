#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace morse {

// Dense integer matrices over int64 with overflow-checked arithmetic, plus the
// Smith normal form with both transform matrices and their inverses. All
// homology in the project is exact; nothing here touches floating point.
class IntMat {
public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, 0) {}

    static IntMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    long long& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
    long long at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

    IntMat mul(const IntMat& o) const;
    std::vector<long long> mul(const std::vector<long long>& v) const;
    bool is_zero() const;
    bool operator==(const IntMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    // Exact determinant (square matrices) by fraction-free elimination.
    long long det() const;

private:
    int rows_, cols_;
    std::vector<long long> a_;
};

struct SmithForm {
    IntMat d;          // u * a * v == d, diagonal with divisibility chain
    IntMat u, u_inv;   // unimodular row transform and inverse
    IntMat v, v_inv;   // unimodular column transform and inverse
    int rank = 0;
    std::vector<long long> diag; // the first `rank` diagonal entries, positive
};

SmithForm smith_normal_form(IntMat a);

long long checked_add(long long a, long long b);
long long checked_mul(long long a, long long b);

} // namespace morse

#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace abflux {

using cplx = std::complex<double>;

// Dense square complex matrix, row-major.  All operator matrices in this
// project live in the fixed eigenbasis {phi_n(0)}; builders index rows by m
// and columns by n.
class CMatrix {
public:
    CMatrix() = default;
    explicit CMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {
        if (n <= 0) throw std::invalid_argument("CMatrix: dimension must be positive");
    }

    static CMatrix identity(int n) {
        CMatrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int dim() const { return n_; }
    std::size_t size() const { return a_.size(); }

    cplx& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const cplx& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    cplx* data() { return a_.data(); }
    const cplx* data() const { return a_.data(); }

    cplx* row(int i) { return a_.data() + static_cast<std::size_t>(i) * n_; }
    const cplx* row(int i) const { return a_.data() + static_cast<std::size_t>(i) * n_; }

    bool operator==(const CMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }

private:
    int n_ = 0;
    std::vector<cplx> a_;
};

}  // namespace abflux

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyw {

using Int = boost::multiprecision::cpp_int;

struct DimError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Dense matrix over Z with arbitrary-precision entries.  Row-major. */
class Mat {
  public:
    Mat() = default;
    Mat(int rows, int cols) : r_(rows), c_(cols), a_(size_t(rows) * cols) {}
    Mat(int rows, int cols, std::initializer_list<long> vals) : Mat(rows, cols) {
        assert((int)vals.size() == rows * cols);
        size_t i = 0;
        for (long v : vals) a_[i++] = v;
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static Mat zero(int rows, int cols) { return Mat(rows, cols); }
    static Mat scalar(int n, const Int& v) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = v;
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }

    Int& operator()(int i, int j) { return a_[size_t(i) * c_ + j]; }
    const Int& operator()(int i, int j) const { return a_[size_t(i) * c_ + j]; }

    bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& x : a_)
            if (x != 0) return false;
        return true;
    }

    Mat operator*(const Mat& o) const {
        if (c_ != o.r_) throw DimError("matrix product: dimension mismatch");
        Mat out(r_, o.c_);
        for (int i = 0; i < r_; ++i)
            for (int k = 0; k < c_; ++k) {
                const Int& x = (*this)(i, k);
                if (x == 0) continue;
                for (int j = 0; j < o.c_; ++j) out(i, j) += x * o(k, j);
            }
        return out;
    }
    Mat operator+(const Mat& o) const {
        if (r_ != o.r_ || c_ != o.c_) throw DimError("matrix sum: dimension mismatch");
        Mat out(r_, c_);
        for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
        return out;
    }
    Mat operator-(const Mat& o) const {
        if (r_ != o.r_ || c_ != o.c_) throw DimError("matrix difference: dimension mismatch");
        Mat out(r_, c_);
        for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - o.a_[i];
        return out;
    }
    Mat operator-() const {
        Mat out(r_, c_);
        for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = -a_[i];
        return out;
    }
    Mat scaled(const Int& v) const {
        Mat out(r_, c_);
        for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * v;
        return out;
    }

    Mat transposed() const {
        Mat out(c_, r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    /* Entrywise reduction into [0, q).  q = 0 means no reduction. */
    Mat reduced(const Int& q) const {
        if (q == 0) return *this;
        Mat out(r_, c_);
        for (size_t i = 0; i < a_.size(); ++i) {
            Int v = a_[i] % q;
            if (v < 0) v += q;
            out.a_[i] = v;
        }
        return out;
    }

    /* Block diag / stacking helpers. */
    static Mat hcat(const Mat& a, const Mat& b) {
        if (a.rows() != b.rows()) throw DimError("hcat: row mismatch");
        Mat out(a.rows(), a.cols() + b.cols());
        for (int i = 0; i < a.rows(); ++i) {
            for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
            for (int j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
        }
        return out;
    }
    static Mat vcat(const Mat& a, const Mat& b) {
        if (a.cols() != b.cols()) throw DimError("vcat: column mismatch");
        Mat out(a.rows() + b.rows(), a.cols());
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j) out(a.rows() + i, j) = b(i, j);
        return out;
    }
    static Mat block_diag(const Mat& a, const Mat& b) {
        Mat out(a.rows() + b.rows(), a.cols() + b.cols());
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
        return out;
    }

    /* Kronecker product, rows/cols ordered (i_a, i_b) lexicographically. */
    static Mat kronecker(const Mat& a, const Mat& b) {
        Mat out(a.rows() * b.rows(), a.cols() * b.cols());
        for (int ia = 0; ia < a.rows(); ++ia)
            for (int ja = 0; ja < a.cols(); ++ja) {
                if (a(ia, ja) == 0) continue;
                for (int ib = 0; ib < b.rows(); ++ib)
                    for (int jb = 0; jb < b.cols(); ++jb)
                        out(ia * b.rows() + ib, ja * b.cols() + jb) = a(ia, ja) * b(ib, jb);
            }
        return out;
    }

    Mat submatrix_cols(const std::vector<int>& idx) const {
        Mat out(r_, (int)idx.size());
        for (int i = 0; i < r_; ++i)
            for (size_t j = 0; j < idx.size(); ++j) out(i, (int)j) = (*this)(i, idx[j]);
        return out;
    }

    std::string str() const {
        std::string s = "[";
        for (int i = 0; i < r_; ++i) {
            s += i ? "; " : "";
            for (int j = 0; j < c_; ++j) s += (j ? " " : "") + (*this)(i, j).str();
        }
        return s + "]";
    }

  private:
    int r_ = 0, c_ = 0;
    std::vector<Int> a_;
};

}  // namespace cyw

#pragma once

#include "cyw/snf.hpp"

#include <map>
#include <stdexcept>

namespace cyw {

struct WindowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ComplexError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Bounded chain complex of free Z-modules (or free Z/q-modules when
 * modulus != 0).  Differential d_i : C_i -> C_{i-1}, stored for
 * lo < i <= hi.  `sharp` marks a complex that is genuinely zero outside
 * the window, as opposed to a truncated view of something larger; homology
 * at the window edges is only reported for sharp complexes. */
class ChainComplexZ {
  public:
    ChainComplexZ() = default;
    ChainComplexZ(int lo, int hi, bool sharp = true, Int modulus = 0)
        : lo_(lo), hi_(hi), sharp_(sharp), q_(std::move(modulus)) {
        if (hi_ < lo_) throw ComplexError("empty window");
        ranks_.assign(size_t(hi_ - lo_ + 1), 0);
    }

    int lo() const { return lo_; }
    int hi() const { return hi_; }
    bool sharp() const { return sharp_; }
    const Int& modulus() const { return q_; }

    int rank(int i) const { return (i < lo_ || i > hi_) ? 0 : ranks_[size_t(i - lo_)]; }
    void set_rank(int i, int r) { ranks_.at(size_t(i - lo_)) = r; }

    /* d_i as stored, or an appropriately sized zero matrix. */
    Mat diff(int i) const {
        auto it = d_.find(i);
        if (it != d_.end()) return it->second;
        return Mat::zero(rank(i - 1), rank(i));
    }
    void set_diff(int i, Mat m) {
        if (i <= lo_ || i > hi_) throw WindowError("set_diff outside window");
        if (m.rows() != rank(i - 1) || m.cols() != rank(i)) throw DimError("set_diff: dimension mismatch");
        d_[i] = std::move(m);
    }

    void validate() const {
        for (int i = lo_ + 2; i <= hi_; ++i)
            if (!(diff(i - 1) * diff(i)).reduced(q_).is_zero())
                throw ComplexError("d.d != 0 at degree " + std::to_string(i));
    }

    bool homology_reliable(int i) const {
        if (sharp_) return true;
        return i > lo_ && i < hi_;
    }

    FgAbGroup homology(int i) const {
        if (!homology_reliable(i))
            throw WindowError("homology outside reliable window at degree " + std::to_string(i));
        if (i < lo_ || i > hi_) return FgAbGroup{};
        return homology_raw(i).group.invariants();
    }

    Subquotient homology_raw(int i) const {
        Mat dout = (i > lo_) ? diff(i) : (sharp_ ? Mat::zero(0, rank(i)) : throw WindowError("homology_raw"));
        Mat din = (i < hi_) ? diff(i + 1) : (sharp_ ? Mat::zero(rank(i), 0) : throw WindowError("homology_raw"));
        return subquotient(dout, din, q_);
    }

    bool acyclic_in_reliable_window() const {
        int a = sharp_ ? lo_ : lo_ + 1;
        int b = sharp_ ? hi_ : hi_ - 1;
        for (int i = a; i <= b; ++i)
            if (!homology(i).is_zero()) return false;
        return true;
    }

    ChainComplexZ shifted(int k) const {  // (C[k])_i = C_{i-k}, d scaled by (-1)^k
        ChainComplexZ out(lo_ + k, hi_ + k, sharp_, q_);
        for (int i = lo_; i <= hi_; ++i) out.set_rank(i + k, rank(i));
        for (auto& [i, m] : d_) out.set_diff(i + k, (k % 2 == 0) ? m : -m);
        return out;
    }

    ChainComplexZ reduced(const Int& q) const {
        ChainComplexZ out(lo_, hi_, sharp_, q);
        for (int i = lo_; i <= hi_; ++i) out.set_rank(i, rank(i));
        for (auto& [i, m] : d_) out.set_diff(i, m.reduced(q));
        return out;
    }

    static ChainComplexZ direct_sum(const ChainComplexZ& a, const ChainComplexZ& b);
    static ChainComplexZ tensor(const ChainComplexZ& a, const ChainComplexZ& b);

    /* one generator in one degree */
    static ChainComplexZ point(int degree, int rank = 1, Int modulus = 0) {
        ChainComplexZ c(degree, degree, true, std::move(modulus));
        c.set_rank(degree, rank);
        return c;
    }

  private:
    int lo_ = 0, hi_ = 0;
    bool sharp_ = true;
    Int q_ = 0;
    std::vector<int> ranks_;
    std::map<int, Mat> d_;
};

/* Degreewise map of complexes.  Degrees missing from `parts` are zero. */
struct ChainMapZ {
    ChainComplexZ src, tgt;
    std::map<int, Mat> parts;

    Mat part(int i) const {
        auto it = parts.find(i);
        if (it != parts.end()) return it->second;
        return Mat::zero(tgt.rank(i), src.rank(i));
    }
    void set_part(int i, Mat m) {
        if (m.rows() != tgt.rank(i) || m.cols() != src.rank(i)) throw DimError("chain map part: dimension mismatch");
        parts[i] = std::move(m);
    }

    /* f d = d f on the overlap of both windows */
    void validate() const;

    bool is_chain_map() const {
        try {
            validate();
            return true;
        } catch (const ComplexError&) {
            return false;
        }
    }

    ChainComplexZ cone() const;
    bool is_quasi_iso() const { return cone().acyclic_in_reliable_window(); }

    /* induced map H_i(src) -> H_i(tgt) */
    PresentedMap induced(int i) const;

    static ChainMapZ identity(const ChainComplexZ& c) {
        ChainMapZ f{c, c, {}};
        for (int i = c.lo(); i <= c.hi(); ++i)
            if (c.rank(i)) f.parts[i] = Mat::identity(c.rank(i));
        return f;
    }
    static ChainMapZ compose(const ChainMapZ& g, const ChainMapZ& f);
};

}  // namespace cyw

#include "cyw/complex.hpp"

#include <algorithm>

namespace cyw {

namespace {
Int merge_modulus(const Int& a, const Int& b) {
    if (a == b) return a;
    if (a == 0) return b;
    if (b == 0) return a;
    throw ComplexError("incompatible moduli");
}
}  // namespace

ChainComplexZ ChainComplexZ::direct_sum(const ChainComplexZ& a, const ChainComplexZ& b) {
    ChainComplexZ out(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()), a.sharp() && b.sharp(),
                      merge_modulus(a.modulus(), b.modulus()));
    for (int i = out.lo(); i <= out.hi(); ++i) out.set_rank(i, a.rank(i) + b.rank(i));
    for (int i = out.lo() + 1; i <= out.hi(); ++i) {
        Mat m = Mat::block_diag(a.diff(i), b.diff(i));
        if (!m.is_zero()) out.set_diff(i, m);
    }
    return out;
}

ChainComplexZ ChainComplexZ::tensor(const ChainComplexZ& a, const ChainComplexZ& b) {
    ChainComplexZ out(a.lo() + b.lo(), a.hi() + b.hi(), a.sharp() && b.sharp(),
                      merge_modulus(a.modulus(), b.modulus()));
    // blocks of (a (x) b)_i indexed by the a-degree, ascending
    auto offsets = [&](int i, std::vector<int>& degs, std::vector<int>& off) {
        degs.clear();
        off.clear();
        int o = 0;
        for (int p = a.lo(); p <= a.hi(); ++p) {
            int q = i - p;
            int r = a.rank(p) * b.rank(q);
            if (r > 0) {
                degs.push_back(p);
                off.push_back(o);
                o += r;
            }
        }
        off.push_back(o);
    };
    for (int i = out.lo(); i <= out.hi(); ++i) {
        std::vector<int> degs, off;
        offsets(i, degs, off);
        out.set_rank(i, off.back());
    }
    for (int i = out.lo() + 1; i <= out.hi(); ++i) {
        std::vector<int> sd, so, td, to;
        offsets(i, sd, so);
        offsets(i - 1, td, to);
        if (so.back() == 0 || to.back() == 0) continue;
        Mat m(to.back(), so.back());
        auto put = [&](int tdeg, int sidx, const Mat& blk) {
            auto it = std::find(td.begin(), td.end(), tdeg);
            if (it == td.end()) return;
            int ti = int(it - td.begin());
            for (int r = 0; r < blk.rows(); ++r)
                for (int c = 0; c < blk.cols(); ++c) m(to[ti] + r, so[sidx] + c) = blk(r, c);
        };
        for (size_t s = 0; s < sd.size(); ++s) {
            int p = sd[s], q = i - p;
            // d_a (x) id : block (p,q) -> (p-1,q)
            if (p > a.lo() && b.rank(q) > 0) put(p - 1, (int)s, Mat::kronecker(a.diff(p), Mat::identity(b.rank(q))));
            // (-1)^p id (x) d_b : block (p,q) -> (p,q-1)
            if (q > b.lo() && a.rank(p) > 0) {
                Mat blk = Mat::kronecker(Mat::identity(a.rank(p)), b.diff(q));
                if (p % 2 != 0) blk = -blk;
                put(p, (int)s, blk);
            }
        }
        if (!m.is_zero()) out.set_diff(i, m);
    }
    out.validate();
    return out;
}

void ChainMapZ::validate() const {
    if (src.modulus() != tgt.modulus() && !(src.modulus() == 0 || tgt.modulus() == 0))
        throw ComplexError("chain map: incompatible moduli");
    Int q = tgt.modulus() != 0 ? tgt.modulus() : src.modulus();
    int a = std::max(src.lo(), tgt.lo()) + 1;
    int b = std::min(src.hi(), tgt.hi());
    for (int i = a; i <= b; ++i) {
        Mat lhs = tgt.diff(i) * part(i);
        Mat rhs = part(i - 1) * src.diff(i);
        if (!(lhs - rhs).reduced(q).is_zero()) throw ComplexError("not a chain map at degree " + std::to_string(i));
    }
}

ChainComplexZ ChainMapZ::cone() const {
    validate();
    Int q = merge_modulus(src.modulus(), tgt.modulus());
    int lo = std::min(src.lo() + 1, tgt.lo());
    int hi = std::max(src.hi() + 1, tgt.hi());
    ChainComplexZ out(lo, hi, src.sharp() && tgt.sharp(), q);
    for (int i = lo; i <= hi; ++i) out.set_rank(i, src.rank(i - 1) + tgt.rank(i));
    for (int i = lo + 1; i <= hi; ++i) {
        int sc = src.rank(i - 1), tc = tgt.rank(i);
        int sr = src.rank(i - 2), tr = tgt.rank(i - 1);
        Mat m(sr + tr, sc + tc);
        Mat dc = src.diff(i - 1), dt = tgt.diff(i), f = part(i - 1);
        for (int r = 0; r < sr; ++r)
            for (int c = 0; c < sc; ++c) m(r, c) = -dc(r, c);
        for (int r = 0; r < tr; ++r)
            for (int c = 0; c < sc; ++c) m(sr + r, c) = -f(r, c);
        for (int r = 0; r < tr; ++r)
            for (int c = 0; c < tc; ++c) m(sr + r, sc + c) = dt(r, c);
        if (!m.is_zero()) out.set_diff(i, m);
    }
    out.validate();
    return out;
}

PresentedMap ChainMapZ::induced(int i) const {
    Subquotient s = src.homology_raw(i);
    Subquotient t = tgt.homology_raw(i);
    PresentedMap out;
    out.src = s.group;
    out.tgt = t.group;
    if (s.cycle_basis.cols() == 0 || t.cycle_basis.cols() == 0) {
        out.map = Mat::zero(t.group.gens, s.group.gens);
        return out;
    }
    Mat image = part(i) * s.cycle_basis;
    Int q = tgt.modulus();
    std::optional<Mat> y;
    if (q == 0) {
        y = solve(t.cycle_basis, image);
    } else {
        // solve t.cycles * y = image mod q, i.e. [t.cycles | qI] * (y;z) = image
        Mat ext = Mat::hcat(t.cycle_basis, Mat::scalar(t.cycle_basis.rows(), q));
        auto full = solve(ext, image);
        if (full) {
            Mat yy(t.cycle_basis.cols(), image.cols());
            for (int r = 0; r < yy.rows(); ++r)
                for (int c = 0; c < yy.cols(); ++c) yy(r, c) = (*full)(r, c);
            y = yy;
        }
    }
    if (!y) throw ComplexError("induced: image not contained in target cycles");
    out.map = *y;
    if (!out.well_defined()) throw ComplexError("induced: map not well defined on homology");
    return out;
}

ChainMapZ ChainMapZ::compose(const ChainMapZ& g, const ChainMapZ& f) {
    ChainMapZ out{f.src, g.tgt, {}};
    int a = std::max(f.src.lo(), g.tgt.lo());
    int b = std::min(f.src.hi(), g.tgt.hi());
    for (int i = a; i <= b; ++i) {
        Mat m = g.part(i) * f.part(i);
        if (!m.is_zero()) out.parts[i] = std::move(m);
    }
    return out;
}

}  // namespace cyw

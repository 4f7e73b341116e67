#include "cyw/snf.hpp"

#include <algorithm>
#include <stdexcept>

namespace cyw {

namespace {

void swap_rows(Mat& m, int i, int j) {
    if (i == j) return;
    for (int c = 0; c < m.cols(); ++c) std::swap(m(i, c), m(j, c));
}
void swap_cols(Mat& m, int i, int j) {
    if (i == j) return;
    for (int r = 0; r < m.rows(); ++r) std::swap(m(r, i), m(r, j));
}
void add_row(Mat& m, int dst, int src, const Int& f) {
    if (f == 0) return;
    for (int c = 0; c < m.cols(); ++c) m(dst, c) += f * m(src, c);
}
void add_col(Mat& m, int dst, int src, const Int& f) {
    if (f == 0) return;
    for (int r = 0; r < m.rows(); ++r) m(r, dst) += f * m(r, src);
}
void negate_row(Mat& m, int i) {
    for (int c = 0; c < m.cols(); ++c) m(i, c) = -m(i, c);
}

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

/* least nonzero |entry| in the trailing block starting at s */
bool find_pivot(const Mat& d, int s, int& pi, int& pj) {
    bool found = false;
    Int best = 0;
    for (int i = s; i < d.rows(); ++i)
        for (int j = s; j < d.cols(); ++j) {
            if (d(i, j) == 0) continue;
            Int a = abs_int(d(i, j));
            if (!found || a < best) {
                best = a;
                pi = i;
                pj = j;
                found = true;
            }
        }
    return found;
}

}  // namespace

Int determinant(const Mat& a) {
    if (a.rows() != a.cols()) throw DimError("determinant: not square");
    int n = a.rows();
    if (n == 0) return 1;
    Mat m = a;
    // Bareiss fraction-free elimination
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (m(i, k) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            swap_rows(m, k, piv);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : Int(-m(n - 1, n - 1));
}

Snf smith_normal_form(const Mat& a) {
    Snf out;
    int m = a.rows(), n = a.cols();
    out.u = Mat::identity(m);
    out.v = Mat::identity(n);
    out.d = a;
    Mat& d = out.d;
    Mat& u = out.u;
    Mat& v = out.v;

    int k = std::min(m, n);
    for (int s = 0; s < k; ++s) {
        int pi, pj;
        if (!find_pivot(d, s, pi, pj)) break;
        swap_rows(d, s, pi);
        swap_rows(u, s, pi);
        swap_cols(d, s, pj);
        swap_cols(v, s, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = s + 1; i < m; ++i) {
                if (d(i, s) == 0) continue;
                Int q = d(i, s) / d(s, s);
                add_row(d, i, s, -q);
                add_row(u, i, s, -q);
                if (d(i, s) != 0) {
                    // remainder smaller than pivot: promote it
                    swap_rows(d, s, i);
                    swap_rows(u, s, i);
                    clean = false;
                }
            }
            for (int j = s + 1; j < n; ++j) {
                if (d(s, j) == 0) continue;
                Int q = d(s, j) / d(s, s);
                add_col(d, j, s, -q);
                add_col(v, j, s, -q);
                if (d(s, j) != 0) {
                    swap_cols(d, s, j);
                    swap_cols(v, s, j);
                    clean = false;
                }
            }
        }
        // enforce divisibility of the trailing block by the pivot
        for (int i = s + 1; i < m && clean; ++i)
            for (int j = s + 1; j < n; ++j)
                if (d(i, j) % d(s, s) != 0) {
                    add_row(d, s, i, 1);
                    add_row(u, s, i, 1);
                    clean = false;
                    break;
                }
        if (!clean) {
            --s;  // redo this step with the enlarged row
            continue;
        }
        if (d(s, s) < 0) {
            negate_row(d, s);
            negate_row(u, s);
        }
    }

    for (int s = 0; s < k; ++s)
        if (d(s, s) != 0) {
            out.divisors.push_back(d(s, s));
            out.rank = s + 1;
        }

    // postconditions, every call
    if (u * a * v != d) throw std::logic_error("snf: U*A*V != D");
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && d(i, j) != 0) throw std::logic_error("snf: D not diagonal");
    for (size_t i = 0; i + 1 < out.divisors.size(); ++i)
        if (out.divisors[i + 1] % out.divisors[i] != 0) throw std::logic_error("snf: divisibility chain broken");
    Int du = determinant(u), dv = determinant(v);
    if (du * du != 1 || dv * dv != 1) throw std::logic_error("snf: transform not unimodular");
    return out;
}

Mat kernel_basis(const Mat& a) {
    if (a.cols() == 0) return Mat(0, 0);
    if (a.rows() == 0) return Mat::identity(a.cols());
    Snf s = smith_normal_form(a);
    std::vector<int> idx;
    for (int j = s.rank; j < a.cols(); ++j) idx.push_back(j);
    return s.v.submatrix_cols(idx);
}

std::optional<Mat> solve(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) throw DimError("solve: row mismatch");
    Snf s = smith_normal_form(a);
    Mat c = s.u * b;  // D y = c, x = V y
    Mat y(a.cols(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            if (i < s.rank) {
                if (c(i, j) % s.d(i, i) != 0) return std::nullopt;
                if (i < a.cols()) y(i, j) = c(i, j) / s.d(i, i);
            } else if (c(i, j) != 0) {
                return std::nullopt;
            }
        }
    return s.v * y;
}

std::string FgAbGroup::str() const {
    if (is_zero()) return "0";
    std::string s;
    if (rank > 0) {
        s = "Z";
        if (rank > 1) s += "^" + std::to_string(rank);
    }
    for (const auto& d : torsion) s += (s.empty() ? "" : " + ") + std::string("Z/") + d.str();
    return s;
}

FgAbGroup Presentation::invariants() const {
    if (rels.cols() == 0) return FgAbGroup{gens, {}};
    Snf s = smith_normal_form(rels);
    FgAbGroup g;
    g.rank = gens - s.rank;
    for (const auto& d : s.divisors)
        if (d > 1) g.torsion.push_back(d);
    return g;
}

FgAbGroup cokernel(const Mat& a) { return Presentation(a.rows(), a).invariants(); }

bool PresentedMap::well_defined() const {
    if (map.rows() != tgt.gens || map.cols() != src.gens) return false;
    if (src.rels.cols() == 0) return true;
    Mat image = map * src.rels;
    if (tgt.rels.cols() == 0) return image.is_zero();
    return solve(tgt.rels, image).has_value();
}

bool PresentedMap::is_surjective() const {
    // coker of [map | tgt.rels] must vanish
    Mat combined = Mat::hcat(map, tgt.rels);
    return cokernel(combined).is_zero();
}

bool PresentedMap::is_injective() const {
    // kernel lattice {x : map x in span(tgt.rels)} must lie in span(src.rels)
    Mat ext = tgt.rels.cols() ? Mat::hcat(map, tgt.rels) : map;
    Mat k = kernel_basis(ext);
    std::vector<int> first;
    for (int j = 0; j < k.cols(); ++j) first.push_back(j);
    Mat projected(src.gens, k.cols());
    for (int i = 0; i < src.gens; ++i)
        for (int j = 0; j < k.cols(); ++j) projected(i, j) = k(i, j);
    if (projected.is_zero()) return true;
    if (src.rels.cols() == 0) return projected.is_zero();
    return solve(src.rels, projected).has_value();
}

Subquotient subquotient(const Mat& d_out, const Mat& d_in, const Int& q) {
    int n = d_out.cols();
    if (d_in.rows() != n) throw DimError("subquotient: ambient mismatch");
    Mat cycles;
    if (q == 0) {
        cycles = kernel_basis(d_out);
    } else {
        // x with d_out x = 0 mod q: project ker [d_out | qI] to the x-block.
        // The projection is injective on that kernel, so the projected basis
        // is a basis of the full-rank lattice {x : d_out x = 0 mod q}.
        Mat ext = Mat::hcat(d_out, Mat::scalar(d_out.rows(), q));
        Mat k = kernel_basis(ext);
        Mat proj(n, k.cols());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < k.cols(); ++j) proj(i, j) = k(i, j);
        cycles = proj;
    }

    // relations: express boundaries (and q * ambient basis) in cycle coords
    Mat rel_src = d_in;
    if (q != 0) rel_src = Mat::hcat(d_in, Mat::scalar(n, q));
    Mat rels(cycles.cols(), 0);
    if (rel_src.cols() > 0 && cycles.cols() > 0) {
        auto x = solve(cycles, rel_src);
        if (!x) throw std::logic_error("subquotient: boundaries not inside cycles");
        rels = *x;
    } else if (cycles.cols() == 0) {
        rels = Mat(0, 0);
    }
    return Subquotient{cycles, Presentation((int)cycles.cols(), rels)};
}

}  // namespace cyw

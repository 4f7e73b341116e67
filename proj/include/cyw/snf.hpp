#pragma once

#include "cyw/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cyw {

/* Smith decomposition U*A*V = D, D diagonal with d1 | d2 | ..., U and V
 * unimodular.  Postconditions are checked on every call. */
struct Snf {
    Mat u, d, v;
    int rank = 0;                   // number of nonzero diagonal entries
    std::vector<Int> divisors;      // the nonzero diagonal, divisibility chain
};

Snf smith_normal_form(const Mat& a);

/* det via fraction-free elimination; used to certify unimodularity. */
Int determinant(const Mat& a);

/* Basis of the integer kernel {x : A x = 0}, returned as columns. */
Mat kernel_basis(const Mat& a);

/* Solve A x = b over Z for each column of b; nullopt if no integral solution. */
std::optional<Mat> solve(const Mat& a, const Mat& b);

/* Finitely generated abelian group: rank + invariant factors (each >= 2,
 * ascending divisibility chain). */
struct FgAbGroup {
    int rank = 0;
    std::vector<Int> torsion;

    bool operator==(const FgAbGroup& o) const { return rank == o.rank && torsion == o.torsion; }
    bool operator!=(const FgAbGroup& o) const { return !(*this == o); }
    bool is_zero() const { return rank == 0 && torsion.empty(); }

    /* canonical rendering: "Z^r + Z/d1 + ..." (0 for trivial) */
    std::string str() const;
};

/* A finitely generated abelian group presented as Z^gens / column span of
 * rels.  rels may have any number of columns (including zero). */
struct Presentation {
    int gens = 0;
    Mat rels;  // gens x k

    Presentation() = default;
    Presentation(int g, Mat r) : gens(g), rels(std::move(r)) {}
    static Presentation free_group(int g) { return Presentation(g, Mat(g, 0)); }

    FgAbGroup invariants() const;
};

/* cokernel of a : Z^m -> Z^n, i.e. Z^n / im(a). */
FgAbGroup cokernel(const Mat& a);

/* A homomorphism between presented groups, given on generators.  Checks that
 * relations map into relations. */
struct PresentedMap {
    Presentation src, tgt;
    Mat map;  // tgt.gens x src.gens

    bool well_defined() const;
    bool is_injective() const;
    bool is_surjective() const;
    bool is_isomorphism() const { return is_injective() && is_surjective(); }
};

/* Subquotient machinery: given matrices d_out (kills cycles) and d_in
 * (boundaries), both on the same ambient Z^n, optionally modulo q >= 0,
 * returns ker(d_out)/im(d_in) over Z/q.  Used by chain complex homology. */
struct Subquotient {
    Mat cycle_basis;      // columns: lattice basis of the cycle group inside Z^n
    Presentation group;   // presentation of the subquotient in cycle coordinates
};

Subquotient subquotient(const Mat& d_out, const Mat& d_in, const Int& q);

}  // namespace cyw

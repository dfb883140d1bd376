#pragma once

#include <utility>
#include <vector>

#include "betti/numeric.hpp"

namespace betti {

// A genus-g curve embedded by a degree-d divisor; r_d = d - g. The default
// guard d >= 2g+3 keeps the closed-form entry regime nonempty; warn_only
// callers may relax it at their own risk.
struct CurveEmbedding {
    int genus = 0;
    int degree = 0;

    CurveEmbedding(int genus, int degree, bool enforce_degree_guard = true);

    int r() const { return degree - genus; }
    // Largest p for which the closed form below is valid.
    int strand_limit() const { return r() - genus; }
};

// k_{p,1}(X; L_d) = C(d-g,p) * (-pd/(d-g) + (d+1-g) - (d+1-g)/(p+1)),
// exact and valid for 1 <= p <= r_d - g (an integer there).
Rat curve_linear_syzygies(const CurveEmbedding& embedding, int p);

// Sub-quotient bound C(d+1-g, p) * (d+1-g), total in p via the C(a,b)=0
// convention.
Rat curve_linear_syzygy_bound(const CurveEmbedding& embedding, int p);

// 2^{-r_d} sqrt(2 pi / r_d) k_{p,1}, evaluated in log space.
double curve_normalized_syzygies(const CurveEmbedding& embedding, int p);

// Full (p, k_{p,1}) profile over the valid regime.
std::vector<std::pair<int, Rat>> curve_linear_strand_profile(const CurveEmbedding& embedding);

// Independent genus-0 oracle: dimension of the middle homology of
//   Wedge^{p+1} V -> Wedge^p V (x) S_d -> Wedge^{p-1} V (x) S_2d
// for V = S_d the binary forms of degree d, with the standard Koszul
// differentials. Exact rational ranks, block-decomposed by total monomial
// weight. Requires d <= 8, 1 <= p <= d-1.
long long koszul_linear_strand_dim(int d, int p);

}  // namespace betti

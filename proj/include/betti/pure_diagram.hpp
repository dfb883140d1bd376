#pragma once

#include <vector>

#include "betti/betti_table.hpp"
#include "betti/index_set.hpp"
#include "betti/numeric.hpp"

namespace betti {

// Pure diagram: one nonzero entry per column, in row q = d_p - p, normalized
// to formal multiplicity 1.
struct PureDiagram {
    IndexSet index_set;
    DegreeSequence degree_sequence;
    BettiTable table;  // exact mode
};

// Entry k_{p,q} from the index-product form
//   (r-n)! * prod_{a<q} (p+q-i_a)_+ * prod_{a>=q} (i_a-p-q)_+ / ((p+q-1)! (r-p-q)!)
// where (m)_+ = max(m,0) zeroes the entry as soon as any factor is <= 0.
// This is the cheap form used to build diagrams.
Rat pure_entry_from_index_products(const IndexSet& index_set, int p, int q);

// Entry k_{p,d_p-p} from the reciprocal degree-gap form
//   (r-n)! * prod_{l != p} 1/|d_l - d_p|.
// Independent route kept for cross-validation; returns the unique nonzero
// entry value of column p.
Rat pure_entry_from_degree_gaps(int r, int n, const DegreeSequence& degrees, int p);

PureDiagram pure_diagram(int r, int n, const IndexSet& index_set);
PureDiagram pure_diagram(int r, int n, const std::vector<int>& index_elements);

// Elementary symmetric sum e_b(1, 2, ..., a): the sum over all b-element
// subsets J of [a] of the product of the members of J. O(a*b) exact DP.
Int elementary_symmetric_sum(int a, int b);

// e_b(1^2, 2^2, ..., a^2); used for exact variance computations.
Int elementary_symmetric_square_sum(int a, int b);

// Hilbert function of the (formal) module behind an exact table over a
// polynomial ring in m = r-n variables:
//   HF(j) = sum_{p,q} (-1)^p k_{p,q} C(m-1+j-(p+q), m-1),
// returned for j = 1 .. last nonzero degree (at most j = r).
std::vector<Rat> hilbert_function(const BettiTable& table);

// Total length sum_j HF(j). Signals a parameter error when HF fails to vanish
// for j in (r, r+m]; past j = r the alternating sum is a polynomial of degree
// m-1 in j, so vanishing at those m points certifies identical vanishing.
Rat multiplicity(const BettiTable& table);

// Finite-length (maximal codimension) conditions:
//   sum_{p,q} (-1)^p k_{p,q} (p+q)^j = 0  for j = 0 .. r-n-1.
bool herzog_kuhl_check(const BettiTable& table);

}  // namespace betti

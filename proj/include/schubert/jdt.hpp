#pragma once

#include <set>
#include <utility>
#include <vector>

#include "schubert/bpd.hpp"
#include "schubert/tableau.hpp"

namespace schubert {

// A skew tableau nu/mu: row i has inner[i] empty cells, then the entries in
// rows.rows[i].  inner may carry trailing zeros to match the row count.
struct SkewTableau {
    std::vector<int> inner;
    Tableau rows;

    int n_rows() const { return int(rows.rows.size()); }
    int inner_at(int r) const { return r < int(inner.size()) ? inner[r] : 0; }
    int outer_at(int r) const { return inner_at(r) + int(rows.rows[r].size()); }
    int n_cells() const;
};

// Shape sanity plus weakly increasing rows / strictly increasing columns.
bool is_semistandard_skew(const SkewTableau& t);
// Shape sanity plus entries exactly 1..N, rows/columns strictly increasing.
bool is_standard_skew(const SkewTableau& t);

// Rows whose inner corner cell can start a slide (0-based).
std::vector<int> inner_corner_rows(const SkewTableau& t);
// One jeu de taquin slide starting from the inner corner on corner_row.
SkewTableau jdt_slide(const SkewTableau& t, int corner_row);
// Full rectification; slides start at the SE-most inner corner (bottom-most
// row, which for partitions is also the rightmost available corner).  The
// result is independent of this choice.
Tableau jdt_rectify(const SkewTableau& t);

// Rows filled left to right with 1..l1, l1+1.., ...
Tableau superstandard(const std::vector<int>& lambda);

// Littlewood-Richardson coefficient: the number of standard skew tableaux
// of shape nu/mu whose rectification is superstandard(lambda).
coeff_t lr_coefficient(const std::vector<int>& lambda, const std::vector<int>& mu,
                       const std::vector<int>& nu);

// w has at most one descent; when present it is reported through k.
bool is_grassmannian(const Perm& w, int* k = nullptr);
// lambda(w)_j = w(k+1-j) - (k+1-j) for the k-grassmannian w.
std::vector<int> grassmannian_shape(const Perm& w);
// The k-grassmannian permutation with the given shape (window [1, k+lambda_1]).
Perm grassmannian_perm(const std::vector<int>& lambda, int k);

// Blank-diagonal dictionary: a blank on diagonal c-r maps to the next free
// lambda-cell on the same diagonal, labeled by the blank's row index.
Tableau bpd_to_ssyt(const Bpd& d);
// Inverse lookup over BPD(w) (memoized per w).
Bpd ssyt_to_bpd(const Tableau& t, int k, const Perm& w);

// A tableau with marked cells; the completion of a skew filling marks the
// inner region, row i holding i - l (l = number of inner rows).
struct MarkedTableau {
    Tableau tableau;
    std::set<std::pair<int, int>> marked; // 0-based cells
};

MarkedTableau marked_from_skew(const SkewTableau& t);

// 'i' = increment of the active value, 'a' = cascade into the row below,
// 'b' = move to the rightmost equal entry in the row, 'd' = deletion at the
// SE border; state is the tableau right after the move.
struct MarkedTableauEvent {
    char kind;
    MarkedTableau state;
};

// The marked simulation of jeu de taquin: repeatedly activate the SE-most
// mark, increment it, cascade or shift right while the tableau is invalid,
// and delete it when it reaches k at the SE border -- the bottom cell of
// its column is an outer corner, and the entry there (k, when the mark is
// not itself the bottom) slides up as the mark leaves.  Deletion is tested
// after every cascade or shift without taking another increment.
Tableau marked_tableau_rectify(const MarkedTableau& t, int k,
                               std::vector<MarkedTableauEvent>* trace = nullptr);

} // namespace schubert

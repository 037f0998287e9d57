#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "schubert/bpd.hpp"
#include "schubert/eg.hpp"

namespace schubert {

// Des(pi) within [k, n-1] and Des(rho) within [1, k].
bool has_separated_descents(const Perm& pi, const Perm& rho, int k);

// The glued permutation on window [1-k, 2n-k] whose length is
// l(pi) + l(rho) + k(n-k).  n = 0 picks the smallest window holding both
// factors (and k+1).
Perm star_perm(const Perm& pi, const Perm& rho, int k, int n = 0);

// Assemble a dream of star_perm from d in BPD(pi), e in BPD(rho); both on
// window [1, n].  The result is in square form: its non-positive rows carry
// the fixed hook pattern and its blanks are the disjoint union of the blanks
// of d, of e, and of a k x (n-k) rectangle at the NW corner.
Bpd star_bpd(const Bpd& d, const Bpd& e, int k);

// Window is [1-k, 2n-k], the dream is valid, and rows <= 0 match the fixed
// hook pattern exactly.
bool is_square_form(const Bpd& f, int k, int n);

// Inverse of star_bpd: recover (d, e).  Throws invalid_input when f is not
// in square form or its permutation does not split.
std::pair<Bpd, Bpd> split_square(const Bpd& f, int k, int n);

// A dream with some Blank tiles marked.  pending_word collects the letters
// emitted by rectification steps; last_footprints records the trail of the
// most recent insertion (cells that became ElbowNW tiles, then the final
// resting cell, in walk order).
struct MarkedBpd {
    Bpd bpd;
    std::set<std::pair<int, int>> marks;
    Word pending_word;
    std::vector<std::pair<int, int>> last_footprints;
};

// Mark the cells of lambda hanging at the NW corner of the window; all of
// them must be Blank.
MarkedBpd with_marks(const Bpd& f, const std::vector<int>& lambda);

// Do the marks form a partition anchored at the NW corner?  Reports the
// shape when asked.
bool marks_form_partition(const MarkedBpd& m, std::vector<int>* shape = nullptr);

// One observable rectification move: 's' = slide east, 'c' = column move,
// 'r' = removal; state is the marked dream right after the move.
struct RectifyEvent {
    char kind;
    MarkedBpd state;
};

// Drive each mark SE until it cancels a crossing, emitting one letter per
// mark.  order, when given, is a standard tableau on the marks' shape
// (cells relative to the NW corner); marks are activated in decreasing
// entry order.  Default activates the SE-most mark (bottom row, then
// rightmost).  Returns the final dream and the emitted word; the input
// permutation equals product(word) * final permutation.
std::pair<Bpd, Word> rectify(const MarkedBpd& m, const Tableau* order = nullptr,
                             std::vector<RectifyEvent>* trace = nullptr);

// Formal inverse of one rectification iteration: splice pipe `letter` over
// pipe `letter+1` and walk the freed mark NW until no inverse move applies.
// Requires letter to lengthen the permutation from the left (invalid_input
// otherwise); throws grow_window_needed when the walk needs pipes west of
// the window.
MarkedBpd insert_letter(const MarkedBpd& m, int letter);

// Insert w right to left, growing the window NW as needed so the marks
// always form a partition.  Returns the marked dream and the recording
// tableau (cell of the t-th insertion holds t).
std::pair<MarkedBpd, Tableau> insert_word(const Bpd& f, const Word& w);

// Coefficient of S_sigma in S_pi * S_rho for descent-separated pi, rho.
coeff_t structure_constant(const Perm& pi, const Perm& rho, int k, const Perm& sigma);

// Full expansion of S_pi * S_rho in the Schubert basis.  jobs > 1 spreads
// the candidate prefixes over that many threads.
std::map<Perm, coeff_t> expansion(const Perm& pi, const Perm& rho, int k, int jobs = 1);

// Multi-factor product data: perms = (pi_0, ..., pi_m) with
// Des(pi_a) within [k_a, k_{a+1}] (k_0 = 0, k_{m+1} = n), cuts = k_1 < ... < k_m.
struct StarProblem {
    std::vector<Perm> perms;
    std::vector<int> cuts;
    int n = 0;
};

// Throws invalid_input unless the problem is well formed.
void validate_star_problem(const StarProblem& sp);

// Glued permutation on window [1 - sum(cuts), (m+1) n - sum(cuts)].
Perm multi_star_perm(const StarProblem& sp);

// Shape of the NW Blank region shared by every multi-star dream; computed
// from the star of Rothe dreams of identities and checked against the
// length identity.
std::vector<int> multi_lambda(const std::vector<int>& cuts, int n);

// Assemble a dream of multi_star_perm from ds[a] in BPD(perms[a]), each on
// window [1, n].
Bpd multi_star_bpd(const StarProblem& sp, const std::vector<Bpd>& ds);

// Expansion of S_{pi_0} * ... * S_{pi_m} in the Schubert basis.
std::map<Perm, coeff_t> multi_expansion(const StarProblem& sp, int jobs = 1);
coeff_t multi_structure_constant(const StarProblem& sp, const Perm& sigma);

} // namespace schubert

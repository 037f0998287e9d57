#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

#include "schubert/common.hpp"

namespace schubert {

// A permutation of the integer interval [window_start, window_start + n - 1],
// implicitly extended by the identity outside the window.  Windows may start
// at non-positive integers; the separated-descent construction lives on
// windows like [1-k, 2n-k].
class Perm {
  public:
    // Identity on [1, 1].
    Perm();
    // values[i] = image of (window_start + i).  Must be a bijection of the
    // window onto itself; throws invalid_input otherwise.
    Perm(int window_start, std::vector<int> values);

    // One-line word starting at 1, e.g. {1,3,2}.
    static Perm one_line(std::vector<int> values);
    static Perm identity(int window_start, int size);
    // Permutation with the given Lehmer code (code may carry trailing zeros);
    // window starts at 1.  code[i] = #{j > i : w(i) > w(j)}, 0-indexed here.
    static Perm from_lehmer(const std::vector<int>& code);

    int window_start() const { return start_; }
    int window_end() const { return start_ + int(vals_.size()) - 1; }
    int size() const { return int(vals_.size()); }
    const std::vector<int>& values() const { return vals_; }

    // Image of any integer (identity outside the window).
    int operator()(int i) const;
    int inverse_of(int v) const;

    Perm inverse() const;
    // Composition acting on values: (a*b)(i) = a(b(i)).
    friend Perm operator*(const Perm& a, const Perm& b);
    bool operator==(const Perm& o) const;

    // Number of inversions.
    long long length() const;
    // Descent positions i (window coordinates, i and i+1 both meaningful)
    // with w(i) > w(i+1).
    std::vector<int> descents() const;
    bool is_identity() const;

    // Lehmer code relative to the window: code[i] = #{j>i in window : ...}.
    // For windows starting at 1 this is the usual code.
    std::vector<int> lehmer() const;

    // Re-express on a larger window [new_start, new_end] containing the
    // current one (identity on the added points).
    Perm embedded(int new_start, int new_end) const;
    // Smallest window [first moved, last moved] still containing all
    // non-fixed points; identity trims to [1,1] with window_start 1.
    Perm trimmed() const;
    // Trim, then translate the window to start at 1.
    Perm normalized_positive() const;

    // Multiply on the right by the adjacent transposition swapping positions
    // i, i+1 (window coordinates): w * s_i.
    Perm times_s_right(int i) const;
    // Multiply on the left: s_i * w (swaps the *values* i, i+1).
    Perm times_s_left(int i) const;

    // Strict weak order so Perm can key std::map; compares normalized forms.
    bool operator<(const Perm& o) const;

  private:
    int start_ = 1;
    std::vector<int> vals_; // vals_[i] = image of start_ + i
    void check() const;
};

// All u with length(u) = t and length(u) + length(u^{-1} p) = length(p),
// i.e. the rank-t layer of the right weak order interval [e, p].
std::vector<Perm> right_weak_prefixes(const Perm& p, long long t);

// hash for unordered containers, keyed on the normalized form.
struct PermHash {
    size_t operator()(const Perm& p) const;
};

} // namespace schubert

#pragma once

// Shared generators and cross-checkers for the unit and acceptance suites.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "schubert/io.hpp"
#include "schubert/jdt.hpp"
#include "schubert/poly.hpp"
#include "schubert/sepdesc.hpp"

namespace schubert::testing {

inline std::vector<Perm> all_perms(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Perm> out;
    do
        out.emplace_back(1, v);
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

inline Perm random_perm(std::mt19937_64& rng, int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), rng);
    return Perm(1, v);
}

// Random pi with descents at k or later (first k positions increasing).
inline Perm random_high(std::mt19937_64& rng, int n, int k) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), rng);
    std::sort(v.begin(), v.begin() + k);
    return Perm(1, v);
}

// Random rho with descents at k or earlier (positions k+1.. increasing).
inline Perm random_low(std::mt19937_64& rng, int n, int k) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), rng);
    std::sort(v.begin() + k, v.end());
    return Perm(1, v);
}

// Random factor with descents inside [lo, hi] (positions outside increasing).
inline Perm random_band(std::mt19937_64& rng, int n, int lo, int hi) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), rng);
    std::sort(v.begin(), v.begin() + lo);
    std::sort(v.begin() + std::min(hi, n), v.end());
    return Perm(1, v);
}

// All partitions inside a rows x cols box, the empty one included.
inline std::vector<std::vector<int>> partitions_in_box(int rows, int cols) {
    std::vector<std::vector<int>> out{{}};
    std::vector<int> cur;
    // DFS by rows, each part <= previous and <= cols.
    auto rec = [&](auto&& self, int prev) -> void {
        if (int(cur.size()) == rows) return;
        for (int p = 1; p <= prev; ++p) {
            cur.push_back(p);
            out.push_back(cur);
            self(self, p);
            cur.pop_back();
        }
    };
    rec(rec, cols);
    return out;
}

// All standard Young tableaux of a straight shape.
inline std::vector<Tableau> standard_tableaux(const std::vector<int>& lam) {
    std::vector<int> shape = normalized_partition(lam);
    int total = 0;
    for (int x : shape) total += x;
    Tableau t;
    for (int len : shape) t.rows.emplace_back(len, 0);
    std::vector<int> cnt(shape.size(), 0);
    std::vector<Tableau> out;
    auto rec = [&](auto&& self, int v) -> void {
        if (v > total) {
            out.push_back(t);
            return;
        }
        for (size_t r = 0; r < shape.size(); ++r) {
            int c = cnt[r];
            if (c >= shape[r]) continue;
            if (r > 0 && cnt[r - 1] <= c) continue;
            t.rows[r][c] = v;
            ++cnt[r];
            self(self, v + 1);
            --cnt[r];
        }
    };
    rec(rec, 1);
    return out;
}

// All semistandard skew fillings of nu/mu with entries in [1, maxe].
inline std::vector<SkewTableau> skew_ssyt(const std::vector<int>& nu,
                                          const std::vector<int>& mu, int maxe) {
    std::vector<int> nu2 = normalized_partition(nu), mu2 = normalized_partition(mu);
    std::vector<SkewTableau> out;
    if (!partition_contains(nu2, mu2)) return out;
    SkewTableau sk;
    sk.inner = mu2;
    sk.inner.resize(nu2.size(), 0);
    for (size_t r = 0; r < nu2.size(); ++r)
        sk.rows.rows.emplace_back(nu2[r] - sk.inner[r], 0);
    // Fill cells row-major; row/column constraints checked against what is
    // already placed.
    std::vector<std::pair<int, int>> cells;
    for (size_t r = 0; r < nu2.size(); ++r)
        for (int c = sk.inner[r]; c < nu2[int(r)]; ++c) cells.push_back({int(r), c});
    auto entry_at = [&](int r, int c) -> int& { return sk.rows.rows[r][c - sk.inner[r]]; };
    auto rec = [&](auto&& self, size_t idx) -> void {
        if (idx == cells.size()) {
            out.push_back(sk);
            return;
        }
        auto [r, c] = cells[idx];
        int lo = 1;
        if (c > sk.inner[r]) lo = std::max(lo, entry_at(r, c - 1));
        if (r > 0 && c >= sk.inner[r - 1] && c < int(sk.rows.rows[r - 1].size()) + sk.inner[r - 1])
            lo = std::max(lo, entry_at(r - 1, c) + 1);
        for (int v = lo; v <= maxe; ++v) {
            entry_at(r, c) = v;
            self(self, idx + 1);
        }
        entry_at(r, c) = 0;
    };
    rec(rec, 0);
    return out;
}

// Rectify a square-form dream with its full NW-shape marks; returns the
// trimmed final dream (and the emitted word if asked).
inline Bpd rect_square(const Bpd& f, const std::vector<int>& lam, Word* word = nullptr) {
    auto [g, w] = rectify(with_marks(f, lam));
    if (word) *word = w;
    return g.trimmed();
}

// ---- Section-by-section trace comparison between the marked-tableau
// ---- simulation and the marked-dream rectification (criterion: they agree
// ---- move for move once unstable mid-move tableau states are dropped).

using Snapshot = std::pair<std::vector<std::pair<int, int>>, // sorted blanks
                           std::set<std::pair<int, int>>>;   // marks

inline Snapshot tableau_snapshot(const MarkedTableau& mt) {
    Snapshot s;
    for (int r = 0; r < int(mt.tableau.rows.size()); ++r)
        for (int c = 0; c < int(mt.tableau.rows[r].size()); ++c) {
            int e = mt.tableau.rows[r][c];
            s.first.push_back({e, e + c - r});
        }
    std::sort(s.first.begin(), s.first.end());
    for (auto& [r, c] : mt.marked) {
        int e = mt.tableau.rows[r][c];
        s.second.insert({e, e + c - r});
    }
    return s;
}

inline Snapshot bpd_snapshot(const MarkedBpd& m) {
    Snapshot s;
    s.first = m.bpd.blanks();
    std::sort(s.first.begin(), s.first.end());
    s.second = m.marks;
    return s;
}

inline std::string snapshot_str(const Snapshot& s) {
    std::ostringstream o;
    o << "blanks";
    for (auto& [r, c] : s.first) o << " (" << r << "," << c << ")";
    o << " marks";
    for (auto& [r, c] : s.second) o << " (" << r << "," << c << ")";
    return o.str();
}

// Runs both rectifications for the skew filling T at cut k and checks
//  - the final tableau equals jeu de taquin rectification,
//  - the traces agree step for step under the blank dictionary,
//  - the final dream is the dictionary image of the final tableau.
// Returns "" on success, a diagnostic otherwise.
inline std::string check_jdt_simulation(const SkewTableau& T, int k) {
    MarkedTableau tp = marked_from_skew(T);
    int l = 0;
    for (int r = 0; r < T.n_rows(); ++r)
        if (T.inner_at(r) > 0) l = r + 1;

    std::vector<MarkedTableauEvent> tt;
    Tableau final_t = marked_tableau_rectify(tp, k, &tt);
    Tableau via_jdt = jdt_rectify(T);
    if (!(final_t == via_jdt)) return "final tableau differs from jeu de taquin";

    if (l == 0) return "";

    // Dream carrying the completed tableau: shift entries positive, map
    // through the dictionary, translate the window back down.
    Tableau shifted = tp.tableau;
    for (auto& row : shifted.rows)
        for (int& e : row) e += l;
    Perm w = grassmannian_perm(shifted.shape(), k + l);
    MarkedBpd m{ssyt_to_bpd(shifted, k + l, w).translated(-l), {}, {}, {}};
    for (auto& [r, c] : tp.marked) m.marks.insert({r + 1 - l, c + 1 - l});
    if (!marks_form_partition(m)) return "constructed marks are not a partition";
    if (!(tableau_snapshot(tp) == bpd_snapshot(m))) return "initial snapshots differ";

    std::vector<RectifyEvent> bt;
    auto [g, word] = rectify(m, nullptr, &bt);
    (void)word;

    // A move that leaves the marked cell equal to its south neighbour is
    // transient: it merges with the move that repairs it (a cascade, or a
    // deletion sliding the column up).  Every other tableau move pairs with
    // one dream move: increment/cascade <-> column move, right shift <->
    // east slide, deletion <-> removal.
    auto transient = [](const MarkedTableau& s) {
        auto it = s.marked.begin();
        auto mark = *it;
        for (; it != s.marked.end(); ++it)
            if (it->first > mark.first ||
                (it->first == mark.first && it->second > mark.second))
                mark = *it;
        auto [r, c] = mark;
        return r + 1 < int(s.tableau.rows.size()) &&
               c < int(s.tableau.rows[r + 1].size()) &&
               s.tableau.rows[r + 1][c] == s.tableau.rows[r][c];
    };
    std::vector<std::pair<char, Snapshot>> ts;
    for (const auto& ev : tt) {
        if ((ev.kind == 'i' || ev.kind == 'a') && transient(ev.state)) continue;
        char mapped = ev.kind == 'b' ? 's' : ev.kind == 'd' ? 'r' : 'c';
        ts.push_back({mapped, tableau_snapshot(ev.state)});
    }
    if (ts.size() != bt.size()) {
        std::ostringstream o;
        o << "trace lengths differ: tableau " << ts.size() << " vs dream " << bt.size();
        return o.str();
    }
    for (size_t i = 0; i < bt.size(); ++i) {
        if (ts[i].first != bt[i].kind) {
            std::ostringstream o;
            o << "move " << i << " kind: tableau " << ts[i].first << " vs dream "
              << bt[i].kind;
            return o.str();
        }
        if (!(ts[i].second == bpd_snapshot(bt[i].state))) {
            std::ostringstream o;
            o << "move " << i << " state: tableau " << snapshot_str(ts[i].second)
              << " vs dream " << snapshot_str(bpd_snapshot(bt[i].state));
            return o.str();
        }
    }

    Bpd gt = g.trimmed();
    if (final_t.rows.empty()) {
        if (!gt.permutation().is_identity()) return "final dream is not the identity";
    } else {
        Bpd expect = ssyt_to_bpd(final_t, k, grassmannian_perm(final_t.shape(), k));
        if (!(gt == expect.trimmed())) return "final dream is not the dictionary image";
    }
    return "";
}

// The three ways to group a triple product: full triple star versus the two
// nested binary stars; returns "" when all final dreams agree.
inline std::string check_associativity(const Bpd& d0, const Bpd& d1, const Bpd& d2,
                                       int k1, int k2, int n) {
    StarProblem sp{{d0.permutation(), d1.permutation(), d2.permutation()}, {k1, k2}, n};
    Bpd full = rect_square(multi_star_bpd(sp, {d0, d1, d2}), multi_lambda({k1, k2}, n));

    auto rect_pair = [&](const Bpd& high, const Bpd& low, int k) {
        int m = std::max({n, high.trimmed().window_end(), low.trimmed().window_end(), k + 1});
        Bpd f = star_bpd(high.trimmed().embedded(1, m), low.trimmed().embedded(1, m), k);
        return rect_square(f, std::vector<int>(k, m - k));
    };

    Bpd g12 = rect_pair(d2, d1, k2);             // BPD(pi1 * pi2) representative
    Bpd left = rect_pair(g12, d0, k1);           // rect(D0 * rect(D1 * D2))
    Bpd g01 = rect_pair(d1, d0, k1);             // BPD(pi0 * pi1) representative
    Bpd right = rect_pair(d2, g01, k2);          // rect(rect(D0 * D1) * D2)

    if (!(full == left) || !(full == right)) {
        std::ostringstream o;
        o << "grouping mismatch:\nfull:\n"
          << full.ascii() << "left:\n"
          << left.ascii() << "right:\n"
          << right.ascii();
        return o.str();
    }
    return "";
}

} // namespace schubert::testing

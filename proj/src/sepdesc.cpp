#include "schubert/sepdesc.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

namespace schubert {

namespace {

// Smallest n so that pi, rho both live in S_[1,n] and k < n.
int default_n(const Perm& pi, const Perm& rho, int k) {
    Perm pt = pi.trimmed(), rt = rho.trimmed();
    if (!pt.is_identity() && pt.window_start() < 1)
        throw invalid_input("left factor moves non-positive integers");
    if (!rt.is_identity() && rt.window_start() < 1)
        throw invalid_input("right factor moves non-positive integers");
    // Respect the windows as the caller wrote them (the expansion does not
    // depend on n once it is large enough, but goldens do).
    return std::max({pi.window_end(), rho.window_end(), k + 1});
}

int cut_at(const std::vector<int>& cuts, int n, int a) {
    // k_0 = 0, k_{m+1} = n.
    if (a == 0) return 0;
    if (a == int(cuts.size()) + 1) return n;
    return cuts[a - 1];
}

// Tile at column c of the t-th row (t = 1..k_a) of negative band a >= 1 of a
// star grid.  Blocks tile the window [ws, ws + (m+1)n - 1] left to right
// from block m down to block 0; each band's hooks sit over the last k_a
// columns of block a, and the hooks' horizontals cross the risers of every
// block east of a.
Tile negative_band_tile(int a, int t, int c, const std::vector<int>& cuts, int n, int ws) {
    int m = int(cuts.size());
    int off = c - ws;
    int beta = m - off / n;
    int j = off % n + 1;
    if (beta > a) return Tile::Blank; // west of band a's block
    int kb = cut_at(cuts, n, beta);
    if (beta == a) {
        if (j <= n - kb) return Tile::Blank;
        int rc = j - (n - kb);
        if (t < rc) return Tile::Horizontal;
        if (t == rc) return Tile::ElbowSE;
        return Tile::Vertical;
    }
    return j > n - kb ? Tile::Cross : Tile::Horizontal;
}

std::vector<int> rectangle_shape(int k, int n) {
    return std::vector<int>(size_t(k), n - k);
}

// Number of Coxeter-Knuth classes of reduced words of u whose insertion
// tableau has the given shape.  Classes are counted through their
// tableaux: every insertion tableau is an increasing tableau whose
// reading word is a reduced word for u, and re-inserting that reading
// word reproduces the tableau.  Filling cells bottom row first (the
// reverse of reading order, which is the order the inserter consumes
// letters) lets the search keep a running product and discard any
// partial filling whose letters stop being reduced, so the work tracks
// the number of tableaux instead of the number of reduced words.
coeff_t count_classes_with_shape(const Perm& u, const std::vector<int>& lambda) {
    std::vector<int> shape;
    for (int x : lambda)
        if (x > 0) shape.push_back(x);
    long long cells = 0;
    for (int x : shape) cells += x;
    if (u.length() != cells) return 0;
    if (cells == 0) return 1; // the empty word's class
    Perm ut = u.trimmed();
    const int lo = ut.window_start(), hi = ut.window_end() - 1;
    const int m = int(shape.size());
    std::vector<std::vector<int>> p(m);
    for (int r = 0; r < m; ++r) p[r].assign(shape[r], 0);
    coeff_t count = 0;
    auto fill = [&](auto&& self, int r, int c, const Perm& q) -> void {
        if (c == shape[r]) {
            if (r == 0) {
                if (!(q == ut)) return;
                Tableau cand{p};
                if (eg_insert(reading_word(cand)).first == cand) ++count;
                return;
            }
            self(self, r - 1, 0, q);
            return;
        }
        // Strict rows and columns, room for the rest of the row, and the
        // already-filled cell below caps the entry from above.
        int e_lo = std::max(c > 0 ? p[r][c - 1] + 1 : lo, lo + r);
        int e_hi = hi - (shape[r] - 1 - c);
        if (r + 1 < m && c < shape[r + 1]) e_hi = std::min(e_hi, p[r + 1][c] - 1);
        for (int e = e_lo; e <= e_hi; ++e) {
            if (q.inverse_of(e) > q.inverse_of(e + 1)) continue; // s_e * q shortens
            p[r][c] = e;
            self(self, r, c + 1, q.times_s_left(e));
        }
    };
    fill(fill, m - 1, 0, Perm::identity(lo, hi + 2 - lo));
    return count;
}

void run_parallel(int count, int jobs, const std::function<void(int)>& body) {
    jobs = std::min(jobs, count);
    if (jobs <= 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
        });
    for (auto& th : pool) th.join();
}

} // namespace

bool has_separated_descents(const Perm& pi, const Perm& rho, int k) {
    for (int d : pi.trimmed().descents())
        if (d < k) return false;
    for (int d : rho.trimmed().descents())
        if (d > k) return false;
    return true;
}

Perm star_perm(const Perm& pi, const Perm& rho, int k, int n) {
    if (k < 1) throw invalid_input("cut k must be positive");
    int nn = default_n(pi, rho, k);
    if (n == 0) n = nn;
    if (n < nn) throw invalid_input("n too small for the given factors");
    if (!has_separated_descents(pi, rho, k))
        throw invalid_input("descents of the factors are not separated at k");
    Perm p = pi.trimmed().embedded(1, n);
    Perm r = rho.trimmed().embedded(1, n);

    int ws = 1 - k, we = 2 * n - k;
    std::vector<int> vals(we - ws + 1, 0);
    std::vector<char> used(we - ws + 1, 0);
    auto put = [&](int i, int v) {
        vals[i - ws] = v;
        used[v - ws] = 1;
    };
    for (int i = 1 - k; i <= 0; ++i) put(i, p(i + k) - k);
    for (int i = 1; i <= k; ++i) put(i, r(i) + n - k);
    for (int i = k + 1; i <= n; ++i) put(i, p(i) - k);
    int v = ws;
    for (int i = n + 1; i <= we; ++i) {
        while (used[v - ws]) ++v;
        put(i, v);
    }
    return Perm(ws, std::move(vals));
}

void validate_star_problem(const StarProblem& sp) {
    int m = int(sp.cuts.size());
    if (m < 1) throw invalid_input("at least one cut required");
    if (int(sp.perms.size()) != m + 1)
        throw invalid_input("need one more factor than cuts");
    for (int a = 0; a < m; ++a) {
        if (sp.cuts[a] < 1 || sp.cuts[a] > sp.n - 1)
            throw invalid_input("cut outside [1, n-1]");
        if (a && sp.cuts[a] <= sp.cuts[a - 1])
            throw invalid_input("cuts must strictly increase");
    }
    for (int a = 0; a <= m; ++a) {
        Perm t = sp.perms[a].trimmed();
        if (!t.is_identity() && (t.window_start() < 1 || t.window_end() > sp.n))
            throw invalid_input("factor does not fit in S_n");
        int lo = std::max(cut_at(sp.cuts, sp.n, a), 1);
        int hi = std::min(cut_at(sp.cuts, sp.n, a + 1), sp.n - 1);
        for (int d : t.descents())
            if (d < lo || d > hi)
                throw invalid_input("factor " + std::to_string(a) +
                                    " has a descent outside its cut range");
    }
}

Perm multi_star_perm(const StarProblem& sp) {
    validate_star_problem(sp);
    int m = int(sp.cuts.size()), n = sp.n;
    int S = 0;
    for (int k : sp.cuts) S += k;
    int ws = 1 - S, we = (m + 1) * n - S;

    std::vector<int> vals(we - ws + 1, 0);
    std::vector<char> used(we - ws + 1, 0);
    auto put = [&](int i, int v) {
        vals[i - ws] = v;
        used[v - ws] = 1;
    };
    // Negative bands: band a = 1 topmost, covering k_a rows; row t of band a
    // holds pi_a(t) shifted into block a's value range.
    int row = 1 - S;
    for (int a = 1; a <= m; ++a) {
        Perm p = sp.perms[a].trimmed().embedded(1, n);
        int ka = cut_at(sp.cuts, n, a);
        for (int t = 1; t <= ka; ++t, ++row) put(row, p(t) + (m - a) * n - S);
    }
    // Main rows: row i in (k_a, k_{a+1}] belongs to factor a.
    for (int a = 0; a <= m; ++a) {
        Perm p = sp.perms[a].trimmed().embedded(1, n);
        for (int i = cut_at(sp.cuts, n, a) + 1; i <= cut_at(sp.cuts, n, a + 1); ++i)
            put(i, p(i) + (m - a) * n - S);
    }
    // Remaining rows take the unused values in increasing order.
    int v = ws;
    for (int i = n + 1; i <= we; ++i) {
        while (used[v - ws]) ++v;
        put(i, v);
    }
    return Perm(ws, std::move(vals));
}

Bpd multi_star_bpd(const StarProblem& sp, const std::vector<Bpd>& ds) {
    validate_star_problem(sp);
    int m = int(sp.cuts.size()), n = sp.n;
    if (int(ds.size()) != m + 1)
        throw invalid_input("need one dream per factor");
    for (int a = 0; a <= m; ++a) {
        if (ds[a].window_start() != 1 || ds[a].size() != n)
            throw invalid_input("factor dreams must live on window [1, n]");
        if (!(ds[a].permutation() == sp.perms[a]))
            throw invalid_input("dream " + std::to_string(a) +
                                " does not match its factor");
    }
    int S = 0;
    for (int k : sp.cuts) S += k;
    int ws = 1 - S, we = (m + 1) * n - S;
    Bpd f(ws, (m + 1) * n);

    // Negative bands.
    int row = 1 - S;
    for (int a = 1; a <= m; ++a) {
        int ka = cut_at(sp.cuts, n, a);
        for (int t = 1; t <= ka; ++t, ++row)
            for (int c = ws; c <= we; ++c)
                f.set(row, c, negative_band_tile(a, t, c, sp.cuts, n, ws));
    }

    // Main rows, one block per factor; block a occupies columns
    // shift_a + [1, n] with shift_a = (m - a) n - S.
    for (int a = 0; a <= m; ++a) {
        int shift = (m - a) * n - S;
        int ka = cut_at(sp.cuts, n, a), ka1 = cut_at(sp.cuts, n, a + 1);
        const Perm pa = ds[a].permutation();
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                Tile t;
                if (i <= ka) {
                    // Reroute the NE triangle so the first k_a pipes rise
                    // into the band hooks instead of exiting east.
                    Tile t0 = ds[a].at(i, j);
                    if (j == n - ka + i) {
                        if (t0 == Tile::Horizontal) t = Tile::ElbowNW;
                        else if (t0 == Tile::ElbowSE) t = Tile::Vertical;
                        else throw internal_error("unexpected tile on the reroute diagonal");
                    } else if (j > n - ka + i) {
                        if (t0 != Tile::Horizontal)
                            throw internal_error("unexpected tile above the reroute diagonal");
                        t = Tile::Vertical;
                    } else {
                        t = t0;
                    }
                } else if (i <= ka1) {
                    t = ds[a].at(i, j);
                } else {
                    // Foreign strands from the factors below cross block a's
                    // surviving verticals.
                    t = pa.inverse_of(j) <= ka1 ? Tile::Cross : Tile::Horizontal;
                }
                f.set(i, shift + j, t);
            }
        }
    }

    // Rows below n carry no blanks: each row turns the westmost unfinished
    // pipe east and crosses it over the rest.
    std::vector<char> active(we - ws + 1, 0);
    for (int c = ws; c <= we; ++c) active[c - ws] = tile_has_s(f.at(n, c));
    for (int r = n + 1; r <= we; ++r) {
        int free = ws;
        while (free <= we && active[free - ws]) ++free;
        if (free > we) throw internal_error("no room for the fill elbow");
        for (int c = ws; c < free; ++c) f.set(r, c, Tile::Vertical);
        f.set(r, free, Tile::ElbowSE);
        for (int c = free + 1; c <= we; ++c)
            f.set(r, c, active[c - ws] ? Tile::Cross : Tile::Horizontal);
        active[free - ws] = 1;
    }

    std::string why;
    if (!f.is_valid(&why)) throw internal_error("assembled dream invalid: " + why);
    if (!(f.permutation() == multi_star_perm(sp)))
        throw internal_error("assembled dream has the wrong permutation");
    return f;
}

Bpd star_bpd(const Bpd& d, const Bpd& e, int k) {
    if (d.window_start() != 1 || e.window_start() != 1 || d.size() != e.size())
        throw invalid_input("factor dreams must share the window [1, n]");
    StarProblem sp{{e.permutation(), d.permutation()}, {k}, d.size()};
    return multi_star_bpd(sp, {e, d});
}

bool is_square_form(const Bpd& f, int k, int n) {
    if (k < 1 || k >= n) return false;
    if (f.window_start() != 1 - k || f.window_end() != 2 * n - k) return false;
    if (!f.is_valid()) return false;
    std::vector<int> cuts{k};
    for (int r = 1 - k; r <= 0; ++r)
        for (int c = 1 - k; c <= 2 * n - k; ++c)
            if (f.at(r, c) != negative_band_tile(1, r - (1 - k) + 1, c, cuts, n, 1 - k))
                return false;
    return true;
}

std::pair<Bpd, Bpd> split_square(const Bpd& f, int k, int n) {
    if (!is_square_form(f, k, n))
        throw invalid_input("dream is not in square form");
    Perm big = f.permutation();

    // pi comes from the band rows and the main rows below the cut.
    std::vector<int> pv(n);
    for (int i = 1; i <= k; ++i) pv[i - 1] = big(i - k) + k;
    for (int i = k + 1; i <= n; ++i) pv[i - 1] = big(i) + k;
    std::vector<int> chk = pv;
    std::sort(chk.begin(), chk.end());
    for (int i = 0; i < n; ++i)
        if (chk[i] != i + 1) throw invalid_input("permutation does not split at k");
    Perm pi(1, pv);

    // rho's first k values sit in rows [1, k]; the rest increase.
    std::vector<int> rv(n, 0);
    std::vector<char> used(n, 0);
    for (int i = 1; i <= k; ++i) {
        int x = big(i) - (n - k);
        if (x < 1 || x > n || used[x - 1])
            throw invalid_input("permutation does not split at k");
        rv[i - 1] = x;
        used[x - 1] = 1;
    }
    int v = 1;
    for (int i = k + 1; i <= n; ++i) {
        while (used[v - 1]) ++v;
        rv[i - 1] = v;
        used[v - 1] = 1;
    }
    Perm rho(1, rv);

    // d: undo the NE-triangle reroute of block 1 (columns shifted by -k).
    Bpd d(1, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            d.set(i, j, f.at(i, j - k));
    for (int i = 1; i <= k; ++i) {
        Tile t = d.at(i, n - k + i);
        if (t == Tile::ElbowNW) d.set(i, n - k + i, Tile::Horizontal);
        else if (t == Tile::Vertical) d.set(i, n - k + i, Tile::ElbowSE);
        else throw invalid_input("square form broken on the reroute diagonal");
        for (int j = n - k + i + 1; j <= n; ++j) {
            if (d.at(i, j) != Tile::Vertical)
                throw invalid_input("square form broken above the reroute diagonal");
            d.set(i, j, Tile::Horizontal);
        }
    }
    std::string why;
    if (!d.is_valid(&why) || !(d.permutation() == pi))
        throw invalid_input("left block does not restore a dream of pi");

    // e: rows [1, k] are embedded verbatim east of block 1; the blank-free
    // rows below the cut are the same in every dream of rho, so take them
    // from the droop-free one.
    Bpd e = rothe_bpd(rho.embedded(1, n));
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= n; ++j)
            e.set(i, j, f.at(i, j + n - k));
    if (!e.is_valid(&why) || !(e.permutation() == rho))
        throw invalid_input("right block does not restore a dream of rho");
    return {d, e};
}

MarkedBpd with_marks(const Bpd& f, const std::vector<int>& lambda) {
    std::vector<int> lam = normalized_partition(lambda);
    MarkedBpd m{f, {}, {}, {}};
    int ws = f.window_start();
    for (int r = 0; r < int(lam.size()); ++r)
        for (int c = 0; c < lam[r]; ++c) {
            if (!f.in_window(ws + r, ws + c) || f.at(ws + r, ws + c) != Tile::Blank)
                throw invalid_input("marked shape does not fit the NW blank region");
            m.marks.insert({ws + r, ws + c});
        }
    return m;
}

bool marks_form_partition(const MarkedBpd& m, std::vector<int>* shape) {
    int ws = m.bpd.window_start();
    std::map<int, std::vector<int>> byrow;
    for (auto& [r, c] : m.marks) byrow[r].push_back(c);
    std::vector<int> sh;
    int expect = ws;
    for (auto& [r, cols] : byrow) {
        if (r != expect++) return false;
        for (int i = 0; i < int(cols.size()); ++i)
            if (cols[i] != ws + i) return false; // already sorted (set order)
        if (!sh.empty() && int(cols.size()) > sh.back()) return false;
        sh.push_back(int(cols.size()));
    }
    if (shape) *shape = sh;
    return true;
}

namespace {

// One rectification iteration: slide the active mark east, apply column
// moves while a pipe's NW elbow hangs below-right of it, and finally cancel
// the crossing of pipes j, j+1 where j is the mark's final column.  Returns
// the emitted letter j.
int rectify_iteration(MarkedBpd& M, std::pair<int, int> start,
                      std::vector<RectifyEvent>* trace) {
    Bpd& B = M.bpd;
    int ws = B.window_start(), we = B.window_end();
    auto record = [&](char kind) {
        if (trace) trace->push_back({kind, M});
    };
    auto [i, j] = start;
    if (!M.marks.count({i, j}) || B.at(i, j) != Tile::Blank)
        throw internal_error("active mark is not a marked blank");

    for (;;) {
        // Slide east to the rightmost blank of the contiguous block.
        int j2 = j;
        while (j2 + 1 <= we && B.at(i, j2 + 1) == Tile::Blank && !M.marks.count({i, j2 + 1}))
            ++j2;
        if (j2 != j) {
            M.marks.erase({i, j});
            M.marks.insert({i, j2});
            j = j2;
            record('s');
        }
        if (j + 1 > we) throw internal_error("mark ran off the east border");
        Tile right = B.at(i, j + 1);
        if (right != Tile::Vertical && right != Tile::ElbowSE)
            throw internal_error("unexpected tile right of the mark");

        // Follow the strand below (i, j+1): an ElbowNW means a column move,
        // the south border means this mark is ready for removal.
        int t = i + 1;
        while (t <= we && (B.at(t, j + 1) == Tile::Vertical || B.at(t, j + 1) == Tile::Cross))
            ++t;
        bool column_move = t <= we && B.at(t, j + 1) == Tile::ElbowNW;
        int ip;
        Tile turn = Tile::Blank;
        if (column_move) {
            ip = t;
            turn = B.at(ip, j);
            if (turn != Tile::ElbowSE && turn != Tile::Horizontal)
                throw internal_error("column move blocked by a crossing at its SW corner");
        } else {
            if (t <= we) throw internal_error("strand below the mark ends unexpectedly");
            // Pipe j bends east somewhere below the mark; pipe j+1 runs
            // straight past that row, so they cross there.
            ip = we;
            while (ip > i && (B.at(ip, j) == Tile::Vertical || B.at(ip, j) == Tile::Cross))
                --ip;
            if (ip <= i || B.at(ip, j) != Tile::ElbowSE)
                throw internal_error("pipe under the mark has no SE bend");
            if (B.at(ip, j + 1) != Tile::Cross)
                throw internal_error("pipes at the mark's columns do not cross");
        }
        for (int r = i + 1; r < ip; ++r)
            if (B.at(r, j) == Tile::Blank && M.marks.count({r, j}))
                throw internal_error("column move through another mark");

        // Shared rewrite between rows i and ip: the strand in column j+1
        // swings into column j, and whatever occupied column j there --
        // blanks, horizontal runs, or other pipes' kinks -- shifts one
        // column east.  A tile keeps its west edge, so its replacement in
        // column j is a cross exactly when it reached west.
        B.set(i, j, Tile::ElbowSE);
        B.set(i, j + 1, right == Tile::ElbowSE ? Tile::Horizontal : Tile::ElbowNW);
        for (int r = i + 1; r < ip; ++r) {
            Tile a = B.at(r, j);
            B.set(r, j, tile_has_w(a) ? Tile::Cross : Tile::Vertical);
            B.set(r, j + 1, a);
        }
        // At row ip the strand joins whatever pipe turned there: a SE elbow
        // continues straight up, a horizontal pipe from farther west now
        // turns north in column j.
        B.set(ip, j, turn == Tile::Horizontal ? Tile::ElbowNW : Tile::Vertical);
        M.marks.erase({i, j});
        if (column_move) {
            B.set(ip, j + 1, Tile::Blank);
            M.marks.insert({ip, j + 1});
            i = ip;
            j = j + 1;
            record('c');
            continue;
        }
        B.set(ip, j + 1, Tile::ElbowSE);
        M.pending_word.push_back(j);
        record('r');
        return j;
    }
}

} // namespace

std::pair<Bpd, Word> rectify(const MarkedBpd& m, const Tableau* order,
                             std::vector<RectifyEvent>* trace) {
    std::string why;
    if (!m.bpd.is_valid(&why)) throw invalid_input("rectify: invalid dream: " + why);
    for (auto& [r, c] : m.marks)
        if (!m.bpd.in_window(r, c) || m.bpd.at(r, c) != Tile::Blank)
            throw invalid_input("rectify: mark not on a blank tile");

    MarkedBpd cur = m;
    cur.pending_word.clear();
    int total = int(cur.marks.size());

    std::vector<std::pair<int, int>> slots;
    if (order) {
        std::vector<int> sh;
        if (!marks_form_partition(cur, &sh))
            throw invalid_input("rectify: explicit order needs partition-shaped marks");
        if (!is_standard_tableau(*order) || order->shape() != sh)
            throw invalid_input("rectify: order must be standard of the marks' shape");
        int ws = cur.bpd.window_start();
        slots.assign(total, {0, 0});
        for (int r = 0; r < int(order->rows.size()); ++r)
            for (int c = 0; c < int(order->rows[r].size()); ++c)
                slots[order->rows[r][c] - 1] = {ws + r, ws + c};
    }

    Word out;
    for (int step = total; step >= 1; --step) {
        std::pair<int, int> active;
        if (order) {
            active = slots[step - 1];
        } else {
            active = *cur.marks.begin();
            for (auto& p : cur.marks)
                if (p.first > active.first ||
                    (p.first == active.first && p.second > active.second))
                    active = p;
        }
        out.push_back(rectify_iteration(cur, active, trace));
    }
    return {cur.bpd, out};
}

MarkedBpd insert_letter(const MarkedBpd& m, int letter) {
    MarkedBpd M = m;
    Bpd& B = M.bpd;
    int ws = B.window_start(), we = B.window_end();
    if (letter + 1 > we) throw invalid_input("letter east of the window");
    if (letter < ws) throw grow_window_needed("letter west of the window");
    Perm sigma = B.permutation();
    if (sigma.inverse_of(letter) > sigma.inverse_of(letter + 1))
        throw invalid_input("insertion undefined: letter shortens the permutation");

    // First SE bend of the pipe entering at the given column.
    auto bend = [&](int col) {
        int r = we;
        while (r >= ws && (B.at(r, col) == Tile::Vertical || B.at(r, col) == Tile::Cross))
            --r;
        if (r < ws || B.at(r, col) != Tile::ElbowSE)
            throw internal_error("pipe has no SE bend in its own column");
        return r;
    };
    int im = bend(letter), ip = bend(letter + 1);
    if (ip <= im) throw internal_error("insertion bends out of order");
    Tile above = B.at(im, letter + 1);
    if (above != Tile::Horizontal && above != Tile::ElbowNW)
        throw internal_error("unexpected tile right of the upper bend");
    if (B.at(ip, letter) != Tile::Vertical)
        throw internal_error("unexpected tile left of the lower bend");
    for (int r = im + 1; r < ip; ++r)
        if (B.at(r, letter + 1) == Tile::Blank && M.marks.count({r, letter + 1}))
            throw grow_window_needed("insertion splice collides with a mark");

    // Inverse removal: recross pipes letter, letter+1 and free the mark at
    // the upper bend.  Between the bends the run of pipe letter+1 swings
    // into the letter column and the old contents there -- blanks,
    // horizontal runs, or other pipes' kinks -- shift one column west,
    // keeping their east edges.
    B.set(ip, letter + 1, Tile::Cross);
    B.set(ip, letter, Tile::ElbowSE);
    for (int r = im + 1; r < ip; ++r) {
        Tile d = B.at(r, letter + 1);
        B.set(r, letter, d);
        B.set(r, letter + 1, tile_has_e(d) ? Tile::Cross : Tile::Vertical);
    }
    B.set(im, letter, Tile::Blank);
    B.set(im, letter + 1, above == Tile::Horizontal ? Tile::ElbowSE : Tile::Vertical);
    M.marks.insert({im, letter});

    std::vector<std::pair<int, int>> fps;
    int R = im, C = letter;
    for (;;) {
        // Inverse slide: west to the leftmost blank of the block, not past
        // other marks.
        int C2 = C;
        while (C2 - 1 >= ws && B.at(R, C2 - 1) == Tile::Blank && !M.marks.count({R, C2 - 1}))
            --C2;
        if (C2 != C) {
            M.marks.erase({R, C});
            M.marks.insert({R, C2});
            C = C2;
        }
        // Inverse column move: redroop over the mark the pipe that runs up
        // the column to its west.  A vertical tile there is the pipe's own
        // run; an NW elbow means the pipe arrives from farther west.
        if (C - 1 < ws) break;
        Tile westt = B.at(R, C - 1);
        if (westt != Tile::Vertical && westt != Tile::ElbowNW) break;
        int i2 = R - 1;
        while (i2 >= ws && (B.at(i2, C - 1) == Tile::Vertical || B.at(i2, C - 1) == Tile::Cross))
            --i2;
        if (i2 < ws || B.at(i2, C - 1) != Tile::ElbowSE) break;
        Tile up = B.at(i2, C);
        if (up != Tile::Horizontal && up != Tile::ElbowNW) break;
        bool clear = true;
        for (int r = i2 + 1; r < R && clear; ++r)
            if (B.at(r, C) == Tile::Blank && M.marks.count({r, C})) clear = false;
        if (!clear) break;

        fps.push_back({R, C});
        B.set(R, C, Tile::ElbowNW);
        B.set(R, C - 1, westt == Tile::Vertical ? Tile::ElbowSE : Tile::Horizontal);
        for (int r = i2 + 1; r < R; ++r) {
            Tile d = B.at(r, C);
            B.set(r, C - 1, d);
            B.set(r, C, tile_has_e(d) ? Tile::Cross : Tile::Vertical);
        }
        B.set(i2, C, up == Tile::Horizontal ? Tile::ElbowSE : Tile::Vertical);
        B.set(i2, C - 1, Tile::Blank);
        M.marks.erase({R, C});
        M.marks.insert({i2, C - 1});
        R = i2;
        C = C - 1;
    }
    fps.push_back({R, C});
    M.last_footprints = std::move(fps);
    return M;
}

std::pair<MarkedBpd, Tableau> insert_word(const Bpd& f, const Word& w) {
    std::string why;
    if (!f.is_valid(&why)) throw invalid_input("insert_word: invalid dream: " + why);
    int l = int(w.size());
    for (int grow = 0; grow <= l + 2; ++grow) {
        MarkedBpd cur{f.embedded(f.window_start() - grow, f.window_end()), {}, {}, {}};
        Tableau q;
        try {
            for (int t = 1; t <= l; ++t) {
                cur = insert_letter(cur, w[l - t]);
                if (!marks_form_partition(cur))
                    throw grow_window_needed("marks lost the partition shape");
                auto [r, c] = cur.last_footprints.back();
                int rr = r - cur.bpd.window_start(), cc = c - cur.bpd.window_start();
                if (rr > int(q.rows.size()))
                    throw internal_error("insertion skipped a tableau row");
                if (rr == int(q.rows.size())) q.rows.push_back({});
                if (cc != int(q.rows[rr].size()))
                    throw internal_error("insertion did not extend its tableau row");
                q.rows[rr].push_back(t);
            }
            return {cur, q};
        } catch (const grow_window_needed&) {
            // retry with one more NW pipe
        }
    }
    throw internal_error("insertion exceeded the window growth bound");
}

namespace {

std::map<Perm, coeff_t> expansion_impl(const Perm& big, int neg_lo,
                                       const std::vector<int>& lambda, int jobs) {
    long long cells = 0;
    for (int x : lambda) cells += x;
    std::vector<Perm> cand = right_weak_prefixes(big, cells);
    std::vector<coeff_t> cnt(cand.size(), 0);
    std::vector<Perm> sig(cand.size());
    run_parallel(int(cand.size()), jobs, [&](int idx) {
        Perm sigma = cand[idx].inverse() * big;
        for (int i = neg_lo; i <= 0; ++i)
            if (sigma(i) != i) return;
        coeff_t c = count_classes_with_shape(cand[idx], lambda);
        if (!c) return;
        sig[idx] = sigma.trimmed();
        cnt[idx] = c;
    });
    std::map<Perm, coeff_t> out;
    for (size_t i = 0; i < cand.size(); ++i)
        if (cnt[i]) out[sig[i]] += cnt[i];
    return out;
}

coeff_t constant_impl(const Perm& big, const std::vector<int>& lambda, const Perm& sigma) {
    Perm st = sigma.trimmed();
    if (!st.is_identity() && st.window_start() < 1)
        throw invalid_input("target permutation moves non-positive integers");
    if (st.window_end() > big.window_end()) return 0;
    Perm se = st.embedded(big.window_start(), big.window_end());
    Perm u = big * se.inverse();
    long long cells = 0;
    for (int x : lambda) cells += x;
    if (u.length() != cells || se.length() + cells != big.length()) return 0;
    return count_classes_with_shape(u, lambda);
}

} // namespace

std::map<Perm, coeff_t> expansion(const Perm& pi, const Perm& rho, int k, int jobs) {
    int n = default_n(pi, rho, k);
    Perm big = star_perm(pi, rho, k, n);
    return expansion_impl(big, 1 - k, rectangle_shape(k, n), jobs);
}

coeff_t structure_constant(const Perm& pi, const Perm& rho, int k, const Perm& sigma) {
    int n = default_n(pi, rho, k);
    Perm big = star_perm(pi, rho, k, n);
    return constant_impl(big, rectangle_shape(k, n), sigma);
}

std::vector<int> multi_lambda(const std::vector<int>& cuts, int n) {
    int m = int(cuts.size());
    StarProblem sp{std::vector<Perm>(m + 1, Perm::identity(1, n)), cuts, n};
    std::vector<Bpd> ds(m + 1, rothe_bpd(Perm::identity(1, n)));
    Bpd f = multi_star_bpd(sp, ds);
    std::vector<int> lam;
    long long cells = 0;
    for (int r = f.window_start(); r <= 0; ++r) {
        int len = 0;
        while (len < f.size() && f.at(r, f.window_start() + len) == Tile::Blank) ++len;
        if (!lam.empty() && len > lam.back())
            throw internal_error("star blank region is not a partition");
        lam.push_back(len);
        cells += len;
    }
    if (cells != multi_star_perm(sp).length())
        throw internal_error("star blank region disagrees with the length identity");
    return normalized_partition(lam);
}

std::map<Perm, coeff_t> multi_expansion(const StarProblem& sp, int jobs) {
    Perm big = multi_star_perm(sp);
    long long base = 0;
    for (const Perm& p : sp.perms) base += p.length();
    std::vector<int> lam = multi_lambda(sp.cuts, sp.n);
    long long cells = 0;
    for (int x : lam) cells += x;
    if (big.length() != base + cells)
        throw internal_error("star length identity failed");
    return expansion_impl(big, big.window_start(), lam, jobs);
}

coeff_t multi_structure_constant(const StarProblem& sp, const Perm& sigma) {
    Perm big = multi_star_perm(sp);
    return constant_impl(big, multi_lambda(sp.cuts, sp.n), sigma);
}

} // namespace schubert

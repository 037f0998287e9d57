#include "schubert/jdt.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>

namespace schubert {

int SkewTableau::n_cells() const { return rows.n_cells(); }

namespace {

bool skew_shape_ok(const SkewTableau& t) {
    int m = t.n_rows();
    for (int r = int(t.rows.rows.size()); r < int(t.inner.size()); ++r)
        if (t.inner[r] != 0) return false;
    for (int r = 0; r < m; ++r) {
        if (t.inner_at(r) < 0) return false;
        if (t.outer_at(r) == 0) return false;
        if (r + 1 < m) {
            if (t.inner_at(r) < t.inner_at(r + 1)) return false;
            if (t.outer_at(r) < t.outer_at(r + 1)) return false;
        }
    }
    return true;
}

bool filled(const SkewTableau& t, int r, int c) {
    return r >= 0 && r < t.n_rows() && c >= t.inner_at(r) && c < t.outer_at(r);
}

int entry(const SkewTableau& t, int r, int c) {
    return t.rows.rows[r][c - t.inner_at(r)];
}

} // namespace

bool is_semistandard_skew(const SkewTableau& t) {
    if (!skew_shape_ok(t)) return false;
    for (int r = 0; r < t.n_rows(); ++r)
        for (int c = t.inner_at(r); c < t.outer_at(r); ++c) {
            if (filled(t, r, c + 1) && entry(t, r, c) > entry(t, r, c + 1)) return false;
            if (filled(t, r + 1, c) && entry(t, r, c) >= entry(t, r + 1, c)) return false;
        }
    return true;
}

bool is_standard_skew(const SkewTableau& t) {
    if (!skew_shape_ok(t)) return false;
    std::set<int> seen;
    for (int r = 0; r < t.n_rows(); ++r)
        for (int c = t.inner_at(r); c < t.outer_at(r); ++c) {
            seen.insert(entry(t, r, c));
            if (filled(t, r, c + 1) && entry(t, r, c) >= entry(t, r, c + 1)) return false;
            if (filled(t, r + 1, c) && entry(t, r, c) >= entry(t, r + 1, c)) return false;
        }
    int n = t.n_cells();
    return int(seen.size()) == n && (n == 0 || (*seen.begin() == 1 && *seen.rbegin() == n));
}

std::vector<int> inner_corner_rows(const SkewTableau& t) {
    std::vector<int> out;
    for (int r = 0; r < t.n_rows(); ++r)
        if (t.inner_at(r) > 0 && (r + 1 >= t.n_rows() || t.inner_at(r + 1) < t.inner_at(r)))
            out.push_back(r);
    return out;
}

SkewTableau jdt_slide(const SkewTableau& t, int corner_row) {
    if (!skew_shape_ok(t)) throw invalid_input("jdt_slide: malformed skew shape");
    auto corners = inner_corner_rows(t);
    if (std::find(corners.begin(), corners.end(), corner_row) == corners.end())
        throw invalid_input("jdt_slide: not an inner corner row");

    int m = t.n_rows();
    std::vector<std::vector<int>> g(m);
    for (int r = 0; r < m; ++r) {
        g[r].assign(t.outer_at(r), 0);
        for (int c = t.inner_at(r); c < t.outer_at(r); ++c) g[r][c] = entry(t, r, c);
    }
    std::vector<int> inner(m, 0);
    for (int r = 0; r < m; ++r) inner[r] = t.inner_at(r);

    int hr = corner_row, hc = inner[corner_row] - 1;
    inner[corner_row] -= 1;
    for (;;) {
        bool below = hr + 1 < m && hc >= inner[hr + 1] && hc < int(g[hr + 1].size());
        bool right = hc + 1 < int(g[hr].size());
        if (!below && !right) break;
        bool take_below = below && (!right || g[hr + 1][hc] <= g[hr][hc + 1]);
        if (take_below) {
            g[hr][hc] = g[hr + 1][hc];
            ++hr;
        } else {
            g[hr][hc] = g[hr][hc + 1];
            ++hc;
        }
    }
    // The vacancy exits at an outer corner; drop that cell.
    if (hc != int(g[hr].size()) - 1 || (hr + 1 < m && int(g[hr + 1].size()) > hc))
        throw internal_error("jdt vacancy stopped inside the shape");
    g[hr].pop_back();

    SkewTableau out;
    for (int r = 0; r < m; ++r) {
        if (int(g[r].size()) == 0) continue; // only the last row can empty out
        out.inner.push_back(inner[r]);
        out.rows.rows.emplace_back(g[r].begin() + inner[r], g[r].end());
    }
    while (!out.inner.empty() && out.inner.back() == 0 && out.rows.rows.size() < out.inner.size())
        out.inner.pop_back();
    return out;
}

Tableau jdt_rectify(const SkewTableau& t) {
    if (!is_semistandard_skew(t)) throw invalid_input("jdt_rectify: not semistandard skew");
    SkewTableau cur = t;
    for (;;) {
        auto corners = inner_corner_rows(cur);
        if (corners.empty()) break;
        cur = jdt_slide(cur, corners.back());
    }
    return cur.rows;
}

Tableau superstandard(const std::vector<int>& lambda) {
    std::vector<int> lam = normalized_partition(lambda);
    Tableau t;
    int v = 1;
    for (int len : lam) {
        t.rows.emplace_back();
        for (int i = 0; i < len; ++i) t.rows.back().push_back(v++);
    }
    return t;
}

namespace {

long long psum(const std::vector<int>& p) {
    long long s = 0;
    for (int x : p) s += x;
    return s;
}

void standard_fillings(std::vector<std::vector<int>>& g, const std::vector<int>& mu,
                       std::vector<int>& cnt, int v, int total,
                       const std::function<void()>& done) {
    if (v > total) {
        done();
        return;
    }
    for (int r = 0; r < int(g.size()); ++r) {
        int inner = r < int(mu.size()) ? mu[r] : 0;
        int col = inner + cnt[r];
        if (col >= int(g[r].size())) continue;
        if (r > 0) {
            int above_inner = r - 1 < int(mu.size()) ? mu[r - 1] : 0;
            if (col >= above_inner && g[r - 1][col] == 0) continue;
        }
        g[r][col] = v;
        ++cnt[r];
        standard_fillings(g, mu, cnt, v + 1, total, done);
        --cnt[r];
        g[r][col] = 0;
    }
}

} // namespace

coeff_t lr_coefficient(const std::vector<int>& lambda, const std::vector<int>& mu,
                       const std::vector<int>& nu) {
    std::vector<int> lam = normalized_partition(lambda);
    std::vector<int> mu2 = normalized_partition(mu);
    std::vector<int> nu2 = normalized_partition(nu);
    if (psum(lam) + psum(mu2) != psum(nu2)) return 0;
    if (!partition_contains(nu2, mu2)) return 0;

    Tableau target = superstandard(lam);
    int total = int(psum(nu2) - psum(mu2));
    std::vector<std::vector<int>> g(nu2.size());
    for (size_t r = 0; r < nu2.size(); ++r) g[r].assign(nu2[r], 0);
    std::vector<int> cnt(nu2.size(), 0);

    coeff_t out = 0;
    standard_fillings(g, mu2, cnt, 1, total, [&] {
        SkewTableau sk;
        sk.inner = mu2;
        for (size_t r = 0; r < g.size(); ++r) {
            int inner = r < mu2.size() ? mu2[r] : 0;
            sk.rows.rows.emplace_back(g[r].begin() + inner, g[r].end());
        }
        if (jdt_rectify(sk) == target) ++out;
    });
    return out;
}

bool is_grassmannian(const Perm& w, int* k) {
    auto d = w.trimmed().descents();
    if (d.size() > 1) return false;
    if (k) *k = d.empty() ? 0 : d[0];
    return true;
}

std::vector<int> grassmannian_shape(const Perm& w) {
    int k = 0;
    if (!is_grassmannian(w, &k)) throw invalid_input("permutation has several descents");
    if (k == 0) return {};
    if (w.trimmed().window_start() < 1)
        throw invalid_input("grassmannian permutation must fix non-positives");
    std::vector<int> lam;
    for (int j = 1; j <= k; ++j) lam.push_back(w(k + 1 - j) - (k + 1 - j));
    return normalized_partition(lam);
}

Perm grassmannian_perm(const std::vector<int>& lambda, int k) {
    std::vector<int> lam = normalized_partition(lambda);
    if (k < 0 || int(lam.size()) > k)
        throw invalid_input("shape has more rows than k");
    if (lam.empty()) return Perm();
    int n = k + lam[0];
    std::vector<int> vals(n, 0);
    std::vector<char> used(n + 1, 0);
    auto lam_at = [&](int j) { return j <= int(lam.size()) ? lam[j - 1] : 0; };
    for (int i = 1; i <= k; ++i) {
        vals[i - 1] = lam_at(k + 1 - i) + i;
        used[vals[i - 1]] = 1;
    }
    int v = 1;
    for (int i = k + 1; i <= n; ++i) {
        while (used[v]) ++v;
        vals[i - 1] = v;
        used[v] = 1;
    }
    return Perm(1, vals);
}

Tableau bpd_to_ssyt(const Bpd& d) {
    if (d.window_start() != 1)
        throw invalid_input("dictionary needs a dream on window [1, n]");
    Perm w = d.permutation();
    int k = 0;
    if (!is_grassmannian(w, &k)) throw invalid_input("dream is not grassmannian");
    std::vector<int> lam = grassmannian_shape(w);

    Tableau t;
    for (int len : lam) t.rows.emplace_back(len, 0);
    // Blanks travel NW along their diagonals under droops, so the blank set
    // matches the shape's cells diagonal by diagonal, in row order.
    std::map<int, std::vector<int>> blank_rows; // diagonal -> blank row indices
    for (auto& [r, c] : d.blanks()) blank_rows[c - r].push_back(r);
    std::map<int, std::vector<std::pair<int, int>>> shape_cells;
    for (int i = 1; i <= int(lam.size()); ++i)
        for (int j = 1; j <= lam[i - 1]; ++j) shape_cells[j - i].push_back({i, j});
    if (blank_rows.size() != shape_cells.size())
        throw internal_error("blank diagonals disagree with the shape");
    for (auto& [diag, cells] : shape_cells) {
        auto it = blank_rows.find(diag);
        if (it == blank_rows.end() || it->second.size() != cells.size())
            throw internal_error("blank diagonals disagree with the shape");
        for (size_t x = 0; x < cells.size(); ++x)
            t.rows[cells[x].first - 1][cells[x].second - 1] = it->second[x];
    }
    if (!is_semistandard_tableau(t))
        throw internal_error("dictionary image is not semistandard");
    return t;
}

Bpd ssyt_to_bpd(const Tableau& t, int k, const Perm& w) {
    int kw = 0;
    if (!is_grassmannian(w, &kw)) throw invalid_input("permutation has several descents");
    std::vector<int> lam = grassmannian_shape(w);
    if (!lam.empty() && kw != k)
        throw invalid_input("k does not match the permutation's descent");
    if (!is_semistandard_tableau(t) || t.shape() != lam)
        throw invalid_input("tableau is not semistandard of the dream shape");
    for (auto& row : t.rows)
        for (int e : row)
            if (e < 1 || e > k) throw invalid_input("tableau entry outside [1, k]");

    Perm wt = lam.empty() ? Perm() : w.trimmed().embedded(1, w.trimmed().window_end());
    static std::map<Perm, std::map<Tableau, Bpd>> g_cache;
    static std::mutex g_mu;
    std::lock_guard<std::mutex> lock(g_mu);
    auto& dict = g_cache[wt];
    if (dict.empty())
        for (const Bpd& d : all_bpds(wt)) dict.insert({bpd_to_ssyt(d), d});
    auto it = dict.find(t);
    if (it == dict.end()) throw internal_error("tableau missing from the dictionary");
    return it->second;
}

MarkedTableau marked_from_skew(const SkewTableau& t) {
    if (!is_semistandard_skew(t)) throw invalid_input("completion needs a semistandard skew");
    int l = 0;
    for (int r = 0; r < t.n_rows(); ++r)
        if (t.inner_at(r) > 0) l = r + 1;
    MarkedTableau out;
    for (int r = 0; r < t.n_rows(); ++r) {
        std::vector<int> row(t.inner_at(r), (r + 1) - l);
        for (int c = 0; c < t.inner_at(r); ++c) out.marked.insert({r, c});
        row.insert(row.end(), t.rows.rows[r].begin(), t.rows.rows[r].end());
        out.tableau.rows.push_back(std::move(row));
    }
    return out;
}

Tableau marked_tableau_rectify(const MarkedTableau& t, int k,
                               std::vector<MarkedTableauEvent>* trace) {
    if (!is_partition_shape(t.tableau))
        throw invalid_input("marked tableau must have partition shape");
    if (k < int(t.tableau.rows.size()))
        throw invalid_input("k must be at least the number of rows");
    for (auto& [r, c] : t.marked)
        if (r < 0 || r >= int(t.tableau.rows.size()) || c < 0 ||
            c >= int(t.tableau.rows[r].size()))
            throw invalid_input("mark outside the tableau");
    for (int r = 0; r < int(t.tableau.rows.size()); ++r)
        for (int c = 0; c < int(t.tableau.rows[r].size()); ++c) {
            int v = t.tableau.rows[r][c];
            if (v > k || (v < 1 && !t.marked.count({r, c})))
                throw invalid_input("unmarked entries must lie in [1, k]");
        }

    MarkedTableau cur = t;
    auto record = [&](char kind) {
        if (trace) trace->push_back({kind, cur});
    };
    auto len = [&](int r) {
        return r < int(cur.tableau.rows.size()) ? int(cur.tableau.rows[r].size()) : 0;
    };
    auto outer_corner = [&](int r, int c) { return c == len(r) - 1 && len(r + 1) <= c; };

    while (!cur.marked.empty()) {
        auto active = *cur.marked.begin();
        for (auto& p : cur.marked)
            if (p.first > active.first ||
                (p.first == active.first && p.second > active.second))
                active = p;
        auto [r, c] = active;
        bool done = false;
        while (!done) {
            cur.tableau.rows[r][c] += 1;
            record('i');
            if (cur.tableau.rows[r][c] > k)
                throw internal_error("marked entry exceeded k");
            for (;;) {
                int v = cur.tableau.rows[r][c];
                // Deletion at the SE border: the bottom of the marked
                // cell's column must be an outer corner.  At value k the
                // entry bound leaves at most one cell below (holding k);
                // it slides up as the marked cell leaves.
                int rb = c < len(r + 1) ? r + 1 : r;
                if (v == k && outer_corner(rb, c)) {
                    cur.marked.erase({r, c});
                    if (rb == r + 1) cur.tableau.rows[r][c] = cur.tableau.rows[rb][c];
                    cur.tableau.rows[rb].pop_back();
                    if (cur.tableau.rows[rb].empty()) cur.tableau.rows.pop_back();
                    record('d');
                    done = true;
                    break;
                }
                if (c < len(r + 1) && cur.tableau.rows[r + 1][c] == v) {
                    // 2(a): push the equal column entries down one step each.
                    // A chain that reaches k with an equal entry below stops
                    // there; the deletion above handles it on the next pass.
                    do {
                        cur.tableau.rows[r + 1][c] += 1;
                        cur.marked.erase({r, c});
                        cur.marked.insert({r + 1, c});
                        ++r;
                    } while (cur.tableau.rows[r][c] < k && c < len(r + 1) &&
                             cur.tableau.rows[r + 1][c] == cur.tableau.rows[r][c]);
                    record('a');
                    continue;
                }
                if (c + 1 < len(r) && cur.tableau.rows[r][c + 1] == v) {
                    // 2(b): jump to the rightmost equal entry in the row.
                    int c2 = c + 1;
                    while (c2 + 1 < len(r) && cur.tableau.rows[r][c2 + 1] == v) ++c2;
                    cur.marked.erase({r, c});
                    cur.marked.insert({r, c2});
                    c = c2;
                    record('b');
                    continue;
                }
                break;
            }
        }
    }
    return cur.tableau;
}

} // namespace schubert

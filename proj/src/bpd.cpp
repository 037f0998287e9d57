#include "schubert/bpd.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_set>

namespace schubert {

char tile_char(Tile t) {
    switch (t) {
        case Tile::Blank: return '.';
        case Tile::Cross: return '+';
        case Tile::Horizontal: return '-';
        case Tile::Vertical: return '|';
        case Tile::ElbowSE: return 'r';
        case Tile::ElbowNW: return 'j';
    }
    throw internal_error("bad tile");
}

Tile tile_from_char(char c) {
    switch (c) {
        case '.': return Tile::Blank;
        case '+': return Tile::Cross;
        case '-': return Tile::Horizontal;
        case '|': return Tile::Vertical;
        case 'r': return Tile::ElbowSE;
        case 'j': return Tile::ElbowNW;
    }
    throw invalid_input(std::string("bad tile character '") + c + "'");
}

bool tile_has_n(Tile t) {
    return t == Tile::Cross || t == Tile::Vertical || t == Tile::ElbowNW;
}
bool tile_has_e(Tile t) {
    return t == Tile::Cross || t == Tile::Horizontal || t == Tile::ElbowSE;
}
bool tile_has_s(Tile t) {
    return t == Tile::Cross || t == Tile::Vertical || t == Tile::ElbowSE;
}
bool tile_has_w(Tile t) {
    return t == Tile::Cross || t == Tile::Horizontal || t == Tile::ElbowNW;
}

Bpd::Bpd(int window_start, int n)
    : start_(window_start), n_(n), grid_(size_t(n) * n, Tile::Blank) {
    if (n <= 0) throw invalid_input("BPD window must be non-empty");
}

Bpd::Bpd(int window_start, std::vector<std::vector<Tile>> grid)
    : start_(window_start), n_(int(grid.size())) {
    if (n_ == 0) throw invalid_input("BPD window must be non-empty");
    grid_.reserve(size_t(n_) * n_);
    for (auto& row : grid) {
        if (int(row.size()) != n_) throw invalid_input("BPD grid must be square");
        grid_.insert(grid_.end(), row.begin(), row.end());
    }
}

size_t Bpd::idx(int r, int c) const {
    if (!in_window(r, c)) throw internal_error("BPD coordinate outside window");
    return size_t(r - start_) * n_ + size_t(c - start_);
}

bool Bpd::edges_consistent(std::string* why) const {
    auto fail = [&](int r, int c, const char* msg) {
        if (why) {
            std::ostringstream os;
            os << msg << " at (" << r << "," << c << ")";
            *why = os.str();
        }
        return false;
    };
    int lo = start_, hi = window_end();
    for (int r = lo; r <= hi; ++r)
        for (int c = lo; c <= hi; ++c) {
            Tile t = at(r, c);
            // North/west borders carry no pipe ends; south/east carry one per
            // column/row.
            if (r == lo && tile_has_n(t)) return fail(r, c, "pipe leaves north border");
            if (c == lo && tile_has_w(t)) return fail(r, c, "pipe leaves west border");
            if (r == hi && !tile_has_s(t)) return fail(r, c, "no pipe entering from south");
            if (c == hi && !tile_has_e(t)) return fail(r, c, "no pipe exiting east");
            if (r < hi && tile_has_s(t) != tile_has_n(at(r + 1, c)))
                return fail(r, c, "vertical edge mismatch");
            if (c < hi && tile_has_e(t) != tile_has_w(at(r, c + 1)))
                return fail(r, c, "horizontal edge mismatch");
        }
    return true;
}

namespace {

// Trace the pipe entering at the south border of column c; returns the exit
// row.  If cross_rows is non-null, records (row, col) of every Cross the pipe
// passes with the orientation it uses (0 = travelling north, 1 = east).
int trace_pipe(const Bpd& d, int c, std::vector<std::tuple<int, int, int>>* crossings) {
    int r = d.window_end();
    int col = c;
    // Direction of travel: 0 = north, 1 = east.  Entry is from the south.
    int dir = 0;
    int guard = 4 * d.size() * d.size();
    while (true) {
        if (--guard < 0) throw internal_error("pipe trace did not terminate");
        Tile t = d.at(r, col);
        if (dir == 0) {
            // entering from the south edge
            switch (t) {
                case Tile::Vertical: break;
                case Tile::Cross:
                    if (crossings) crossings->push_back({r, col, 0});
                    break;
                case Tile::ElbowSE: dir = 1; break;
                default: throw internal_error("pipe ran into tile with no south edge");
            }
        } else {
            // entering from the west edge
            switch (t) {
                case Tile::Horizontal: break;
                case Tile::Cross:
                    if (crossings) crossings->push_back({r, col, 1});
                    break;
                case Tile::ElbowNW: dir = 0; break;
                default: throw internal_error("pipe ran into tile with no west edge");
            }
        }
        if (dir == 1) {
            if (col == d.window_end()) return r;
            ++col;
        } else {
            if (r == d.window_start()) throw internal_error("pipe escaped north border");
            --r;
        }
    }
}

} // namespace

bool Bpd::is_valid(std::string* why) const {
    if (!edges_consistent(why)) return false;
    // Trace every pipe; collect which pipe occupies each Cross in each
    // orientation, then check no pair meets twice.
    int lo = start_, hi = window_end();
    std::vector<int> exit_row(n_, 0);
    std::vector<std::vector<std::pair<int, int>>> cross_users; // per pipe: (cell idx, orient)
    std::vector<char> row_used(n_, 0);
    std::vector<int> cross_pipe(size_t(n_) * n_ * 2, -1);
    try {
        for (int c = lo; c <= hi; ++c) {
            std::vector<std::tuple<int, int, int>> crossings;
            int r = trace_pipe(*this, c, &crossings);
            if (row_used[r - lo]) {
                if (why) *why = "two pipes exit the same row";
                return false;
            }
            row_used[r - lo] = 1;
            for (auto [cr, cc, orient] : crossings) {
                size_t ci = (size_t(cr - lo) * n_ + size_t(cc - lo)) * 2 + orient;
                cross_pipe[ci] = c - lo; // 0-based label so -1 stays free as a sentinel
            }
        }
    } catch (const internal_error& e) {
        if (why) *why = e.what();
        return false;
    }
    // Each Cross must be used in both orientations (edges consistent implies
    // this, but traces give us the pipe pair); no unordered pair may meet
    // twice (pipes can in principle re-cross with orientations swapped).
    std::unordered_set<long long> met;
    for (int r = lo; r <= hi; ++r)
        for (int c = lo; c <= hi; ++c) {
            if (at(r, c) != Tile::Cross) continue;
            size_t base = (size_t(r - lo) * n_ + size_t(c - lo)) * 2;
            int pn = cross_pipe[base], pe = cross_pipe[base + 1];
            if (pn < 0 || pe < 0) {
                if (why) *why = "cross not covered by two pipes";
                return false;
            }
            long long a = std::min(pn, pe), b = std::max(pn, pe);
            if (!met.insert(a * n_ + b).second) {
                if (why) *why = "two pipes cross twice";
                return false;
            }
        }
    return true;
}

Perm Bpd::permutation() const {
    int lo = start_, hi = window_end();
    std::vector<int> vals(n_, 0);
    std::vector<char> seen(n_, 0);
    for (int c = lo; c <= hi; ++c) {
        int r = trace_pipe(*this, c, nullptr);
        if (seen[r - lo]) throw internal_error("two pipes exit the same row");
        seen[r - lo] = 1;
        vals[r - lo] = c;
    }
    return Perm(lo, std::move(vals));
}

std::vector<std::pair<int, int>> Bpd::blanks() const {
    std::vector<std::pair<int, int>> out;
    for (int r = start_; r <= window_end(); ++r)
        for (int c = start_; c <= window_end(); ++c)
            if (at(r, c) == Tile::Blank) out.push_back({r, c});
    return out;
}

Monomial Bpd::weight() const {
    if (start_ < 1) throw invalid_input("weight needs a window starting at >= 1");
    Monomial m;
    for (auto [r, c] : blanks()) {
        if (int(m.size()) < r) m.resize(r, 0);
        ++m[r - 1];
    }
    return normalized(std::move(m));
}

Bpd Bpd::embedded(int new_start, int new_end) const {
    if (new_start > start_ || new_end < window_end())
        throw invalid_input("embedded: new window does not contain old");
    Bpd out(new_start, new_end - new_start + 1);
    for (int r = new_start; r <= new_end; ++r)
        for (int c = new_start; c <= new_end; ++c) {
            if (in_window(r, c)) out.set(r, c, at(r, c));
            else if (r == c) out.set(r, c, Tile::ElbowSE);
            else if (r < c) out.set(r, c, Tile::Horizontal);
            else out.set(r, c, Tile::Vertical);
        }
    return out;
}

Bpd Bpd::trimmed() const {
    int nlo = start_, nhi = window_end();
    auto nw_ok = [&]() {
        if (nhi - nlo + 1 <= 1 || at(nlo, nlo) != Tile::ElbowSE) return false;
        for (int c = nlo + 1; c <= nhi; ++c)
            if (at(nlo, c) != Tile::Horizontal) return false;
        for (int r = nlo + 1; r <= nhi; ++r)
            if (at(r, nlo) != Tile::Vertical) return false;
        return true;
    };
    auto se_ok = [&]() {
        if (nhi - nlo + 1 <= 1 || at(nhi, nhi) != Tile::ElbowSE) return false;
        for (int c = nlo; c < nhi; ++c)
            if (at(nhi, c) != Tile::Vertical) return false;
        for (int r = nlo; r < nhi; ++r)
            if (at(r, nhi) != Tile::Horizontal) return false;
        return true;
    };
    while (true) {
        if (nw_ok()) { ++nlo; continue; }
        if (se_ok()) { --nhi; continue; }
        break;
    }
    // A fully erased identity leaves one elbow whose window depends on the
    // trim order; pin it to [1,1] like Perm::trimmed does.
    if (nlo == nhi && at(nlo, nlo) == Tile::ElbowSE) {
        Bpd out(1, 1);
        out.set(1, 1, Tile::ElbowSE);
        return out;
    }
    Bpd out(nlo, nhi - nlo + 1);
    for (int r = nlo; r <= nhi; ++r)
        for (int c = nlo; c <= nhi; ++c) out.set(r, c, at(r, c));
    return out;
}

Bpd Bpd::translated(int delta) const {
    Bpd out = *this;
    out.start_ += delta;
    return out;
}

std::string Bpd::ascii() const {
    std::string s;
    s.reserve(size_t(n_) * (n_ + 1));
    for (int r = start_; r <= window_end(); ++r) {
        for (int c = start_; c <= window_end(); ++c) s += tile_char(at(r, c));
        s += '\n';
    }
    return s;
}

Bpd Bpd::from_ascii(int window_start, const std::string& art) {
    std::vector<std::vector<Tile>> rows;
    std::istringstream in(art);
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        // allow indentation in raw-string test fixtures
        size_t first = line.find_first_not_of(' ');
        if (first == std::string::npos) continue;
        std::vector<Tile> row;
        for (char ch : line.substr(first)) row.push_back(tile_from_char(ch));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw invalid_input("empty BPD drawing");
    return Bpd(window_start, std::move(rows));
}

std::string Bpd::key() const {
    std::string s(grid_.size() + 1, 0);
    s[0] = char(start_ + 100);
    for (size_t i = 0; i < grid_.size(); ++i) s[i + 1] = char(int(grid_[i]) + '0');
    return s;
}

Bpd rothe_bpd(const Perm& p) {
    int lo = p.window_start(), hi = p.window_end();
    Bpd d(lo, hi - lo + 1);
    Perm inv = p.inverse();
    for (int i = lo; i <= hi; ++i)
        for (int j = lo; j <= hi; ++j) {
            Tile t;
            if (j == p(i)) t = Tile::ElbowSE;
            else if (i > inv(j) && j > p(i)) t = Tile::Cross;
            else if (i > inv(j)) t = Tile::Vertical;
            else if (j > p(i)) t = Tile::Horizontal;
            else t = Tile::Blank;
            d.set(i, j, t);
        }
    return d;
}

std::vector<Bpd> droops(const Bpd& d) {
    std::vector<Bpd> out;
    int lo = d.window_start(), hi = d.window_end();
    for (int r = lo; r <= hi; ++r)
        for (int c = lo; c <= hi; ++c) {
            if (d.at(r, c) != Tile::ElbowSE) continue;
            for (int r2 = r + 1; r2 <= hi; ++r2)
                for (int c2 = c + 1; c2 <= hi; ++c2) {
                    if (d.at(r2, c2) != Tile::Blank) continue;
                    if (d.at(r2, c) != Tile::Vertical) continue;
                    if (d.at(r, c2) != Tile::Horizontal) continue;
                    bool ok = true;
                    for (int t = r + 1; t < r2 && ok; ++t) {
                        Tile a = d.at(t, c), b = d.at(t, c2);
                        ok = (a == Tile::Vertical || a == Tile::Cross) &&
                             (b == Tile::Blank || b == Tile::Horizontal);
                    }
                    for (int s = c + 1; s < c2 && ok; ++s) {
                        Tile a = d.at(r, s), b = d.at(r2, s);
                        ok = (a == Tile::Horizontal || a == Tile::Cross) &&
                             (b == Tile::Blank || b == Tile::Vertical);
                    }
                    if (!ok) continue;
                    Bpd e = d;
                    e.set(r, c, Tile::Blank);
                    e.set(r2, c, Tile::ElbowSE);
                    e.set(r2, c2, Tile::ElbowNW);
                    e.set(r, c2, Tile::ElbowSE);
                    for (int t = r + 1; t < r2; ++t) {
                        e.set(t, c, d.at(t, c) == Tile::Vertical ? Tile::Blank : Tile::Horizontal);
                        e.set(t, c2, d.at(t, c2) == Tile::Blank ? Tile::Vertical : Tile::Cross);
                    }
                    for (int s = c + 1; s < c2; ++s) {
                        e.set(r, s, d.at(r, s) == Tile::Horizontal ? Tile::Blank : Tile::Vertical);
                        e.set(r2, s, d.at(r2, s) == Tile::Blank ? Tile::Horizontal : Tile::Cross);
                    }
                    if (e.is_valid()) out.push_back(std::move(e));
                }
        }
    return out;
}

std::vector<Bpd> all_bpds(const Perm& p) {
    Bpd start = rothe_bpd(p);
    std::vector<Bpd> out;
    std::unordered_set<std::string> seen;
    std::deque<Bpd> queue;
    queue.push_back(start);
    seen.insert(start.key());
    while (!queue.empty()) {
        Bpd d = std::move(queue.front());
        queue.pop_front();
        for (Bpd& e : droops(d))
            if (seen.insert(e.key()).second) queue.push_back(std::move(e));
        out.push_back(std::move(d));
    }
    return out;
}

Poly bpd_polynomial(const Perm& p) {
    Poly f;
    for (const Bpd& d : all_bpds(p)) f.add_term(d.weight(), 1);
    return f;
}

} // namespace schubert

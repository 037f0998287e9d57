#include "schubert/perm.hpp"

#include <algorithm>
#include <unordered_set>

namespace schubert {

Perm::Perm() : start_(1), vals_{1} {}

Perm::Perm(int window_start, std::vector<int> values)
    : start_(window_start), vals_(std::move(values)) {
    check();
}

void Perm::check() const {
    if (vals_.empty())
        throw invalid_input("permutation window must be non-empty");
    std::vector<char> seen(vals_.size(), 0);
    for (int v : vals_) {
        if (v < start_ || v > window_end())
            throw invalid_input("permutation value " + std::to_string(v) +
                                " outside window");
        if (seen[v - start_]++)
            throw invalid_input("repeated permutation value " +
                                std::to_string(v));
    }
}

Perm Perm::one_line(std::vector<int> values) { return Perm(1, std::move(values)); }

Perm Perm::identity(int window_start, int size) {
    std::vector<int> v(size);
    for (int i = 0; i < size; ++i) v[i] = window_start + i;
    return Perm(window_start, std::move(v));
}

Perm Perm::from_lehmer(const std::vector<int>& code) {
    // w(i) is the (code[i]+1)-th smallest unused value; the window must be
    // large enough that code[i] + i + 1 <= n for all i.
    int n = std::max(1, int(code.size())); // empty code = identity
    for (int i = 0; i < int(code.size()); ++i)
        n = std::max(n, code[i] + i + 1);
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i + 1;
    std::vector<int> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        int c = i < int(code.size()) ? code[i] : 0;
        if (c < 0 || c >= int(pool.size()))
            throw invalid_input("lehmer code entry out of range");
        out.push_back(pool[c]);
        pool.erase(pool.begin() + c);
    }
    return Perm(1, std::move(out));
}

int Perm::operator()(int i) const {
    if (i < start_ || i > window_end()) return i;
    return vals_[i - start_];
}

int Perm::inverse_of(int v) const {
    if (v < start_ || v > window_end()) return v;
    for (int i = 0; i < int(vals_.size()); ++i)
        if (vals_[i] == v) return start_ + i;
    throw internal_error("inverse_of: value not found");
}

Perm Perm::inverse() const {
    std::vector<int> inv(vals_.size());
    for (int i = 0; i < int(vals_.size()); ++i)
        inv[vals_[i] - start_] = start_ + i;
    return Perm(start_, std::move(inv));
}

Perm operator*(const Perm& a, const Perm& b) {
    int s = std::min(a.window_start(), b.window_start());
    int e = std::max(a.window_end(), b.window_end());
    std::vector<int> v(e - s + 1);
    for (int i = s; i <= e; ++i) v[i - s] = a(b(i));
    return Perm(s, std::move(v));
}

bool Perm::operator==(const Perm& o) const {
    int s = std::min(start_, o.start_);
    int e = std::max(window_end(), o.window_end());
    for (int i = s; i <= e; ++i)
        if ((*this)(i) != o(i)) return false;
    return true;
}

long long Perm::length() const {
    long long inv = 0;
    for (int i = 0; i < int(vals_.size()); ++i)
        for (int j = i + 1; j < int(vals_.size()); ++j)
            if (vals_[i] > vals_[j]) ++inv;
    return inv;
}

std::vector<int> Perm::descents() const {
    std::vector<int> d;
    for (int i = 0; i + 1 < int(vals_.size()); ++i)
        if (vals_[i] > vals_[i + 1]) d.push_back(start_ + i);
    return d;
}

bool Perm::is_identity() const {
    for (int i = 0; i < int(vals_.size()); ++i)
        if (vals_[i] != start_ + i) return false;
    return true;
}

std::vector<int> Perm::lehmer() const {
    std::vector<int> c(vals_.size(), 0);
    for (int i = 0; i < int(vals_.size()); ++i)
        for (int j = i + 1; j < int(vals_.size()); ++j)
            if (vals_[i] > vals_[j]) ++c[i];
    return c;
}

Perm Perm::embedded(int new_start, int new_end) const {
    if (new_start > start_ || new_end < window_end())
        throw invalid_input("embedded: new window does not contain old");
    std::vector<int> v(new_end - new_start + 1);
    for (int i = new_start; i <= new_end; ++i) v[i - new_start] = (*this)(i);
    return Perm(new_start, std::move(v));
}

Perm Perm::trimmed() const {
    int lo = start_, hi = window_end();
    while (lo <= hi && (*this)(lo) == lo) ++lo;
    while (hi >= lo && (*this)(hi) == hi) --hi;
    if (lo > hi) return Perm(1, {1});
    std::vector<int> v(vals_.begin() + (lo - start_),
                       vals_.begin() + (hi - start_ + 1));
    return Perm(lo, std::move(v));
}

Perm Perm::normalized_positive() const {
    Perm t = trimmed();
    int shift = 1 - t.start_;
    std::vector<int> v = t.vals_;
    for (int& x : v) x += shift;
    return Perm(1, std::move(v));
}

Perm Perm::times_s_right(int i) const {
    int s = std::min(start_, i);
    int e = std::max(window_end(), i + 1);
    Perm w = embedded(s, e);
    std::swap(w.vals_[i - s], w.vals_[i + 1 - s]);
    return w;
}

Perm Perm::times_s_left(int i) const {
    int s = std::min(start_, i);
    int e = std::max(window_end(), i + 1);
    Perm w = embedded(s, e);
    for (int& v : w.vals_) {
        if (v == i) v = i + 1;
        else if (v == i + 1) v = i;
    }
    return w;
}

bool Perm::operator<(const Perm& o) const {
    Perm a = trimmed(), b = o.trimmed();
    if (a.start_ != b.start_) return a.start_ < b.start_;
    return a.vals_ < b.vals_;
}

size_t PermHash::operator()(const Perm& p) const {
    Perm t = p.trimmed();
    size_t h = std::hash<int>()(t.window_start());
    for (int v : t.values())
        h = h * 1000003u + size_t(v + 64);
    return h;
}

namespace {

// Compact encoding of a fixed-window permutation for BFS dedup: 5 bits per
// value offset, good for windows up to 12 wide.  Falls back to a slower
// vector-keyed set for wider windows.
bool encodable(int n) { return n <= 12; }

uint64_t encode(const std::vector<int>& vals, int start) {
    uint64_t x = 0;
    for (int i = 0; i < int(vals.size()); ++i)
        x |= uint64_t(vals[i] - start) << (5 * i);
    return x;
}

} // namespace

std::vector<Perm> right_weak_prefixes(const Perm& p, long long t) {
    // Layered BFS along the right weak order: u -> u*s_i whenever both
    // length(u*s_i) = length(u)+1 and length((u*s_i)^{-1} p) =
    // length(u^{-1} p) - 1.  Chains in weak order hit every rank, so the
    // layer at rank t is exactly the set asked for.
    long long lp = p.length();
    std::vector<Perm> out;
    if (t < 0 || t > lp) return out;
    int s = p.window_start(), e = p.window_end();
    int n = e - s + 1;

    // u is tracked by its one-line word on the full window of p; alongside it
    // keep u^{-1} p ("rest") so both length conditions are O(1) to update:
    // right-multiplying u by s_i swaps u's positions i,i+1 and left-divides
    // rest by the transposition of values... simplest is to recompute rest's
    // affected entries: rest = u^{-1} p, so (u s_i)^{-1} p = s_i u^{-1} p =
    // s_i * rest (swap of values i,i+1 in rest means swap of the *entries*
    // equal to those; as a left factor it swaps rows). Work with vectors.
    struct Node {
        std::vector<int> u;    // one-line, window [s,e]
        std::vector<int> rest; // (u^{-1} p) one-line, same window
    };
    std::vector<int> id(n), pv(n);
    for (int i = 0; i < n; ++i) id[i] = s + i;
    for (int i = 0; i < n; ++i) pv[i] = p(s + i);

    std::vector<Node> layer{{id, pv}};
    std::unordered_set<uint64_t> seen64;
    std::unordered_set<std::string> seenStr;
    auto mark = [&](const std::vector<int>& u) {
        if (encodable(n)) return seen64.insert(encode(u, s)).second;
        std::string key(u.size(), 0);
        for (size_t i = 0; i < u.size(); ++i) key[i] = char(u[i] - s);
        return seenStr.insert(key).second;
    };
    mark(id);

    for (long long rank = 0; rank < t; ++rank) {
        std::vector<Node> next;
        if (encodable(n)) seen64.clear(); else seenStr.clear();
        for (const Node& nd : layer) {
            for (int i = 0; i + 1 < n; ++i) {
                // length(u * s_i) = length(u) + 1 iff u(i) < u(i+1)
                if (nd.u[i] > nd.u[i + 1]) continue;
                // length(s_i * rest) = length(rest) - 1 iff value (s+i) sits
                // to the right of value (s+i+1) in rest... as a left factor,
                // s_i * rest swaps the values s+i, s+i+1 in rest's entries;
                // that shortens iff position of (s+i) > position of (s+i+1).
                int pi = -1, pi1 = -1;
                for (int j = 0; j < n; ++j) {
                    if (nd.rest[j] == s + i) pi = j;
                    else if (nd.rest[j] == s + i + 1) pi1 = j;
                }
                if (pi < pi1) continue;
                Node nx = nd;
                std::swap(nx.u[i], nx.u[i + 1]);
                for (int& v : nx.rest) {
                    if (v == s + i) v = s + i + 1;
                    else if (v == s + i + 1) v = s + i;
                }
                if (mark(nx.u)) next.push_back(std::move(nx));
            }
        }
        layer = std::move(next);
        if (layer.empty()) break;
    }
    out.reserve(layer.size());
    for (Node& nd : layer) out.emplace_back(s, std::move(nd.u));
    return out;
}

} // namespace schubert

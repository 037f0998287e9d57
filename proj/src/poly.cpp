#include "schubert/poly.hpp"

#include <algorithm>
#include <mutex>

namespace schubert {

Monomial normalized(Monomial m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
    return m;
}

Poly Poly::constant(coeff_t c) { return monomial({}, c); }

Poly Poly::monomial(Monomial m, coeff_t c) {
    Poly p;
    p.add_term(std::move(m), c);
    return p;
}

coeff_t Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(normalized(m));
    return it == terms_.end() ? 0 : it->second;
}

void Poly::add_term(Monomial m, coeff_t c) {
    if (c == 0) return;
    m = normalized(std::move(m));
    auto [it, fresh] = terms_.emplace(std::move(m), c);
    if (!fresh) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, checked_mul(c, -1));
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            Monomial m(std::max(m1.size(), m2.size()), 0);
            for (size_t i = 0; i < m1.size(); ++i) m[i] = m1[i];
            for (size_t i = 0; i < m2.size(); ++i) m[i] += m2[i];
            r.add_term(std::move(m), checked_mul(c1, c2));
        }
    return r;
}

Poly Poly::operator*(coeff_t c) const {
    Poly r;
    for (const auto& [m, k] : terms_) r.add_term(m, checked_mul(k, c));
    return r;
}

coeff_t Poly::evaluate_all_ones() const {
    coeff_t s = 0;
    for (const auto& [m, c] : terms_) s = checked_add(s, c);
    return s;
}

Poly divided_difference(const Poly& f, int i) {
    // Per monomial with x_i^a x_{i+1}^b (rest untouched):
    //   a > b:  sum_{j=0}^{a-b-1} x_i^{b+j} x_{i+1}^{a-1-j}
    //   a < b:  minus the mirrored sum
    //   a == b: 0
    if (i < 1) throw invalid_input("divided_difference index must be >= 1");
    Poly r;
    size_t ia = size_t(i - 1), ib = size_t(i);
    for (const auto& [m, c] : f.terms()) {
        int a = ia < m.size() ? m[ia] : 0;
        int b = ib < m.size() ? m[ib] : 0;
        if (a == b) continue;
        Monomial base = m;
        if (base.size() < ib + 1) base.resize(ib + 1, 0);
        int lo = std::min(a, b), hi = std::max(a, b);
        coeff_t sign = a > b ? c : checked_mul(c, -1);
        for (int j = 0; j < hi - lo; ++j) {
            base[ia] = lo + j;
            base[ib] = hi - 1 - j;
            r.add_term(base, sign);
        }
    }
    return r;
}

namespace {

// Window [1, last moved point]; the element itself is unchanged (identity
// padding only), unlike Perm::normalized_positive which translates.
Perm positive_canonical(const Perm& w) {
    Perm t = w.trimmed();
    if (t.window_start() < 1)
        throw invalid_input("permutation moves non-positive integers; no Schubert polynomial");
    return t.window_start() == 1 ? t : t.embedded(1, t.window_end());
}

std::mutex g_schubert_mu;
std::map<Perm, Poly>& schubert_cache() {
    static std::map<Perm, Poly> cache;
    return cache;
}

Poly schubert_poly_impl(const Perm& w) {
    // w lives on window [1, n].
    {
        std::lock_guard<std::mutex> lk(g_schubert_mu);
        auto it = schubert_cache().find(w);
        if (it != schubert_cache().end()) return it->second;
    }
    const auto& v = w.values();
    int n = int(v.size());
    int asc = 0; // first ascent position, 1-based; 0 = none
    for (int i = 0; i + 1 < n; ++i)
        if (v[i] < v[i + 1]) { asc = i + 1; break; }
    Poly result;
    if (asc == 0) {
        // Longest element of S_n: staircase x1^{n-1} x2^{n-2} ... x_{n-1}.
        Monomial m(n, 0);
        for (int i = 0; i < n; ++i) m[i] = n - 1 - i;
        result = Poly::monomial(std::move(m));
    } else {
        result = divided_difference(schubert_poly_impl(w.times_s_right(asc)), asc);
    }
    {
        std::lock_guard<std::mutex> lk(g_schubert_mu);
        schubert_cache().emplace(w, result);
    }
    return result;
}

} // namespace

Poly schubert_poly(const Perm& w) { return schubert_poly_impl(positive_canonical(w)); }

std::map<Perm, coeff_t> expand_in_schubert_basis(const Poly& f) {
    // Repeatedly strip c * Schubert(perm_from_code(e)) where e is the
    // lex-least exponent vector: x^code(w) is the lex-least monomial of
    // Schubert(w), so the lex-least survivor always names the next summand
    // and its coefficient, and the lex-least term strictly increases, which
    // forces termination (supports stay inside the finite staircase box of
    // the initial window).
    std::map<Perm, coeff_t> out;
    Poly rem = f;
    size_t guard = 0;
    while (!rem.is_zero()) {
        if (++guard > (1u << 22))
            throw internal_error("expand_in_schubert_basis failed to terminate");
        const auto& [m, c] = *rem.terms().begin();
        Perm w = Perm::from_lehmer(m);
        out[positive_canonical(w)] = c;
        rem = rem - schubert_poly(w) * c;
    }
    return out;
}

std::map<Perm, coeff_t> schubert_product_expansion(const Perm& u, const Perm& v) {
    return expand_in_schubert_basis(schubert_poly(u) * schubert_poly(v));
}

} // namespace schubert

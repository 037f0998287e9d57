#include "schubert/io.hpp"

#include <cctype>
#include <sstream>

#include <json.hpp>

namespace schubert {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

int parse_int(const std::string& s) {
    size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw invalid_input("expected an integer, got '" + s + "'");
    }
    if (pos != s.size()) throw invalid_input("trailing junk in integer '" + s + "'");
    return v;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    if (s.empty()) return out;
    for (auto& tok : split(s, ',')) out.push_back(parse_int(tok));
    return out;
}

nlohmann::json perm_json(const Perm& p) {
    return {{"values", p.values()}, {"window_start", p.window_start()}};
}

// Presentation only: pad a positive-window permutation to [1, >=min_end] so
// "3,2@2" prints as "132" and the identity keeps the problem's window size;
// keys and group elements are unaffected.
Perm display_canonical(const Perm& p, int min_end) {
    Perm t = p.trimmed();
    if (t.window_start() < 1) return t;
    int end = std::max(t.window_end(), std::max(min_end, 1));
    if (t.window_start() != 1 || t.window_end() != end) t = t.embedded(1, end);
    return t;
}

nlohmann::json expansion_json(const std::map<Perm, coeff_t>& exp, int min_end) {
    auto arr = nlohmann::json::array();
    for (auto& [sigma, c] : exp)
        arr.push_back(
            {{"sigma", perm_json(display_canonical(sigma, min_end))}, {"coeff", c}});
    return arr;
}

} // namespace

Perm parse_perm(const std::string& s) {
    std::string body = s;
    int start = 1;
    if (auto at = body.find('@'); at != std::string::npos) {
        start = parse_int(body.substr(at + 1));
        body = body.substr(0, at);
    }
    if (!body.empty() && body.front() == '[' && body.back() == ']')
        body = body.substr(1, body.size() - 2);
    if (body.empty()) throw invalid_input("empty permutation");

    std::vector<int> vals;
    bool digits_only = body.find(',') == std::string::npos;
    if (digits_only)
        for (char c : body)
            if (!std::isdigit(static_cast<unsigned char>(c))) digits_only = false;
    if (digits_only && body.size() > 1) {
        for (char c : body) vals.push_back(c - '0');
    } else {
        vals = parse_int_list(body);
    }
    return Perm(start, vals); // the constructor validates bijectivity
}

std::string perm_to_string(const Perm& p) {
    bool shorthand = p.window_start() == 1;
    for (int v : p.values())
        if (v < 1 || v > 9) shorthand = false;
    std::string out;
    if (shorthand) {
        for (int v : p.values()) out += char('0' + v);
        return out;
    }
    for (size_t i = 0; i < p.values().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(p.values()[i]);
    }
    if (p.window_start() != 1) out += "@" + std::to_string(p.window_start());
    return out;
}

std::vector<int> parse_partition(const std::string& s) {
    return normalized_partition(parse_int_list(s));
}

std::string partition_to_string(const std::vector<int>& lam) {
    std::string out;
    for (size_t i = 0; i < lam.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(lam[i]);
    }
    return out;
}

Word parse_word(const std::string& s) { return parse_int_list(s); }

std::string word_to_string(const Word& w) {
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(w[i]);
    }
    return out;
}

Tableau parse_tableau(const std::string& s) {
    Tableau t;
    if (s.empty()) return t;
    for (auto& row : split(s, '/')) {
        t.rows.push_back(parse_int_list(row));
        if (t.rows.back().empty()) throw invalid_input("empty tableau row");
    }
    return t;
}

std::string tableau_to_string(const Tableau& t) {
    std::string out;
    for (size_t r = 0; r < t.rows.size(); ++r) {
        if (r) out += '/';
        for (size_t c = 0; c < t.rows[r].size(); ++c) {
            if (c) out += ',';
            out += std::to_string(t.rows[r][c]);
        }
    }
    return out;
}

std::string poly_to_string(const Poly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (auto& [m, c] : f.terms()) {
        coeff_t a = c;
        if (out.empty()) {
            if (a < 0) out += "-";
        } else {
            out += a < 0 ? " - " : " + ";
        }
        if (a < 0) a = -a;
        std::string vars;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!vars.empty()) vars += '*';
            vars += "x" + std::to_string(i + 1);
            if (m[i] > 1) vars += "^" + std::to_string(m[i]);
        }
        if (vars.empty()) {
            out += std::to_string(a);
        } else {
            if (a != 1) out += std::to_string(a) + "*";
            out += vars;
        }
    }
    return out;
}

std::string expansion_to_string(const std::map<Perm, coeff_t>& exp, int min_end) {
    if (exp.empty()) return "0";
    std::string out;
    for (auto& [sigma, c] : exp) {
        if (!out.empty()) out += " + ";
        out += std::to_string(c) + "*S[" +
               perm_to_string(display_canonical(sigma, min_end)) + "]";
    }
    return out;
}

std::string marked_ascii(const MarkedBpd& m) {
    std::string art = m.bpd.ascii();
    int n = m.bpd.size(), ws = m.bpd.window_start();
    for (auto& [r, c] : m.marks) {
        if (!m.bpd.in_window(r, c)) throw invalid_input("mark outside the window");
        art[size_t(r - ws) * (n + 1) + size_t(c - ws)] = 'x';
    }
    return art;
}

MarkedBpd marked_from_ascii(int window_start, const std::string& art) {
    std::string plain = art;
    std::vector<size_t> marked_at;
    for (size_t i = 0; i < plain.size(); ++i)
        if (plain[i] == 'x') {
            plain[i] = '.';
            marked_at.push_back(i);
        }
    MarkedBpd m{Bpd::from_ascii(window_start, plain), {}, {}, {}};
    // Recover (row, col) by counting cells, mirroring from_ascii's scan.
    int r = window_start, c = window_start;
    size_t next = 0;
    for (size_t i = 0; i < art.size() && next < marked_at.size(); ++i) {
        char ch = art[i];
        if (ch == '\n') {
            if (c != window_start) {
                ++r;
                c = window_start;
            }
            continue;
        }
        if (ch == ' ' || ch == '\r') continue;
        if (i == marked_at[next]) {
            m.marks.insert({r, c});
            ++next;
        }
        ++c;
    }
    if (next != marked_at.size()) throw internal_error("mark positions lost in parsing");
    return m;
}

std::string expansion_to_json(const Perm& pi, const Perm& rho, int k,
                              const std::map<Perm, coeff_t>& exp,
                              const bool* verified, int min_end) {
    nlohmann::json j = {{"pi", perm_json(pi)},
                        {"rho", perm_json(rho)},
                        {"k", k},
                        {"expansion", expansion_json(exp, min_end)}};
    if (verified) j["verified"] = *verified;
    return j.dump(2);
}

std::string multi_expansion_to_json(const std::vector<Perm>& perms,
                                    const std::vector<int>& cuts,
                                    const std::map<Perm, coeff_t>& exp,
                                    const bool* verified, int min_end) {
    auto parr = nlohmann::json::array();
    for (auto& p : perms) parr.push_back(perm_json(p));
    nlohmann::json j = {
        {"perms", parr}, {"cuts", cuts}, {"expansion", expansion_json(exp, min_end)}};
    if (verified) j["verified"] = *verified;
    return j.dump(2);
}

} // namespace schubert

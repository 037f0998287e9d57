#pragma once

#include <map>
#include <string>
#include <vector>

#include "schubert/eg.hpp"
#include "schubert/perm.hpp"
#include "schubert/poly.hpp"
#include "schubert/sepdesc.hpp"
#include "schubert/tableau.hpp"

namespace schubert {

// "2,1,3" or the digit shorthand "213"; an optional "@s" suffix moves the
// window start (default 1).  Brackets around the value list are tolerated.
Perm parse_perm(const std::string& s);
// Digit shorthand when the window starts at 1 and all values are 1..9,
// otherwise "v1,v2,...@start".
std::string perm_to_string(const Perm& p);

// Comma-separated parts, weakly decreasing; "" is the empty shape.
std::vector<int> parse_partition(const std::string& s);
std::string partition_to_string(const std::vector<int>& lam);

Word parse_word(const std::string& s);
std::string word_to_string(const Word& w);

// Rows joined by '/', entries by ',': "1,2/2".
Tableau parse_tableau(const std::string& s);
std::string tableau_to_string(const Tableau& t);

// Terms in lex order, "x1^2*x2 - 3*x3 + 1"; "0" for the zero polynomial.
std::string poly_to_string(const Poly& f);

// "1*S[312] + 2*S[624153] + ..." in key order; "0" when empty.
std::string expansion_to_string(const std::map<Perm, coeff_t>& exp,
                                int min_end = 1);

// Bpd::ascii with marked blanks drawn as 'x'.
std::string marked_ascii(const MarkedBpd& m);
MarkedBpd marked_from_ascii(int window_start, const std::string& art);

// {"pi":{"values":[..],"window_start":s}, "rho":.., "k":..,
//  "expansion":[{"sigma":..,"coeff":..}, ..], "verified":bool}
// verified is omitted when null.
std::string expansion_to_json(const Perm& pi, const Perm& rho, int k,
                              const std::map<Perm, coeff_t>& exp,
                              const bool* verified, int min_end = 1);
// Same, for the iterated product: "perms" array and "cuts" array instead of
// pi/rho/k.
std::string multi_expansion_to_json(const std::vector<Perm>& perms,
                                    const std::vector<int>& cuts,
                                    const std::map<Perm, coeff_t>& exp,
                                    const bool* verified, int min_end = 1);

} // namespace schubert

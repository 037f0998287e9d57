#pragma once

#include <string>
#include <vector>

#include "schubert/perm.hpp"
#include "schubert/poly.hpp"

namespace schubert {

// The six tile types of a bumpless pipe dream.  Pipe segments per tile:
//   Blank: none                Cross '+': N-S and E-W
//   Horizontal '-': E-W        Vertical '|': N-S
//   ElbowSE 'r': S-E           ElbowNW 'j': N-W
enum class Tile : unsigned char { Blank, Cross, Horizontal, Vertical, ElbowSE, ElbowNW };

char tile_char(Tile t);
Tile tile_from_char(char c);

bool tile_has_n(Tile t);
bool tile_has_e(Tile t);
bool tile_has_s(Tile t);
bool tile_has_w(Tile t);

// A square grid of tiles over the window [start, start+n-1] (rows top to
// bottom, columns left to right, both indexed by the window).  Pipes enter
// the south border (one per column, labeled by the column) and exit the east
// border (one per row); the permutation maps exit row to pipe label.
class Bpd {
  public:
    Bpd(int window_start, int n);
    Bpd(int window_start, std::vector<std::vector<Tile>> grid);

    int window_start() const { return start_; }
    int window_end() const { return start_ + n_ - 1; }
    int size() const { return n_; }

    Tile at(int r, int c) const { return grid_[idx(r, c)]; }
    void set(int r, int c, Tile t) { grid_[idx(r, c)] = t; }
    bool in_window(int r, int c) const {
        return r >= start_ && r <= window_end() && c >= start_ && c <= window_end();
    }

    bool operator==(const Bpd& o) const {
        return start_ == o.start_ && grid_ == o.grid_;
    }
    bool operator<(const Bpd& o) const {
        if (start_ != o.start_) return start_ < o.start_;
        if (n_ != o.n_) return n_ < o.n_;
        return grid_ < o.grid_;
    }

    // Border conditions + internal edge matching.
    bool edges_consistent(std::string* why = nullptr) const;
    // Full validity: edges consistent, every pipe traced S->E, and no two
    // pipes crossing twice.
    bool is_valid(std::string* why = nullptr) const;
    // Exit-row -> pipe-label permutation; throws internal_error if invalid.
    Perm permutation() const;

    std::vector<std::pair<int, int>> blanks() const;
    // prod x_row over blanks; requires window_start >= 1.
    Monomial weight() const;

    // Re-express on a containing window; added cells get the identity
    // pattern (ElbowSE on the diagonal, Horizontal above, Vertical below),
    // which extends the permutation by fixed points.
    Bpd embedded(int new_start, int new_end) const;
    // Remove identity border rows/columns (NW: corner ElbowSE + all-
    // Horizontal top row + all-Vertical left column; SE mirrored) while
    // possible.
    Bpd trimmed() const;
    // Same grid, window translated by delta.
    Bpd translated(int delta) const;

    std::string ascii() const;
    static Bpd from_ascii(int window_start, const std::string& art);

    // Compact byte string for hashing/dedup.
    std::string key() const;

  private:
    int start_;
    int n_;
    std::vector<Tile> grid_;
    size_t idx(int r, int c) const;
};

// The Rothe bumpless pipe dream (the droop-free one).
Bpd rothe_bpd(const Perm& p);

// All results of single legal droop moves on d.  A droop relocates an
// ElbowSE at (r,c) to a Blank at (r',c') with r'>r, c'>c, straightening the
// pipe's kink SE-ward; the blank correspondingly reappears at (r,c).
// Results failing full validation (double crossings) are discarded.
std::vector<Bpd> droops(const Bpd& d);

// BPD(p): closure of rothe_bpd(p) under droops.
std::vector<Bpd> all_bpds(const Perm& p);

// Sum of weight monomials over BPD(p); equals the Schubert polynomial.
Poly bpd_polynomial(const Perm& p);

} // namespace schubert

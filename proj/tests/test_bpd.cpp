#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "schubert/bpd.hpp"

using namespace schubert;
using namespace schubert::testing;

TEST_CASE("tile characters and edges") {
    const Tile all[] = {Tile::Blank, Tile::Cross, Tile::Horizontal,
                        Tile::Vertical, Tile::ElbowSE, Tile::ElbowNW};
    const std::string chars = ".+-|rj";
    for (size_t i = 0; i < 6; ++i) {
        CHECK(tile_char(all[i]) == chars[i]);
        CHECK(tile_from_char(chars[i]) == all[i]);
    }
    CHECK_THROWS_AS(tile_from_char('x'), invalid_input);

    CHECK_FALSE(tile_has_n(Tile::Blank));
    CHECK_FALSE(tile_has_e(Tile::Blank));
    CHECK(tile_has_n(Tile::Cross));
    CHECK(tile_has_s(Tile::Cross));
    CHECK(tile_has_e(Tile::Cross));
    CHECK(tile_has_w(Tile::Cross));
    CHECK(tile_has_w(Tile::Horizontal));
    CHECK(tile_has_e(Tile::Horizontal));
    CHECK_FALSE(tile_has_n(Tile::Horizontal));
    CHECK(tile_has_n(Tile::Vertical));
    CHECK(tile_has_s(Tile::Vertical));
    CHECK(tile_has_s(Tile::ElbowSE));
    CHECK(tile_has_e(Tile::ElbowSE));
    CHECK_FALSE(tile_has_n(Tile::ElbowSE));
    CHECK(tile_has_n(Tile::ElbowNW));
    CHECK(tile_has_w(Tile::ElbowNW));
    CHECK_FALSE(tile_has_s(Tile::ElbowNW));
}

TEST_CASE("droop-free diagram of small permutations") {
    CHECK(rothe_bpd(Perm(1, {1, 3, 2})).ascii() == "r--\n|.r\n|r+\n");
    CHECK(rothe_bpd(Perm(1, {2, 1, 3})).ascii() == ".r-\nr+-\n||r\n");
    CHECK(rothe_bpd(Perm(1, {3, 2, 1})).ascii() == "..r\n.r+\nr++\n");
    // Identity: elbows on the diagonal.
    CHECK(rothe_bpd(Perm(1, {1, 2})).ascii() == "r-\n|r\n");
}

TEST_CASE("droop-free diagram blank cells are the inversion diagram") {
    for (const Perm& p : all_perms(4)) {
        Bpd d = rothe_bpd(p);
        CHECK(d.is_valid());
        CHECK(d.permutation() == p);
        CHECK(int(d.blanks().size()) == p.length());
        // Blank at (r, c) iff c < p(r) and r < p^{-1}(c).
        Perm q = p.inverse();
        for (auto [r, c] : d.blanks()) {
            CHECK(c < p(r));
            CHECK(r < q(c));
        }
    }
}

TEST_CASE("droop moves on a 3x3 example") {
    Bpd d = rothe_bpd(Perm(1, {1, 3, 2}));
    auto moved = droops(d);
    REQUIRE(moved.size() == 1);
    CHECK(moved[0].ascii() == ".r-\nrjr\n|r+\n");
    CHECK(moved[0].permutation() == Perm(1, {1, 3, 2}));
    // The fully drooped diagram admits no further droops.
    CHECK(droops(moved[0]).empty());
    // The dominant permutation's diagram admits none at all.
    CHECK(droops(rothe_bpd(Perm(1, {3, 2, 1}))).empty());
}

TEST_CASE("diagram counts for small permutations") {
    CHECK(all_bpds(Perm(1, {1, 3, 2})).size() == 2);
    CHECK(all_bpds(Perm(1, {3, 2, 1})).size() == 1);
    CHECK(all_bpds(Perm(1, {2, 1, 4, 3})).size() == 3);
    CHECK(all_bpds(Perm(1, {1, 4, 3, 2})).size() == 5);
    CHECK(all_bpds(Perm(1, {3, 1, 4, 2})).size() == 2);
    CHECK(all_bpds(Perm(1, {2, 4, 1, 3})).size() == 2);
}

TEST_CASE("enumeration starts at the droop-free diagram and stays valid") {
    for (const Perm& p : all_perms(4)) {
        auto ds = all_bpds(p);
        REQUIRE_FALSE(ds.empty());
        CHECK(ds.front() == rothe_bpd(p));
        std::set<std::string> seen;
        for (const Bpd& d : ds) {
            CHECK(d.is_valid());
            CHECK(d.permutation() == p);
            CHECK(seen.insert(d.key()).second); // no duplicates
        }
    }
}

TEST_CASE("weights come from blank rows") {
    for (const Perm& p : all_perms(4)) {
        for (const Bpd& d : all_bpds(p)) {
            Monomial expect;
            for (auto [r, c] : d.blanks()) {
                if (int(expect.size()) < r) expect.resize(size_t(r), 0);
                expect[size_t(r) - 1] += 1;
            }
            CHECK(d.weight() == normalized(expect));
        }
    }
}

TEST_CASE("generating polynomial matches the divided-difference recursion") {
    CHECK(bpd_polynomial(Perm(1, {1, 3, 2})) == schubert_poly(Perm(1, {1, 3, 2})));
    CHECK(bpd_polynomial(Perm(1, {3, 2, 1})) == schubert_poly(Perm(1, {3, 2, 1})));
    CHECK(bpd_polynomial(Perm(1, {2, 1, 4, 3})) == schubert_poly(Perm(1, {2, 1, 4, 3})));
    CHECK(bpd_polynomial(Perm(1, {2, 4, 1, 3})) == schubert_poly(Perm(1, {2, 4, 1, 3})));
}

TEST_CASE("diagrams over translated windows") {
    Perm p(1, {1, 3, 2});
    Perm shifted(-2, {-2, 0, -1}); // same pattern three steps left
    Bpd d = rothe_bpd(shifted);
    CHECK(d.window_start() == -2);
    CHECK(d.permutation() == shifted);
    CHECK(d.ascii() == rothe_bpd(p).ascii());
    CHECK(rothe_bpd(p).translated(-3) == d);
    CHECK(d.translated(3) == rothe_bpd(p));
    CHECK(all_bpds(shifted).size() == 2);
}

TEST_CASE("embedding and trimming") {
    Bpd d = rothe_bpd(Perm(1, {1, 3, 2}));
    Bpd e = d.embedded(0, 5);
    CHECK(e.window_start() == 0);
    CHECK(e.window_end() == 5);
    CHECK(e.permutation() == Perm(1, {1, 3, 2}));
    CHECK(e.blanks() == d.blanks()); // absolute positions survive embedding
    // 132 fixes 1, so its identity top row trims away.
    CHECK(d.trimmed() == Bpd::from_ascii(2, ".r\nr+\n"));
    CHECK(e.trimmed() == d.trimmed());
    // 321 moves everything; nothing trims.
    Bpd full = rothe_bpd(Perm(1, {3, 2, 1}));
    CHECK(full.trimmed() == full);

    // The identity trims to a 1x1 elbow pinned at window [1,1].
    Bpd id = rothe_bpd(Perm(1, {1, 2, 3, 4}));
    CHECK(id.trimmed().size() == 1);
    CHECK(id.trimmed().window_start() == 1);
    CHECK(id.trimmed().at(1, 1) == Tile::ElbowSE);
    CHECK(rothe_bpd(Perm(0, {0, 1, 2})).trimmed() == id.trimmed());

    for (const Perm& p : all_perms(4)) {
        for (const Bpd& d4 : all_bpds(p)) {
            CHECK(d4.embedded(-1, 6).trimmed() == d4.trimmed());
            CHECK(d4.translated(5).translated(-5) == d4);
        }
    }
}

TEST_CASE("validation rejects broken grids") {
    Bpd d = rothe_bpd(Perm(1, {1, 3, 2}));
    d.set(1, 1, Tile::Blank); // breaks the pipe entering column 1
    std::string why;
    CHECK_FALSE(d.edges_consistent(&why));
    CHECK_FALSE(why.empty());
    CHECK_FALSE(d.is_valid());
    CHECK_THROWS_AS(d.permutation(), internal_error);
}

TEST_CASE("validation rejects pipes that cross twice") {
    // Edge-consistent grid where the pipes entering columns 1 and 2 cross at
    // (3,2) and again at (2,3).
    Bpd d = Bpd::from_ascii(1,
                            "..r-\n"
                            ".r+-\n"
                            "r+jr\n"
                            "||r+\n");
    std::string why;
    CHECK(d.edges_consistent(&why));
    CHECK_FALSE(d.is_valid(&why));
    CHECK_FALSE(why.empty());
}

TEST_CASE("ascii round trip") {
    for (const Perm& p : all_perms(4)) {
        for (const Bpd& d : all_bpds(p)) {
            CHECK(Bpd::from_ascii(d.window_start(), d.ascii()) == d);
        }
    }
    // Leading blank lines and indentation are tolerated.
    Bpd d = Bpd::from_ascii(1, "\n  r--\n  |.r\n  |r+\n");
    CHECK(d == rothe_bpd(Perm(1, {1, 3, 2})));
    CHECK_THROWS_AS(Bpd::from_ascii(1, "r-\n|"), invalid_input);
    CHECK_THROWS_AS(Bpd::from_ascii(1, "rx\n|r\n"), invalid_input);
}

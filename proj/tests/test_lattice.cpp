#include <set>

#include "doctest.h"
#include "latwig/lattice.hpp"
#include "oracles.hpp"

using namespace latwig;

TEST_SUITE("lattice") {
  TEST_CASE("canonical_rep") {
    CHECK(canonical_rep(7, LatticeDim(5)) == 2);
    CHECK(canonical_rep(-1, LatticeDim(4)) == 3);
    CHECK(canonical_rep(0, LatticeDim(3)) == 0);
    CHECK(canonical_rep(-12, LatticeDim(4)) == 0);
    CHECK_THROWS_AS(LatticeDim(0), std::invalid_argument);
  }

  TEST_CASE("gcd_decompose") {
    const auto a = gcd_decompose(2, 4, LatticeDim(5));
    CHECK(a.xi == 2);
    CHECK(a.sigma == 1);
    CHECK(a.tau == 2);
    const auto b = gcd_decompose(0, 3, LatticeDim(5));
    CHECK(b.xi == 3);
    CHECK(b.sigma == 0);
    CHECK(b.tau == 1);
    const auto c = gcd_decompose(3, 3, LatticeDim(7));
    CHECK(c.xi == 3);
    CHECK(c.sigma == 1);
    CHECK(c.tau == 1);
    CHECK_THROWS_AS(gcd_decompose(0, 0, LatticeDim(5)), std::invalid_argument);
    CHECK_THROWS_AS(gcd_decompose(5, 1, LatticeDim(5)), std::invalid_argument);
  }

  TEST_CASE("gcd_decompose round trip") {
    for (int N = 1; N <= 9; ++N) {
      const LatticeDim n(N);
      for (int s = 0; s < N; ++s)
        for (int t = 0; t < N; ++t) {
          if (s == 0 && t == 0) continue;
          const auto d = gcd_decompose(s, t, n);
          CHECK(d.xi * d.sigma == s);
          CHECK(d.xi * d.tau == t);
          CHECK(gcd(d.sigma, d.tau) == 1);
        }
    }
  }

  TEST_CASE("sl2_complete examples") {
    CHECK(sl2_complete(2, 1) == SL2Element{2, 1, 1, 1});
    CHECK(sl2_complete(1, 0) == SL2Element{1, 0, 0, 1});
    CHECK(sl2_complete(0, 1) == SL2Element{0, 1, -1, 0});
    CHECK_THROWS_AS(sl2_complete(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(sl2_complete(0, 0), std::invalid_argument);
  }

  TEST_CASE("sl2_complete agrees with extended Euclid and takes the smallest mu") {
    for (std::int64_t k = -7; k <= 11; ++k)
      for (std::int64_t l = -7; l <= 11; ++l) {
        if (gcd(k, l) != 1) continue;
        const SL2Element g = sl2_complete(k, l);
        CHECK(g.determinant() == 1);
        CHECK(g.kappa == k);
        CHECK(g.lambda == l);
        if (k == 0) continue;
        // Euclid gives k x + l y = +-1; (mu, nu) = (-y, x) up to sign, then
        // reduce mu into [0, |k|).
        const auto [gg, x, y] = oracle::egcd(k, l);
        const std::int64_t sign = gg;  // +-1
        const std::int64_t ak = k < 0 ? -k : k;
        std::int64_t mu = ((-y * sign) % ak + ak) % ak;
        CHECK(g.mu == mu);
      }
  }

  TEST_CASE("sl2_enumerate count matches brute force and closed form") {
    CHECK(sl2_enumerate(LatticeDim(2)).size() == 6);
    CHECK(sl2_enumerate(LatticeDim(3)).size() == 24);
    CHECK(sl2_enumerate(LatticeDim(1)).size() == 1);
    for (int N = 1; N <= 9; ++N) {
      const auto elems = sl2_enumerate(LatticeDim(N));
      CHECK(static_cast<std::int64_t>(elems.size()) == sl2_order(LatticeDim(N)));
      if (N <= 6) CHECK(static_cast<std::int64_t>(elems.size()) == oracle::sl2_count(N));
    }
    CHECK_THROWS_AS(sl2_enumerate(LatticeDim(10)), std::domain_error);
    CHECK(sl2_enumerate(LatticeDim(10), 10).size() == 720);
  }

  TEST_CASE("sl2_enumerate yields exact determinant 1 and distinct residue classes") {
    for (int N = 1; N <= 9; ++N) {
      const LatticeDim n(N);
      std::set<std::array<int, 4>> classes;
      for (const auto& g : sl2_enumerate_with_lifts(n)) {
        CHECK(g.determinant() == 1);
        classes.insert({canonical_rep(g.kappa, n), canonical_rep(g.lambda, n), canonical_rep(g.mu, n),
                        canonical_rep(g.nu, n)});
      }
      CHECK(static_cast<std::int64_t>(classes.size()) == sl2_order(n));
    }
  }

  TEST_CASE("relift preserves the class and moves every entry") {
    const LatticeDim n(5);
    for (const auto& g : sl2_enumerate(n)) {
      const SL2Element h = g.relift(n);
      CHECK(h.determinant() == 1);
      CHECK(canonical_rep(h.kappa - g.kappa, n) == 0);
      CHECK(canonical_rep(h.lambda - g.lambda, n) == 0);
      CHECK(canonical_rep(h.mu - g.mu, n) == 0);
      CHECK(canonical_rep(h.nu - g.nu, n) == 0);
      CHECK_FALSE(h == g);
    }
  }

  TEST_CASE("line_points examples") {
    const LatticeDim n(3);
    const auto horiz = line_points(SL2Element{1, 0, 0, 1}, 2, n);
    CHECK(horiz.points == std::vector<Site>{{0, 2}, {1, 2}, {2, 2}});
    const auto vert = line_points(SL2Element{0, 1, -1, 0}, 1, n);
    CHECK(vert.points == std::vector<Site>{{2, 0}, {2, 1}, {2, 2}});
    const auto diag = line_points(SL2Element{1, 1, 0, 1}, 0, n);
    CHECK(diag.points == std::vector<Site>{{0, 0}, {1, 1}, {2, 2}});
    CHECK_THROWS_AS(line_points(SL2Element{3, 3, 0, 1}, 0, n), std::invalid_argument);
  }

  TEST_CASE("lines of a direction partition the lattice and match a grid scan") {
    for (int N = 1; N <= 9; ++N) {
      const LatticeDim n(N);
      for (const auto& g : sl2_enumerate_with_lifts(n)) {
        if (gcd(g.kappa, g.lambda) != 1) continue;
        std::set<std::pair<int, int>> seen;
        for (int p0 = 0; p0 < N; ++p0) {
          const auto line = line_points(g, p0, n);
          REQUIRE(line.points.size() == static_cast<std::size_t>(N));
          std::set<std::pair<int, int>> pts;
          for (const auto& s : line.points) {
            CHECK(line_label(g, s, n) == p0);
            pts.emplace(s.q, s.p);
            seen.emplace(s.q, s.p);
          }
          CHECK(pts.size() == static_cast<std::size_t>(N));
          const auto scanned = oracle::scan_line(g.kappa, g.lambda, p0, N);
          CHECK(std::set<std::pair<int, int>>(scanned.begin(), scanned.end()) == pts);
        }
        CHECK(seen.size() == static_cast<std::size_t>(N * N));
      }
    }
  }

  TEST_CASE("product is the matrix product") {
    const SL2Element a{2, 1, 1, 1};
    const SL2Element b{1, 3, 0, 1};
    const SL2Element ab = a * b;
    CHECK(ab.determinant() == 1);
    // [[2,1],[1,1]] * [[1,0],[3,1]] = [[5,1],[4,1]]
    CHECK(ab == SL2Element{5, 4, 1, 1});
    CHECK(a * kIdentity == a);
  }
}

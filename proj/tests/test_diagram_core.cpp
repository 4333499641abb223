#include <algorithm>  // for sort, all_of
#include <cstdint>    // for uint64_t
#include <functional> // for function
#include <map>        // for map
#include <numeric>    // for iota
#include <vector>     // for vector

#include "catch2/catch_amalgamated.hpp"

#include "diagcat/combinatorics.hpp"
#include "diagcat/error.hpp"
#include "diagcat/partition.hpp"

using namespace diagcat;
using Blocks = std::vector<std::vector<int>>;

namespace {
  // Oracles, written against signed labels only.

  struct DSU {
    std::vector<int> p;
    explicit DSU(int n) : p(n) {
      std::iota(p.begin(), p.end(), 0);
    }
    int find(int x) {
      return p[x] == x ? x : p[x] = find(p[x]);
    }
    void unite(int a, int b) {
      p[find(a)] = find(b);
    }
  };

  // Product graph on top row 0..m-1, middle m..m+n-1, bottom m+n..m+n+q-1.
  std::pair<Blocks, std::size_t>
  naive_compose(int m, int n, int q, Blocks const& a, Blocks const& b) {
    DSU  d(m + n + q);
    auto va = [&](int l) { return l > 0 ? l - 1 : m + (-l) - 1; };
    auto vb = [&](int l) { return l > 0 ? m + l - 1 : m + n + (-l) - 1; };
    for (auto const& blk : a) {
      for (auto l : blk) {
        d.unite(va(blk[0]), va(l));
      }
    }
    for (auto const& blk : b) {
      for (auto l : blk) {
        d.unite(vb(blk[0]), vb(l));
      }
    }
    std::map<int, std::vector<int>> comps;
    std::map<int, bool>             outer;
    for (int v = 0; v < m + n + q; ++v) {
      comps[d.find(v)];
      if (v < m) {
        comps[d.find(v)].push_back(v + 1);
        outer[d.find(v)] = true;
      } else if (v >= m + n) {
        comps[d.find(v)].push_back(-(v - m - n + 1));
        outer[d.find(v)] = true;
      }
    }
    Blocks      out;
    std::size_t floating = 0;
    for (auto& [r, c] : comps) {
      if (outer[r]) {
        out.push_back(c);
      } else {
        ++floating;
      }
    }
    return {out, floating};
  }

  // All set partitions of {0..k-1} as restricted growth strings.
  std::vector<std::vector<int>> rgs(int k) {
    std::vector<std::vector<int>> out;
    std::vector<int>              a(k, 0);
    std::function<void(int, int)> go = [&](int i, int mx) {
      if (i == k) {
        out.push_back(a);
        return;
      }
      for (int v = 0; v <= mx + 1; ++v) {
        a[i] = v;
        go(i + 1, std::max(mx, v));
      }
    };
    go(0, -1);
    return out;
  }

  Blocks blocks_of_rgs(int m, std::vector<int> const& a) {
    Blocks out;
    for (std::size_t v = 0; v < a.size(); ++v) {
      if (static_cast<std::size_t>(a[v]) >= out.size()) {
        out.resize(a[v] + 1);
      }
      int const l = static_cast<int>(v) < m ? static_cast<int>(v) + 1
                                            : -(static_cast<int>(v) - m + 1);
      out[a[v]].push_back(l);
    }
    return out;
  }

  // Position on the boundary circle +1..+m, -n..-1.
  bool crossing_free(int m, int n, Blocks const& bs) {
    auto pos = [&](int l) { return l > 0 ? l - 1 : m + (n + l); };
    std::vector<int> owner(m + n);
    for (std::size_t b = 0; b < bs.size(); ++b) {
      for (auto l : bs[b]) {
        owner[pos(l)] = static_cast<int>(b);
      }
    }
    int const N = m + n;
    for (int a = 0; a < N; ++a) {
      for (int b = a + 1; b < N; ++b) {
        for (int c = b + 1; c < N; ++c) {
          for (int d = c + 1; d < N; ++d) {
            if (owner[a] == owner[c] && owner[b] == owner[d]
                && owner[a] != owner[b]) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  std::uint64_t bell_triangle(int k) {
    std::vector<std::uint64_t> row{1};
    for (int i = 0; i < k; ++i) {
      std::vector<std::uint64_t> next{row.back()};
      for (auto x : row) {
        next.push_back(next.back() + x);
      }
      row = next;
    }
    return row.front();
  }

  Partition fig_alpha() {
    return Partition::make(
        6, 8, {{1, 4}, {2, 3, -4, -5}, {5, 6}, {-1, -2, -6}, {-3}, {-7, -8}});
  }

  Partition fig_beta() {
    return Partition::make(8,
                           7,
                           {{1, 2},
                            {3, 4, -1},
                            {5, -4, -5},
                            {6},
                            {7},
                            {8, -6, -7},
                            {-2},
                            {-3}});
  }
}  // namespace

TEST_CASE("make_partition", "[diagram_core]") {
  CHECK(Partition::make(0, 0, {}) == Partition::identity(0));
  CHECK(Partition::make(2, 2, {{1, -1}, {2, -2}}) == Partition::identity(2));
  CHECK(Partition::make(1, 1, {{1}, {-1}})
        == generator(GenSpec::indexed(GenFamily::eps, 1, 1),
                     DiagramFlavour::partition));
  CHECK(Partition::identity(3).blocks() == Blocks{{1, -1}, {2, -2}, {3, -3}});
  // Raw block order does not matter.
  CHECK(Partition::make(2, 1, {{-1, 2}, {1}}) == Partition::make(2, 1, {{1}, {2, -1}}));

  auto code = [](auto&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.code();
    }
    return ErrorCode::unknown_name;
  };
  CHECK(code([] { Partition::make(1, 1, {{1, -2}}); }) == ErrorCode::out_of_range);
  CHECK(code([] { Partition::make(1, 1, {{1, -1}, {1}}); })
        == ErrorCode::duplicate_label);
  CHECK(code([] { Partition::make(2, 1, {{1, -1}}); })
        == ErrorCode::incomplete_cover);
}

TEST_CASE("text round trip", "[diagram_core]") {
  auto e = Partition::make(2, 2, {{1}, {2, -2}, {-1}});
  CHECK(e.to_string() == "P[2,2]{ {1} {2,-2} {-1} }");
  for (int m = 0; m <= 3; ++m) {
    for (int n = 0; n <= 3; ++n) {
      for (auto const& p : enumerate_homset(DiagramKind::P, m, n)) {
        REQUIRE(parse_partition(p.to_string()) == p);
      }
    }
  }
  CHECK_THROWS_AS(parse_partition("P[1,1]{ {1,-1} "), Error);
}

TEST_CASE("reference product", "[diagram_core]") {
  auto c = compose(fig_alpha(), fig_beta());
  CHECK(c.diagram
        == Partition::make(
            6, 7, {{1, 4}, {2, 3, -1, -4, -5}, {5, 6}, {-6, -7}, {-2}, {-3}}));
  CHECK(c.floating == 1);
  CHECK_FALSE(is_planar(fig_alpha()));
  CHECK(is_planar(fig_beta()));
  CHECK(involute(involute(fig_alpha())) == fig_alpha());
}

TEST_CASE("compose against the product graph oracle", "[diagram_core]") {
  for (int m = 0; m <= 2; ++m) {
    for (int n = 0; n <= 2; ++n) {
      for (int q = 0; q <= 2; ++q) {
        for (auto const& a : enumerate_homset(DiagramKind::P, m, n)) {
          for (auto const& b : enumerate_homset(DiagramKind::P, n, q)) {
            auto [bs, fl] = naive_compose(m, n, q, a.blocks(), b.blocks());
            auto c        = compose(a, b);
            REQUIRE(c.diagram == Partition::make(m, q, bs));
            REQUIRE(c.floating == fl);
          }
        }
      }
    }
  }
  CHECK_THROWS_AS(compose(Partition::identity(1), Partition::identity(2)),
                  Error);
}

TEST_CASE("generator diagrams", "[diagram_core]") {
  auto const part   = DiagramFlavour::partition;
  auto const brauer = DiagramFlavour::brauer;
  auto       eps    = generator(GenSpec::indexed(GenFamily::eps, 1, 1), part);
  auto       sq     = compose(eps, eps);
  CHECK(sq.diagram == eps);
  CHECK(sq.floating == 1);
  for (std::size_t n = 0; n <= 4; ++n) {
    auto l  = generator(GenSpec::graded(GenFamily::lambda, n), part);
    auto r  = generator(GenSpec::graded(GenFamily::rho_chop, n), part);
    auto lr = compose(l, r);
    CHECK(lr.diagram == Partition::identity(n));
    CHECK(lr.floating == 1);
    CHECK(involute(l) == r);
    CHECK(compose(Partition::identity(n), l).diagram == l);
    CHECK(compose(Partition::identity(n), l).floating == 0);
  }
  CHECK(generator(GenSpec::nullary(GenFamily::X), part)
        == Partition::make(2, 2, {{1, -2}, {2, -1}}));
  CHECK(generator(GenSpec::nullary(GenFamily::D), part)
        == Partition::make(2, 2, {{1, 2, -1, -2}}));
  CHECK(generator(GenSpec::graded(GenFamily::lambda, 2), brauer)
        == Partition::make(2, 4, {{1, -1}, {2, -2}, {-3, -4}}));
  CHECK(generator(GenSpec::indexed(GenFamily::tau, 1, 2), brauer)
        == Partition::make(2, 2, {{1, 2}, {-1, -2}}));
  CHECK(generator(GenSpec::indexed(GenFamily::tau, 1, 2), part)
        == Partition::make(2, 2, {{1, 2, -1, -2}}));
  CHECK(generator(GenSpec::indexed(GenFamily::sigma, 1, 2), part)
        == Partition::make(2, 2, {{1, -2}, {2, -1}}));
  CHECK_THROWS_AS(generator(GenSpec::nullary(GenFamily::V), part), Error);
  CHECK_THROWS_AS(generator(GenSpec::indexed(GenFamily::mu, 1, 2), part), Error);
}

TEST_CASE("tensor and involution", "[diagram_core]") {
  CHECK(tensor(Partition::identity(2), Partition::identity(3))
        == Partition::identity(5));
  CHECK(tensor(fig_alpha(), Partition::identity(0)) == fig_alpha());
  auto eps = Partition::make(1, 1, {{1}, {-1}});
  CHECK(tensor(eps, eps) == Partition::make(2, 2, {{1}, {2}, {-1}, {-2}}));
  CHECK(tensor(Partition::make(1, 2, {{1, -2}, {-1}}), fig_beta()).dom() == 9);
  for (std::size_t n = 0; n <= 4; ++n) {
    CHECK(involute(Partition::identity(n)) == Partition::identity(n));
  }
  // Shifted labels: a block A u B' of the right factor becomes (A+m) u (B+n)'.
  auto a = Partition::make(1, 2, {{1, -2}, {-1}});
  auto b = Partition::make(2, 1, {{1, 2, -1}});
  CHECK(tensor(a, b) == Partition::make(3, 3, {{1, -2}, {-1}, {2, 3, -3}}));
}

TEST_CASE("classification", "[diagram_core]") {
  for (std::size_t n = 0; n <= 4; ++n) {
    auto c = classify(Partition::identity(n));
    CHECK((c.planar && c.brauer && c.tl));
  }
  auto s = classify(Partition::make(2, 2, {{1, -2}, {2, -1}}));
  CHECK(s.brauer);
  CHECK_FALSE(s.planar);
  CHECK_FALSE(s.tl);

  // Against the crossing oracle, on every partition with m + n <= 6.
  for (int m = 0; m <= 3; ++m) {
    for (int n = 0; n <= 3; ++n) {
      for (auto const& a : enumerate_homset(DiagramKind::P, m, n)) {
        auto bs = a.blocks();
        bool br = std::all_of(
            bs.begin(), bs.end(), [](auto const& b) { return b.size() == 2; });
        REQUIRE(is_planar(a) == crossing_free(m, n, bs));
        REQUIRE(is_brauer(a) == br);
      }
    }
  }
}

TEST_CASE("closure of planar and Brauer diagrams", "[diagram_core]") {
  for (auto kind : {DiagramKind::PlanarP, DiagramKind::B, DiagramKind::TL}) {
    for (int m = 0; m <= 2; ++m) {
      for (int n = 0; n <= 2; ++n) {
        for (int q = 0; q <= 2; ++q) {
          for (auto const& a : enumerate_homset(kind, m, n)) {
            for (auto const& b : enumerate_homset(kind, n, q)) {
              REQUIRE(belongs_to(compose(a, b).diagram, kind));
              REQUIRE(belongs_to(tensor(a, b), kind));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("hom-set enumeration against brute force", "[diagram_core]") {
  for (int m = 0; m <= 4; ++m) {
    for (int n = 0; n <= 4; ++n) {
      std::map<DiagramKind, std::vector<Partition>> brute;
      for (auto const& a : rgs(m + n)) {
        auto bs = blocks_of_rgs(m, a);
        auto p  = Partition::make(m, n, bs);
        bool br = std::all_of(
            bs.begin(), bs.end(), [](auto const& b) { return b.size() == 2; });
        bool pl = crossing_free(m, n, bs);
        brute[DiagramKind::P].push_back(p);
        if (pl) {
          brute[DiagramKind::PlanarP].push_back(p);
        }
        if (br) {
          brute[DiagramKind::B].push_back(p);
        }
        if (br && pl) {
          brute[DiagramKind::TL].push_back(p);
        }
      }
      for (auto kind : {DiagramKind::P, DiagramKind::PlanarP, DiagramKind::B,
                        DiagramKind::TL}) {
        auto expected = brute[kind];
        std::sort(expected.begin(), expected.end());
        auto got = enumerate_homset(kind, m, n);
        REQUIRE(got == expected);
      }
    }
  }
  CHECK(enumerate_homset(DiagramKind::P, 1, 1).size() == 2);
  CHECK(enumerate_homset(DiagramKind::TL, 0, 6).size() == 5);
  CHECK(enumerate_homset(DiagramKind::B, 1, 2).empty());
  CHECK_THROWS_AS(enumerate_homset(DiagramKind::P, 5, 5, 1000), Error);
}

TEST_CASE("combinatorial closed forms", "[diagram_core]") {
  namespace cb = combinatorics;
  for (int k = 0; k <= 12; ++k) {
    CHECK(cb::bell(k) == bell_triangle(k));
  }
  CHECK(cb::bell(4) == 15);
  CHECK(cb::bell(6) == 203);
  std::vector<std::uint64_t> cat{1};
  for (int k = 1; k <= 10; ++k) {
    std::uint64_t c = 0;
    for (int i = 0; i < k; ++i) {
      c += cat[i] * cat[k - 1 - i];
    }
    cat.push_back(c);
    CHECK(cb::catalan(k) == c);
  }
  CHECK(cb::perfect_matchings(6) == 15);  // 5!!
  CHECK(cb::perfect_matchings(10) == 945);
  CHECK(cb::binomial(7, 3) == 35);
  CHECK(cb::factorial(6) == 720);
}

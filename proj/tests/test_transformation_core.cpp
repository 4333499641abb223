#include <algorithm>  // for sort
#include <cstdint>    // for uint32_t
#include <vector>     // for vector

#include "catch2/catch_amalgamated.hpp"

#include "diagcat/error.hpp"
#include "diagcat/partial_map.hpp"
#include "diagcat/semantics.hpp"

using namespace diagcat;
using Img = std::vector<PartialMap::point_type>;

namespace {
  // Every partial map [m] -> [n], 0 meaning undefined.
  std::vector<PartialMap> all_partial(std::size_t m, std::size_t n) {
    std::vector<PartialMap> out;
    Img                     img(m, 0);
    while (true) {
      out.emplace_back(m, n, img);
      std::size_t x = 0;
      while (x < m && img[x] == n) {
        img[x++] = 0;
      }
      if (x == m) {
        break;
      }
      ++img[x];
    }
    return out;
  }

  bool total(PartialMap const& f) {
    for (std::size_t x = 1; x <= f.dom(); ++x) {
      if (f.image(x) == 0) {
        return false;
      }
    }
    return true;
  }

  bool injective(PartialMap const& f) {
    for (std::size_t x = 1; x <= f.dom(); ++x) {
      for (std::size_t y = x + 1; y <= f.dom(); ++y) {
        if (f.image(x) != 0 && f.image(x) == f.image(y)) {
          return false;
        }
      }
    }
    return true;
  }

  bool isotone(PartialMap const& f) {
    for (std::size_t x = 1; x <= f.dom(); ++x) {
      for (std::size_t y = x + 1; y <= f.dom(); ++y) {
        if (f.image(x) != 0 && f.image(y) != 0 && f.image(x) > f.image(y)) {
          return false;
        }
      }
    }
    return true;
  }

  bool oracle(PartialMap const& f, MapKind k) {
    switch (k) {
      case MapKind::PT:
        return true;
      case MapKind::T:
        return total(f);
      case MapKind::I:
        return injective(f);
      case MapKind::PO:
        return isotone(f);
      case MapKind::O:
        return isotone(f) && total(f);
      case MapKind::OI:
        return isotone(f) && injective(f);
    }
    return false;
  }

  constexpr MapKind kinds[]
      = {MapKind::PT, MapKind::T, MapKind::I, MapKind::PO, MapKind::O, MapKind::OI};
}  // namespace

TEST_CASE("relational composition", "[transformation_core]") {
  PartialMap a(4, 5, Img{2, 4, 2, 1});
  PartialMap b(5, 3, Img{0, 3, 3, 3, 2});
  CHECK(compose(a, b) == PartialMap(4, 3, Img{3, 3, 3, 0}));
  CHECK(compose(a, b).to_string() == "F[4,3]{1:3 2:3 3:3}");
  CHECK(compose(PartialMap::identity(4), a) == a);
  PartialMap empty(5, 3);
  CHECK(compose(a, empty) == PartialMap(4, 3));
  CHECK_THROWS_AS(compose(a, a), Error);
  CHECK(parse_partial_map(a.to_string()) == a);
}

TEST_CASE("tensor of maps", "[transformation_core]") {
  CHECK(tensor(PartialMap::identity(1), PartialMap::identity(1))
        == PartialMap::identity(2));
  PartialMap U(1, 0), Ubar(0, 1);
  CHECK(tensor(Ubar, PartialMap::identity(1)) == PartialMap(1, 2, Img{2}));
  CHECK(tensor(U, Ubar) == PartialMap(1, 1));
}

TEST_CASE("kind predicates", "[transformation_core]") {
  for (std::size_t n = 0; n <= 4; ++n) {
    auto id = PartialMap::identity(n);
    CHECK((is_total(id) && is_injective(id) && is_isotone(id)));
  }
  PartialMap X(2, 2, Img{2, 1});
  CHECK((is_total(X) && is_injective(X)));
  CHECK_FALSE(is_isotone(X));
  PartialMap V(2, 1, Img{1, 1});
  CHECK((is_total(V) && is_isotone(V)));
  CHECK_FALSE(is_injective(V));
}

TEST_CASE("generator images", "[transformation_core]") {
  CHECK(map_generator(GenSpec::nullary(GenFamily::X)) == PartialMap(2, 2, Img{2, 1}));
  CHECK(map_generator(GenSpec::nullary(GenFamily::Xinv))
        == PartialMap(2, 2, Img{2, 1}));
  CHECK(map_generator(GenSpec::nullary(GenFamily::V)) == PartialMap(2, 1, Img{1, 1}));
  CHECK(map_generator(GenSpec::nullary(GenFamily::U)) == PartialMap(1, 0));
  CHECK(map_generator(GenSpec::nullary(GenFamily::Ubar)) == PartialMap(0, 1));
  CHECK(map_generator(GenSpec::indexed(GenFamily::sigma, 2, 3))
        == PartialMap(3, 3, Img{1, 3, 2}));
  CHECK(map_generator(GenSpec::indexed(GenFamily::sigma_inv, 2, 3))
        == PartialMap(3, 3, Img{1, 3, 2}));
  CHECK(map_generator(GenSpec::indexed(GenFamily::eps, 2, 3))
        == PartialMap(3, 3, Img{1, 0, 3}));
  CHECK(map_generator(GenSpec::indexed(GenFamily::mu, 1, 2))
        == PartialMap(2, 2, Img{1, 1}));
  CHECK(map_generator(GenSpec::indexed(GenFamily::eta, 1, 2))
        == PartialMap(2, 2, Img{2, 2}));
  CHECK(map_generator(GenSpec::graded(GenFamily::lambda, 2))
        == PartialMap(2, 3, Img{1, 2}));
  CHECK(map_generator(GenSpec::graded(GenFamily::rho_chop, 2))
        == PartialMap(3, 2, Img{1, 2, 0}));
  CHECK(map_generator(GenSpec::graded(GenFamily::rho_fold, 2))
        == PartialMap(3, 2, Img{1, 2, 2}));
  CHECK_THROWS_AS(map_generator(GenSpec::nullary(GenFamily::D)), Error);
}

TEST_CASE("enumeration against brute force", "[transformation_core]") {
  for (std::size_t m = 0; m <= 4; ++m) {
    for (std::size_t n = 0; n <= 4; ++n) {
      auto all = all_partial(m, n);
      for (auto k : kinds) {
        std::vector<PartialMap> expected;
        for (auto const& f : all) {
          if (oracle(f, k)) {
            expected.push_back(f);
          }
          REQUIRE(belongs_to(f, k) == oracle(f, k));
        }
        auto got = enumerate_homset(k, m, n);
        std::sort(expected.begin(), expected.end());
        auto sorted = got;
        std::sort(sorted.begin(), sorted.end());
        REQUIRE(sorted == expected);
      }
    }
  }
  CHECK(enumerate_homset(MapKind::PT, 2, 2).size() == 9);
  CHECK(enumerate_homset(MapKind::T, 2, 2).size() == 4);
  CHECK(enumerate_homset(MapKind::I, 2, 2).size() == 7);
  CHECK(enumerate_homset(MapKind::PO, 2, 2).size() == 8);
  CHECK(enumerate_homset(MapKind::O, 2, 2).size() == 3);
  CHECK(enumerate_homset(MapKind::OI, 2, 2).size() == 6);
  for (std::size_t m = 1; m <= 3; ++m) {
    CHECK(enumerate_homset(MapKind::T, m, 0).empty());
  }
}

TEST_CASE("kinds are closed under composition and tensor",
          "[transformation_core]") {
  for (auto k : kinds) {
    for (std::size_t m = 0; m <= 2; ++m) {
      for (std::size_t n = 0; n <= 2; ++n) {
        for (std::size_t q = 0; q <= 2; ++q) {
          for (auto const& f : enumerate_homset(k, m, n)) {
            for (auto const& g : enumerate_homset(k, n, q)) {
              REQUIRE(belongs_to(compose(f, g), k));
              REQUIRE(belongs_to(tensor(f, g), k));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("map semantics", "[transformation_core]") {
  auto sem = semantics_for(SemanticsTag::T);
  CHECK(sem->enumerable());
  CHECK(sem->enumerate(2, 2, 100).size() == 4);
  CHECK(sem->assign(GenSpec::nullary(GenFamily::V)).has_value());
  CHECK_FALSE(sem->assign(GenSpec::nullary(GenFamily::D)).has_value());
  CHECK(sem->compose(sem->identity(2), PartialMap(2, 1, Img{1, 1}))
        == Morphism(PartialMap(2, 1, Img{1, 1})));
}

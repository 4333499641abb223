#include <vector>  // for vector

#include "catch2/catch_amalgamated.hpp"

#include "diagcat/catalog.hpp"
#include "diagcat/error.hpp"
#include "diagcat/lin_comb.hpp"
#include "diagcat/partition.hpp"
#include "diagcat/polynomial.hpp"
#include "diagcat/verify.hpp"

using namespace diagcat;

namespace {
  DeltaPoly const d = DeltaPoly::monomial(1);

  Partition eps1() {
    return Partition::make(1, 1, {{1}, {-1}});
  }

  // All LinCombs over hom(m, n) of P with coefficients in {0, 1, d} on at
  // most two basis diagrams.
  std::vector<LinComb> small_sums(std::size_t m, std::size_t n) {
    auto                 h = enumerate_homset(DiagramKind::P, m, n);
    std::vector<LinComb> out;
    for (std::size_t i = 0; i < h.size(); ++i) {
      out.push_back(LinComb::basis(h[i]));
      for (std::size_t j = i + 1; j < h.size(); ++j) {
        out.push_back(LinComb::basis(h[i]) + LinComb::basis(h[j], d));
      }
    }
    return out;
  }
}  // namespace

TEST_CASE("delta polynomials", "[linear_diagram]") {
  DeltaPoly two_plus_d = DeltaPoly(2) + d;
  CHECK(two_plus_d.to_string() == "2+d");
  CHECK(DeltaPoly::monomial(2, Rational(1, 2)).to_string() == "1/2*d^2");
  CHECK(DeltaPoly().to_string() == "0");
  CHECK((two_plus_d - two_plus_d).is_zero());
  CHECK((d * d) == DeltaPoly::monomial(2));
  CHECK((two_plus_d * two_plus_d) == DeltaPoly(4) + DeltaPoly::monomial(1, 4)
                                         + DeltaPoly::monomial(2));
  CHECK(two_plus_d.evaluate(Rational(3)) == Rational(5));
  CHECK(two_plus_d.degree() == 1);
}

TEST_CASE("star products", "[linear_diagram]") {
  auto e = LinComb::basis(eps1());
  CHECK(star_compose(e, e) == LinComb::basis(eps1(), d));

  for (std::size_t n = 0; n <= 4; ++n) {
    auto l = LinComb::basis(
        generator(GenSpec::graded(GenFamily::lambda, n), DiagramFlavour::partition));
    auto r = LinComb::basis(generator(GenSpec::graded(GenFamily::rho_chop, n),
                                      DiagramFlavour::partition));
    CHECK(star_compose(l, r) == LinComb::basis(Partition::identity(n), d));
  }

  // (id + e)(id + e) = id + (2 + d) e
  auto sum = LinComb::identity(1) + e;
  CHECK(star_compose(sum, sum)
        == LinComb::identity(1) + LinComb::basis(eps1(), DeltaPoly(2) + d));
  CHECK(star_compose(sum, sum).to_string()
        == "(2+d)*P[1,1]{ {1} {-1} } + 1*P[1,1]{ {1,-1} }");

  CHECK_THROWS_AS(star_compose(LinComb::identity(1), LinComb::identity(2)),
                  Error);
}

TEST_CASE("tensor and involution extend linearly", "[linear_diagram]") {
  CHECK(star_tensor(LinComb::identity(2), LinComb::identity(3))
        == LinComb::identity(5));
  auto a = LinComb::basis(eps1(), d);
  CHECK(star_involute(a) == LinComb::basis(involute(eps1()), d));
  auto two = LinComb::identity(1) + LinComb::basis(eps1(), d);
  CHECK(star_tensor(two, two).terms().size() <= 4);
  CHECK(star_tensor(two, two).terms().size() == 4);
  CHECK(star_tensor(two, LinComb::identity(0)) == two);
}

TEST_CASE("star composition is associative", "[linear_diagram]") {
  for (std::size_t m = 0; m <= 2; ++m) {
    for (std::size_t n = 0; n <= 2; ++n) {
      for (std::size_t q = 0; q <= 2; ++q) {
        auto F = small_sums(m, n);
        auto G = small_sums(n, q);
        auto H = small_sums(q, 1);
        for (auto const& f : F) {
          for (auto const& g : G) {
            auto fg = star_compose(f, g);
            for (auto const& h : H) {
              REQUIRE(star_compose(fg, h) == star_compose(f, star_compose(g, h)));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("interchange and identities for linear combinations",
          "[linear_diagram]") {
  auto F = small_sums(1, 1);
  for (auto const& a : F) {
    REQUIRE(star_compose(LinComb::identity(1), a) == a);
    REQUIRE(star_compose(a, LinComb::identity(1)) == a);
    for (auto const& b : F) {
      for (auto const& c : F) {
        for (auto const& e : F) {
          REQUIRE(star_tensor(star_compose(a, b), star_compose(c, e))
                  == star_compose(star_tensor(a, c), star_tensor(b, e)));
        }
      }
    }
  }
}

TEST_CASE("specialization", "[linear_diagram]") {
  auto e   = LinComb::basis(eps1());
  auto sum = star_compose(LinComb::identity(1) + e, LinComb::identity(1) + e);
  auto s   = specialize(sum, Rational(1));
  CHECK(s.coefficient(eps1()) == DeltaPoly(3));
  CHECK(specialize(star_compose(e, e), Rational(0)).is_zero());
}

TEST_CASE("linear relation sets", "[linear_diagram]") {
  for (auto id : {"P-linear", "B-linear", "TL-linear", "P-tensor-linear",
                  "B-tensor-linear", "TL-tensor-linear"}) {
    INFO(id);
    CHECK(check_soundness(presentation(id), 5).passed());
  }
  // The d annotations are the ones on e^2, t^2, l r and Uu ; U.
  auto annotated = [](std::string const& id) {
    std::vector<std::string> out;
    for (auto const& r : presentation(id).relations()) {
      if (r.lhs_delta + r.rhs_delta != 0) {
        out.push_back(r.lhs + " == " + r.rhs);
      }
    }
    return out;
  };
  CHECK(annotated("P-linear").size() == 2);
  CHECK(annotated("TL-tensor-linear") == std::vector<std::string>{"Uu ; U == id[0]"});
  // Dropping the annotations breaks soundness in the linear category.
  auto const& lin = presentation("P-tensor-linear");
  std::vector<RelationSchema> plain = lin.relations();
  for (auto& r : plain) {
    r.lhs_delta = r.rhs_delta = 0;
  }
  Presentation stripped("P-tensor-stripped", lin.level(), lin.signature(), plain,
                        lin.semantics(), true);
  CHECK_FALSE(check_soundness(stripped, 3).passed());
}

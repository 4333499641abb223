#include <string>  // for string

#include "catch2/catch_amalgamated.hpp"

#include "diagcat/catalog.hpp"
#include "diagcat/evaluate.hpp"
#include "diagcat/parser.hpp"
#include "diagcat/partition.hpp"
#include "diagcat/semantics.hpp"
#include "diagcat/verify.hpp"

using namespace diagcat;

namespace {
  // Composition that forgets the middle row: the top blocks of a and the
  // bottom blocks of b, with no through blocks.
  class Forgetful : public DiagramSemantics {
   public:
    Forgetful() : DiagramSemantics(DiagramKind::P) {}

    Morphism compose(Morphism const& a, Morphism const& b) const override {
      auto const& x = std::get<Partition>(a);
      auto const& y = std::get<Partition>(b);
      std::vector<std::vector<int>> blocks;
      for (auto const& blk : x.blocks()) {
        std::vector<int> top;
        for (auto l : blk) {
          if (l > 0) {
            top.push_back(l);
          }
        }
        if (!top.empty()) {
          blocks.push_back(top);
        }
      }
      for (auto const& blk : y.blocks()) {
        std::vector<int> bottom;
        for (auto l : blk) {
          if (l < 0) {
            bottom.push_back(l);
          }
        }
        if (!bottom.empty()) {
          blocks.push_back(bottom);
        }
      }
      return Partition::make(x.dom(), y.cod(), blocks);
    }
  };

  Presentation corrupted() {
    auto const& p = presentation("P-tensor");
    auto        r = p.relations();
    r.push_back({"bad", "X ; X", "X"});
    return Presentation("P-tensor-bad", p.level(), p.signature(), r,
                        p.semantics());
  }
}  // namespace

TEST_CASE("report lines", "[verify]") {
  Report r;
  r.check_id = "soundness";
  r.params   = "P n_max=3";
  CHECK(r.line() == "PASS soundness P n_max=3");
  r.status         = Status::fail;
  r.counterexample = "X ; X == X";
  CHECK(r.line() == "FAIL soundness P n_max=3 counterexample: X ; X == X");
  CHECK(status_name(Status::budget) == "BUDGET");
  CHECK(r.detailed().rfind(r.line(), 0) == 0);
}

TEST_CASE("soundness", "[verify]") {
  CHECK(check_soundness(presentation("P-tensor"), 0).passed());
  CHECK(check_soundness(presentation("B-tensor"), 5).passed());
  CHECK(check_soundness(presentation("V-tensor"), 5).passed());

  auto r = check_soundness(corrupted(), 0);
  REQUIRE(r.status == Status::fail);
  REQUIRE(r.counterexample);
  // The counterexample re-evaluates to a genuine inequality.
  auto const& ce  = *r.counterexample;
  auto        sep = ce.find(" == ");
  REQUIRE(sep != std::string::npos);
  auto const& sig = presentation("P-tensor").signature();
  auto        P   = semantics_for(SemanticsTag::P);
  CHECK_FALSE(evaluate(parse_term(ce.substr(0, sep), sig), *P)
              == evaluate(parse_term(ce.substr(sep + 4), sig), *P));
}

TEST_CASE("shadow soundness", "[verify]") {
  for (auto c : {"PV", "IB", "V"}) {
    CHECK(check_shadow(c, 4).passed());
  }
  CHECK_THROWS(check_shadow("P", 3));
}

TEST_CASE("surjectivity", "[verify]") {
  auto tl = check_surjectivity(presentation("TL-tensor"), 2, 4, 12);
  CHECK(tl.passed());
  CHECK(tl.items == 5);
  auto i = check_surjectivity(presentation("I-tensor"), 2, 2, 10);
  CHECK(i.passed());
  CHECK(i.items == 7);
  auto b = check_surjectivity(presentation("B-tensor"), 1, 2, 10);
  CHECK(b.passed());
  CHECK(b.items == 0);
  // Too small a bound misses the all-joined diagram in P(2, 2).
  auto p = check_surjectivity(presentation("P-tensor"), 2, 2, 1);
  CHECK(p.status == Status::fail);
  // Monotone in the bound.
  for (std::size_t s = 0; s <= 8; ++s) {
    auto a = check_surjectivity(presentation("PO-tensor"), 2, 2, s);
    auto c = check_surjectivity(presentation("PO-tensor"), 2, 2, s + 1);
    REQUIRE(a.items <= c.items);
  }
  // Category level.
  CHECK(check_surjectivity(presentation("P"), 1, 2, 6).passed());
}

TEST_CASE("joinability", "[verify]") {
  CHECK(check_joinability(presentation("TL-tensor"), 1, 1, 6, 10).passed());
  CHECK(check_joinability(presentation("P"), 0, 0, 4, 12).passed());
  auto zero = check_joinability(presentation("TL-tensor"), 1, 1, 4, 0);
  CHECK(zero.status == Status::budget);
  REQUIRE(zero.counterexample);
  // Monotone in the depth.
  for (std::size_t d = 0; d < 4; ++d) {
    auto a = check_joinability(presentation("O-tensor"), 2, 2, 4, d);
    auto b = check_joinability(presentation("O-tensor"), 2, 2, 4, d + 1);
    REQUIRE((!a.passed() || b.passed()));
  }
  // A relation that changes the value is caught.
  auto bad = check_joinability(corrupted(), 2, 2, 3, 12);
  CHECK(bad.status == Status::fail);
}

TEST_CASE("counts", "[verify]") {
  CHECK(check_counts("P", 2, 2).passed());
  CHECK(check_counts("P", 2, 2).items == 15);
  CHECK(check_counts("B", 3, 3).items == 15);
  CHECK(check_counts("PT", 2, 2).items == 9);
  CHECK(check_counts("O", 0, 3).items == 1);
  CHECK(check_counts("O", 2, 0).items == 0);
  CHECK_THROWS(check_counts("Q", 1, 1));
}

TEST_CASE("axioms", "[verify]") {
  AxiomScale small{2, 2, 2, 1};
  CHECK(check_axioms(*semantics_for(SemanticsTag::P), small).passed());
  CHECK(check_axioms(*semantics_for(SemanticsTag::OI), small).passed());
  Forgetful broken;
  auto      r = check_axioms(broken, AxiomScale{1, 1, 1, 1});
  CHECK(r.status == Status::fail);
  CHECK(r.counterexample);
}

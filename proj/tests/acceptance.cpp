// Acceptance gate: one PASS/FAIL line per criterion, each with its time
// bound. Exit code 0 iff every criterion passes.

#include <chrono>      // for steady_clock
#include <cstdio>      // for printf
#include <functional>  // for function
#include <string>      // for string
#include <vector>      // for vector

#include "diagcat/catalog.hpp"
#include "diagcat/combinatorics.hpp"
#include "diagcat/partition.hpp"
#include "diagcat/semantics.hpp"
#include "diagcat/verify.hpp"

using namespace diagcat;

namespace {
  struct Outcome {
    bool        ok = true;
    std::string detail;  // first failure, or a summary

    void require(Report const& r) {
      if (ok && !r.passed()) {
        ok     = false;
        detail = r.line();
      }
    }
    void require(bool cond, std::string const& what) {
      if (ok && !cond) {
        ok     = false;
        detail = what;
      }
    }
  };

  bool is_shadow(Presentation const& p) {
    auto s = p.semantics();
    return s == SemanticsTag::shadow_PV || s == SemanticsTag::shadow_IB
           || s == SemanticsTag::shadow_V;
  }

  std::vector<std::string> ids_where(
      std::function<bool(Presentation const&)> pred) {
    std::vector<std::string> out;
    for (auto const& id : presentation_ids()) {
      if (pred(presentation(id))) {
        out.push_back(id);
      }
    }
    return out;
  }

  char const* const categories[]
      = {"P", "B", "TL", "PV", "IB", "V", "PT", "I", "T", "PO", "O"};

  Outcome fig1() {
    Outcome o;
    auto    alpha = Partition::make(
        6, 8, {{1, 4}, {2, 3, -4, -5}, {5, 6}, {-1, -2, -6}, {-3}, {-7, -8}});
    auto beta = Partition::make(
        8,
        7,
        {{1, 2}, {3, 4, -1}, {5, -4, -5}, {6}, {7}, {8, -6, -7}, {-2}, {-3}});
    auto expected = Partition::make(
        6, 7, {{1, 4}, {2, 3, -1, -4, -5}, {5, 6}, {-6, -7}, {-2}, {-3}});
    auto c = compose(alpha, beta);
    o.require(c.diagram == expected, "got " + c.diagram.to_string());
    o.require(c.floating == 1,
              "floating = " + std::to_string(c.floating));
    o.detail = o.ok ? c.diagram.to_string() + " floating=1" : o.detail;
    return o;
  }

  Outcome soundness() {
    Outcome o;
    auto    ids = ids_where(
        [](auto const& p) { return !p.linear() && !is_shadow(p); });
    for (auto const& id : ids) {
      o.require(check_soundness(presentation(id), 6));
    }
    if (o.ok) {
      o.detail = std::to_string(ids.size()) + " presentations, n<=6";
    }
    return o;
  }

  Outcome linear_soundness() {
    Outcome o;
    auto    ids = ids_where([](auto const& p) { return p.linear(); });
    for (auto const& id : ids) {
      o.require(check_soundness(presentation(id), 5));
    }
    if (o.ok) {
      o.detail = std::to_string(ids.size()) + " presentations, n<=5";
    }
    return o;
  }

  Outcome shadow() {
    Outcome o;
    for (auto c : {"PV", "IB", "V"}) {
      o.require(check_shadow(c, 5));
    }
    auto ids = ids_where([](auto const& p) { return is_shadow(p); });
    for (auto const& id : ids) {
      o.require(check_soundness(presentation(id), 5));
    }
    if (o.ok) {
      o.detail = std::to_string(ids.size()) + " presentations, n<=5";
    }
    return o;
  }

  Outcome counts() {
    Outcome     o;
    std::size_t checks = 0;
    auto        run    = [&](char const* kind, std::size_t m, std::size_t n) {
      o.require(check_counts(kind, m, n));
      ++checks;
    };
    for (std::size_t s = 0; s <= 8; ++s) {
      for (std::size_t m = 0; m <= s; ++m) {
        run("P", m, s - m);
      }
    }
    for (std::size_t s = 0; s <= 10; s += 2) {
      for (std::size_t m = 0; m <= s; ++m) {
        run("B", m, s - m);
      }
    }
    for (std::size_t s = 0; s <= 16; s += 2) {
      for (std::size_t m = 0; m <= s; ++m) {
        run("TL", m, s - m);
      }
    }
    for (auto kind : {"PT", "T", "I", "PO", "O", "OI"}) {
      for (std::size_t m = 0; m <= 4; ++m) {
        for (std::size_t n = 0; n <= 4; ++n) {
          run(kind, m, n);
        }
      }
    }
    // The named values.
    auto size = [](auto kind, std::size_t m, std::size_t n) {
      return check_counts(kind, m, n).items;
    };
    o.require(size("P", 1, 1) == 2 && size("P", 2, 2) == 15
                  && size("P", 3, 3) == 203,
              "P_n");
    o.require(size("B", 3, 3) == 15, "|B_3|");
    o.require(size("TL", 4, 4) == 14, "|TL_4|");
    o.require(size("PT", 2, 2) == 9 && size("T", 2, 2) == 4
                  && size("I", 2, 2) == 7 && size("PO", 2, 2) == 8
                  && size("O", 2, 2) == 3 && size("OI", 2, 2) == 6,
              "maps (2, 2)");
    if (o.ok) {
      o.detail = std::to_string(checks) + " hom-sets";
    }
    return o;
  }

  Outcome surjectivity() {
    Outcome     o;
    std::size_t homsets = 0;
    auto        ids     = ids_where(
        [](auto const& p) { return p.level() == Level::tensor && !p.linear(); });
    for (auto const& id : ids) {
      auto const& p   = presentation(id);
      std::size_t top = (id == "TL-tensor" || id == "OI-tensor") ? 4 : 3;
      for (std::size_t m = 0; m <= top; ++m) {
        for (std::size_t n = 0; n <= top; ++n) {
          o.require(check_surjectivity(p, m, n, 16));
          ++homsets;
        }
      }
    }
    if (o.ok) {
      o.detail = std::to_string(ids.size()) + " presentations, "
                 + std::to_string(homsets) + " hom-sets, size<=16";
    }
    return o;
  }

  // Slack 1 first; a BUDGET outcome is retried once with slack 2.
  Outcome joinability() {
    Outcome     o;
    std::size_t retried = 0;
    auto        ids     = ids_where([](auto const& p) {
      return p.level() == Level::tensor && !p.linear() && !is_shadow(p);
    });
    for (auto const& id : ids) {
      auto const& p = presentation(id);
      for (std::size_t m = 0; m <= 2; ++m) {
        for (std::size_t n = 0; n <= 2; ++n) {
          auto r = check_joinability(p, m, n, 6, 12, 1);
          if (r.status == Status::budget) {
            ++retried;
            r = check_joinability(p, m, n, 6, 12, 2);
          }
          o.require(r);
        }
      }
    }
    if (o.ok) {
      o.detail = std::to_string(ids.size()) + " presentations, size<=6, depth 12, "
                 + std::to_string(retried) + " hom-sets at slack 2";
    }
    return o;
  }

  Outcome scaffold() {
    Outcome o;
    for (auto c : categories) {
      o.require(check_scaffold(c, 5));
      o.require(check_normalize(c, 1000, 6, 5));
      o.require(check_hat_map(c, 5, 5));
    }
    if (o.ok) {
      o.detail = "11 categories, n<=5, 1000 words of length <=6";
    }
    return o;
  }

  Outcome axioms() {
    Outcome o;
    for (auto tag : {SemanticsTag::P,
                     SemanticsTag::B,
                     SemanticsTag::TL,
                     SemanticsTag::PT,
                     SemanticsTag::T,
                     SemanticsTag::I,
                     SemanticsTag::PO,
                     SemanticsTag::O,
                     SemanticsTag::OI}) {
      o.require(check_axioms(*semantics_for(tag)));
    }
    if (o.ok) {
      AxiomScale s;
      o.detail = "9 semantics, pairs/triples<=" + std::to_string(s.pairs)
                 + " tensor_assoc<=" + std::to_string(s.tensor_assoc)
                 + " interchange<=" + std::to_string(s.interchange);
    }
    return o;
  }

  Outcome oi() {
    Outcome o;
    o.require(check_oi_normal_form(5));
    if (o.ok) {
      o.detail = "m,n<=5";
    }
    return o;
  }

  struct Criterion {
    int                      number;
    char const*              name;
    double                   limit;  // seconds
    std::function<Outcome()> run;
  };
}  // namespace

int main() {
  std::vector<Criterion> const criteria = {
      {1, "fig1-product", 0.001, fig1},
      {2, "relation-soundness", 10, soundness},
      {3, "linear-soundness", 10, linear_soundness},
      {4, "shadow-soundness", 10, shadow},
      {5, "hom-set-counts", 30, counts},
      {6, "surjectivity", 120, surjectivity},
      {7, "joinability", 300, joinability},
      {8, "scaffold", 120, scaffold},
      {9, "axioms", 60, axioms},
      {10, "oi-normal-form", 5, oi},
  };
  // Warm the catalogs so their construction is not charged to criterion 1.
  presentation_ids();
  int failures = 0;
  for (auto const& c : criteria) {
    Outcome o;
    auto    start = std::chrono::steady_clock::now();
    try {
      o = c.run();
    } catch (std::exception const& e) {
      o.ok     = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now()
                                                - start)
                      .count();
    bool in_time = secs < c.limit;
    bool pass    = o.ok && in_time;
    failures += pass ? 0 : 1;
    std::printf("%s %d %s time=%.4fs limit=%gs%s %s\n",
                pass ? "PASS" : "FAIL",
                c.number,
                c.name,
                secs,
                c.limit,
                in_time ? "" : " (over time)",
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}

// diagcat command-line tool.
//
// Exit codes: 0 on success, 1 if a verification reported FAIL, 2 on a usage
// error (bad flags, unknown names, malformed input).

#include <cstdint>    // for uint64_t
#include <fstream>    // for ifstream
#include <iostream>   // for cout, cerr
#include <optional>   // for optional
#include <string>     // for string
#include <vector>     // for vector

#include "CLI11.hpp"

#include "diagcat/catalog.hpp"
#include "diagcat/error.hpp"
#include "diagcat/evaluate.hpp"
#include "diagcat/parser.hpp"
#include "diagcat/partial_map.hpp"
#include "diagcat/partition.hpp"
#include "diagcat/scaffold.hpp"
#include "diagcat/semantics.hpp"
#include "diagcat/verify.hpp"

namespace {
  using namespace diagcat;

  struct Options {
    std::string              cat;
    std::vector<std::string> inputs;
    std::string              file;
    std::size_t              m          = 0;
    std::size_t              n          = 0;
    std::size_t              n_max      = 5;
    std::size_t              size       = 6;
    std::size_t              depth      = 12;
    std::size_t              slack      = 1;
    std::size_t              width      = 2;
    std::size_t              samples    = 1000;
    std::size_t              max_len    = 6;
    std::size_t              max_object = 5;
    std::size_t              scale      = 3;
    std::string              format     = "plain";
    std::string              check;
    bool                     trace = false;
    std::optional<std::uint64_t> seed;
  };

  class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  std::vector<std::string> inputs(Options const& opt) {
    auto out = opt.inputs;
    if (!opt.file.empty()) {
      std::ifstream in(opt.file);
      if (!in) {
        throw UsageError("cannot read " + opt.file);
      }
      for (std::string line; std::getline(in, line);) {
        if (!line.empty() && line[0] != '#') {
          out.push_back(line);
        }
      }
    }
    if (out.empty()) {
      throw UsageError("no input terms");
    }
    return out;
  }

  Presentation const& selected(Options const& opt) {
    if (opt.cat.empty()) {
      throw UsageError("--cat is required");
    }
    return presentation(opt.cat);
  }

  // Evaluation of diagram presentations goes through the linear category so
  // that floating components are counted.
  SemanticsTag eval_tag(SemanticsTag tag) {
    switch (tag) {
      case SemanticsTag::P:
        return SemanticsTag::P_linear;
      case SemanticsTag::B:
        return SemanticsTag::B_linear;
      case SemanticsTag::TL:
        return SemanticsTag::TL_linear;
      default:
        return tag;
    }
  }

  void print_value(Morphism const& f) {
    if (auto const* lc = std::get_if<LinComb>(&f)) {
      if (lc->terms().size() == 1) {
        auto const& [p, c] = *lc->terms().begin();
        if (c.num_terms() == 1 && c.coefficient(c.degree()).numerator() == 1
            && c.coefficient(c.degree()).denominator() == 1) {
          std::cout << p.to_string() << "\nfloating: " << c.degree() << "\n";
          return;
        }
      }
    }
    std::cout << to_string(f) << "\n";
  }

  // Morphism text in either of the two formats.
  Morphism parse_morphism(std::string const& text) {
    if (text.rfind("P[", 0) == 0) {
      return parse_partition(text);
    }
    if (text.rfind("F[", 0) == 0) {
      return parse_partial_map(text);
    }
    throw UsageError("expected a diagram P[..] or a map F[..]: " + text);
  }

  int run_parse(Options const& opt) {
    auto const& pres = selected(opt);
    for (auto const& text : inputs(opt)) {
      auto t = parse_term(text, pres.signature());
      std::cout << t.to_string() << " : " << t.dom() << " -> " << t.cod()
                << " size " << t.size() << "\n";
    }
    return 0;
  }

  int run_eval(Options const& opt) {
    auto const& pres = selected(opt);
    auto        sem  = semantics_for(eval_tag(pres.semantics()));
    for (auto const& text : inputs(opt)) {
      print_value(evaluate(parse_term(text, pres.signature()), *sem));
    }
    return 0;
  }

  int run_binary(Options const& opt, bool tensor) {
    auto in = inputs(opt);
    if (in.size() != 2) {
      throw UsageError("expected two morphisms");
    }
    auto a = parse_morphism(in[0]);
    auto b = parse_morphism(in[1]);
    if (a.index() != b.index()) {
      throw UsageError("cannot mix diagrams and maps");
    }
    if (auto const* pa = std::get_if<Partition>(&a)) {
      auto const& pb = std::get<Partition>(b);
      if (tensor) {
        std::cout << diagcat::tensor(*pa, pb).to_string() << "\n";
      } else {
        auto c = compose(*pa, pb);
        std::cout << c.diagram.to_string() << "\nfloating: " << c.floating
                  << "\n";
      }
    } else {
      auto const& fa = std::get<PartialMap>(a);
      auto const& fb = std::get<PartialMap>(b);
      std::cout << (tensor ? diagcat::tensor(fa, fb) : compose(fa, fb))
                       .to_string()
                << "\n";
    }
    return 0;
  }

  int run_normalize(Options const& opt) {
    Scaffold const sc(opt.cat);
    for (auto const& text : inputs(opt)) {
      auto w  = parse_word(text, sc.signature());
      auto nf = normalize_one_sided(sc, w);
      std::cout << (nf.side == Side::left_lambda ? "left" : "right") << " "
                << nf.dom << " -> " << nf.cod << " core: "
                << nf.core.to_string() << "\n"
                << reconstruct(sc, nf).to_string() << "\n";
      if (opt.trace) {
        for (auto const& line : nf.trace) {
          std::cout << "  " << line << "\n";
        }
      }
    }
    return 0;
  }

  std::vector<Morphism> homset(Options const& opt) {
    if (opt.cat.empty()) {
      throw UsageError("--cat is required");
    }
    for (auto kind : {DiagramKind::P, DiagramKind::PlanarP, DiagramKind::B,
                      DiagramKind::TL}) {
      if (kind_name(kind) == opt.cat) {
        auto                  h = enumerate_homset(kind, opt.m, opt.n);
        return std::vector<Morphism>(h.begin(), h.end());
      }
    }
    for (auto kind : {MapKind::PT, MapKind::T, MapKind::I, MapKind::PO,
                      MapKind::O, MapKind::OI}) {
      if (kind_name(kind) == opt.cat) {
        auto                  h = enumerate_homset(kind, opt.m, opt.n);
        return std::vector<Morphism>(h.begin(), h.end());
      }
    }
    throw UsageError("no hom-set kind named '" + opt.cat + "'");
  }

  int report(Options const& opt, std::vector<Report> const& reports) {
    bool failed = false;
    for (auto const& r : reports) {
      std::cout << (opt.format == "lines" ? r.line() : r.detailed()) << "\n";
      failed = failed || r.status == Status::fail;
    }
    return failed ? 1 : 0;
  }

  int run_verify(Options const& opt) {
    std::vector<Report> out;
    auto const&         c = opt.check;
    if (c == "soundness") {
      out.push_back(check_soundness(selected(opt), opt.n_max));
    } else if (c == "shadow") {
      out.push_back(check_shadow(opt.cat, opt.n_max));
    } else if (c == "surjectivity") {
      out.push_back(
          check_surjectivity(selected(opt), opt.m, opt.n, opt.size, opt.width));
    } else if (c == "joinability") {
      out.push_back(check_joinability(
          selected(opt), opt.m, opt.n, opt.size, opt.depth, opt.slack));
    } else if (c == "counts") {
      out.push_back(check_counts(opt.cat, opt.m, opt.n));
    } else if (c == "axioms") {
      AxiomScale scale;
      scale.pairs = scale.triples = opt.scale;
      out.push_back(check_axioms(*semantics_by_name(opt.cat), scale));
    } else if (c == "scaffold") {
      out.push_back(check_scaffold(opt.cat, opt.n_max));
    } else if (c == "hat-map") {
      out.push_back(check_hat_map(opt.cat, opt.max_len, opt.max_object));
    } else if (c == "normalize") {
      out.push_back(check_normalize(
          opt.cat, opt.samples, opt.max_len, opt.max_object, opt.seed));
    } else if (c == "oi-normal-form") {
      out.push_back(check_oi_normal_form(opt.n_max));
    } else {
      throw UsageError("unknown check '" + c + "'");
    }
    return report(opt, out);
  }

  int run_dump(Options const& opt) {
    if (opt.cat.empty()) {
      for (auto const& id : presentation_ids()) {
        std::cout << id << "\n";
      }
      return 0;
    }
    for (auto const& line : selected(opt).dump(opt.n_max)) {
      std::cout << line << "\n";
    }
    return 0;
  }
}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Diagram categories by generators and relations"};
  app.require_subcommand(1);
  Options opt;

  auto cat_flag = [&opt](CLI::App* sub, std::string const& what) {
    sub->add_option("--cat,--presentation", opt.cat, what);
  };
  auto terms = [&opt](CLI::App* sub) {
    sub->add_option("input", opt.inputs, "Terms");
    sub->add_option("--file", opt.file, "Read inputs from a file, one per line");
  };
  auto grading = [&opt](CLI::App* sub, bool required) {
    sub->add_option("-m", opt.m, "Domain")->required(required);
    sub->add_option("-n", opt.n, "Codomain")->required(required);
  };

  auto* parse = app.add_subcommand("parse", "Parse and print terms");
  cat_flag(parse, "Presentation");
  terms(parse);

  auto* eval = app.add_subcommand("eval", "Evaluate terms");
  cat_flag(eval, "Presentation");
  terms(eval);

  auto* comp = app.add_subcommand("compose", "Compose two diagrams or maps");
  terms(comp);
  auto* tens = app.add_subcommand("tensor", "Tensor two diagrams or maps");
  terms(tens);

  auto* norm = app.add_subcommand("normalize", "One-sided normal form of words");
  cat_flag(norm, "Category presentation");
  terms(norm);
  norm->add_flag("--trace", opt.trace, "Print the rewrite steps");

  auto* count = app.add_subcommand("count", "Size of a hom-set");
  cat_flag(count, "P, PlanarP, B, TL, PT, T, I, PO, O or OI");
  grading(count, true);

  auto* enumerate = app.add_subcommand("enumerate", "List a hom-set");
  cat_flag(enumerate, "P, PlanarP, B, TL, PT, T, I, PO, O or OI");
  grading(enumerate, true);

  auto* verify = app.add_subcommand("verify", "Run a verification check");
  verify
      ->add_option("check", opt.check,
                   "soundness, shadow, surjectivity, joinability, counts, "
                   "axioms, scaffold, hat-map, normalize or oi-normal-form")
      ->required();
  cat_flag(verify, "Presentation, category, semantics or hom-set kind");
  grading(verify, false);
  verify->add_option("--n-max", opt.n_max, "Largest index or object");
  verify->add_option("--size", opt.size, "Size bound");
  verify->add_option("--depth", opt.depth, "Rewrite depth");
  verify->add_option("--slack", opt.slack, "Extra size for intermediate terms");
  verify->add_option("--width", opt.width, "Extra width for generation");
  verify->add_option("--samples", opt.samples, "Number of sampled words");
  verify->add_option("--max-len", opt.max_len, "Word length bound");
  verify->add_option("--max-object", opt.max_object, "Object bound");
  verify->add_option("--scale", opt.scale, "Object bound for the axioms");
  verify->add_option("--seed", opt.seed, "Sample at random with this seed");
  verify->add_option("--format", opt.format, "plain or lines")
      ->check(CLI::IsMember({"plain", "lines"}));

  auto* dump = app.add_subcommand("dump-catalog", "Print relation instances");
  cat_flag(dump, "Presentation; all ids are listed without it");
  dump->add_option("--n-max", opt.n_max, "Largest index");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    auto code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*parse) {
      return run_parse(opt);
    } else if (*eval) {
      return run_eval(opt);
    } else if (*comp) {
      return run_binary(opt, false);
    } else if (*tens) {
      return run_binary(opt, true);
    } else if (*norm) {
      return run_normalize(opt);
    } else if (*count) {
      std::cout << homset(opt).size() << "\n";
    } else if (*enumerate) {
      for (auto const& f : homset(opt)) {
        std::cout << to_string(f) << "\n";
      }
    } else if (*verify) {
      return run_verify(opt);
    } else if (*dump) {
      return run_dump(opt);
    }
  } catch (UsageError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

#include "diagcat/scaffold.hpp"

#include <map>            // for map
#include <mutex>          // for mutex, lock_guard
#include <unordered_map>  // for unordered_map
#include <utility>        // for pair

#include "diagcat/error.hpp"     // for Error
#include "diagcat/evaluate.hpp"  // for evaluate
#include "diagcat/parser.hpp"    // for parse_term

namespace diagcat {

  ////////////////////////////////////////////////////////////////////////
  // Scaffold
  ////////////////////////////////////////////////////////////////////////

  Scaffold::Scaffold(std::string_view category_id)
      : _pres(&diagcat::presentation(category_id)), _fold(false) {
    if (_pres->level() != Level::category || _pres->linear()) {
      throw Error(ErrorCode::unknown_name,
                  "'" + std::string(category_id)
                      + "' is not a category presentation with a scaffold");
    }
    _fold = signature().has_family(GenFamily::rho_fold);
  }

  GenSpec Scaffold::lambda(std::size_t n) const {
    return GenSpec::graded(GenFamily::lambda, n);
  }

  GenSpec Scaffold::rho(std::size_t n) const {
    return GenSpec::graded(_fold ? GenFamily::rho_fold : GenFamily::rho_chop,
                           n);
  }

  Word Scaffold::w(std::size_t n) const {
    GenSpec g;
    if (_fold) {
      g = GenSpec::indexed(GenFamily::mu, n, n + 1);
    } else if (step() == 2) {
      g = GenSpec::indexed(GenFamily::tau, n + 1, n + 2);
    } else {
      g = GenSpec::indexed(GenFamily::eps, n + 1, n + 1);
    }
    return Word(signature(), n + step(), {g});
  }

  Word Scaffold::lower_shift(GenSpec const& x) const {
    auto const n = x.n + step();
    return Word(signature(), n, {GenSpec::indexed(x.family, x.i, n)});
  }

  Word Scaffold::upper_shift(GenSpec const& x) const {
    auto const n = x.n + step();
    if (_fold && x.i + 1 == x.n) {
      return Word(signature(),
                  n,
                  {GenSpec::indexed(GenFamily::mu, x.n, n),
                   GenSpec::indexed(x.family, x.i, n)});
    }
    return Word(signature(), n, {GenSpec::indexed(x.family, x.i, n)});
  }

  namespace {
    void check_grading(Scaffold const& sc, std::size_t m, std::size_t n) {
      if (m > n || (n - m) % sc.step() != 0 || m < sc.min_object()) {
        throw Error(ErrorCode::bad_grading,
                    "no one-sided unit word between " + std::to_string(m)
                        + " and " + std::to_string(n) + " with step "
                        + std::to_string(sc.step()));
      }
    }
  }  // namespace

  Word Scaffold::lambda_word(std::size_t m, std::size_t n) const {
    check_grading(*this, m, n);
    Word out(m);
    for (std::size_t k = m; k < n; k += step()) {
      out.push_back(signature(), lambda(k));
    }
    return out;
  }

  Word Scaffold::rho_word(std::size_t n, std::size_t m) const {
    check_grading(*this, m, n);
    Word out(n);
    for (std::size_t k = n; k > m; k -= step()) {
      out.push_back(signature(), rho(k - step()));
    }
    return out;
  }

  Morphism to_endo_right(Scaffold const& sc, Morphism const& a) {
    auto const& sem = *semantics_for(sc.presentation().semantics());
    return sem.compose(evaluate(sc.rho_word(cod(a), dom(a)), sem), a);
  }

  Morphism to_endo_left(Scaffold const& sc, Morphism const& a) {
    auto const& sem = *semantics_for(sc.presentation().semantics());
    return sem.compose(a, evaluate(sc.lambda_word(cod(a), dom(a)), sem));
  }

  ////////////////////////////////////////////////////////////////////////
  // Hat map
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::string framed(std::size_t left, std::string const& core,
                       std::size_t right) {
      return "id[" + std::to_string(left) + "] # (" + core + ") # id["
             + std::to_string(right) + "]";
    }
  }  // namespace

  Term hat_map(std::string_view category_id, GenSpec const& edge) {
    auto const& cat  = presentation(category_id);
    auto const& tens = presentation(tensor_partner(category_id));
    auto const  ar   = cat.signature().arity(edge);
    if (cat.level() != Level::category || !ar) {
      throw Error(ErrorCode::unknown_edge,
                  edge.to_string() + " is not an edge of "
                      + std::string(category_id));
    }
    bool const  has_D    = tens.signature().has_family(GenFamily::D);
    bool const  has_Xinv = tens.signature().has_family(GenFamily::Xinv);
    auto const  i = edge.i, n = edge.n;
    std::string text;
    switch (edge.family) {
      case GenFamily::sigma:
        text = framed(i - 1, "X", n - i - 1);
        break;
      case GenFamily::sigma_inv:
        text = framed(i - 1, has_Xinv ? "Xi" : "X", n - i - 1);
        break;
      case GenFamily::eps:
        text = framed(i - 1, "U # Uu", n - i);
        break;
      case GenFamily::tau:
        text = framed(i - 1, has_D ? "D" : "U ; Uu", n - i - 1);
        break;
      case GenFamily::mu:
        text = framed(i - 1, "V # Uu", n - i - 1);
        break;
      case GenFamily::eta:
        text = framed(i - 1, "Uu # V", n - i - 1);
        break;
      case GenFamily::lambda:
        text = "id[" + std::to_string(n) + "] # Uu";
        break;
      case GenFamily::rho_chop:
        text = "id[" + std::to_string(n) + "] # U";
        break;
      case GenFamily::rho_fold:
        text = "id[" + std::to_string(n - 1) + "] # V";
        break;
      default:
        throw Error(ErrorCode::unknown_edge,
                    edge.to_string() + " has no hat image");
    }
    return parse_term(text, tens.signature());
  }

  Term hat_word(std::string_view category_id, Word const& w) {
    Term out = Term::id(w.dom());
    for (auto const& g : w.letters()) {
      out = Term::compose(out, hat_map(category_id, g));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Monoid words
  ////////////////////////////////////////////////////////////////////////

  namespace {
    struct WordTable {
      std::vector<Morphism>                                  elems;
      std::vector<std::size_t>                               parent;
      std::vector<GenSpec>                                   letter;
      std::unordered_map<Morphism, std::size_t, MorphismHash> index;
      std::size_t                                            head = 0;
    };

    std::mutex& table_mutex() {
      static std::mutex mtx;
      return mtx;
    }

    std::map<std::pair<std::string, std::size_t>, WordTable>& tables() {
      static std::map<std::pair<std::string, std::size_t>, WordTable> t;
      return t;
    }
  }  // namespace

  Word monoid_word_for(Presentation const& pres,
                       Morphism const&     a,
                       std::size_t         n,
                       std::size_t         budget) {
    auto const& sig = pres.signature();
    auto const& sem = *semantics_for(pres.semantics());
    if (dom(a) != n || cod(a) != n) {
      throw Error(ErrorCode::shape_mismatch,
                  to_string(a) + " is not an endomorphism of "
                      + std::to_string(n));
    }
    std::lock_guard<std::mutex> lock(table_mutex());
    auto& tab = tables()[{pres.id(), n}];
    if (tab.elems.empty()) {
      tab.elems.push_back(sem.identity(n));
      tab.parent.push_back(0);
      tab.letter.push_back(GenSpec());
      tab.index.emplace(tab.elems.back(), 0);
    }
    auto letters = sig.letters(n);
    std::vector<Morphism> images;
    for (auto const& x : letters) {
      images.push_back(evaluate_letters(n, {x}, sem));
    }
    auto it = tab.index.find(a);
    while (it == tab.index.end()) {
      if (tab.head == tab.elems.size()) {
        throw Error(ErrorCode::budget_exceeded,
                    to_string(a) + " is not generated by the letters at "
                        + std::to_string(n));
      }
      auto const cur = tab.head++;
      for (std::size_t k = 0; k < letters.size(); ++k) {
        auto next = sem.compose(tab.elems[cur], images[k]);
        if (tab.index.count(next) != 0) {
          continue;
        }
        if (tab.elems.size() >= budget) {
          throw Error(ErrorCode::budget_exceeded,
                      "more than " + std::to_string(budget)
                          + " elements searched at " + std::to_string(n));
        }
        tab.index.emplace(next, tab.elems.size());
        tab.elems.push_back(std::move(next));
        tab.parent.push_back(cur);
        tab.letter.push_back(letters[k]);
      }
      it = tab.index.find(a);
    }
    std::vector<GenSpec> rev;
    for (auto k = it->second; k != 0; k = tab.parent[k]) {
      rev.push_back(tab.letter[k]);
    }
    return Word(sig, n, std::vector<GenSpec>(rev.rbegin(), rev.rend()));
  }

  ////////////////////////////////////////////////////////////////////////
  // One-sided normal forms
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // u^{+^k} for a word u over X_n.
    Word raise(Scaffold const& sc, Word u, std::size_t k) {
      for (; k > 0; --k) {
        Word next(u.dom() + sc.step());
        for (auto const& x : u.letters()) {
          next.append(sc.upper_shift(x));
        }
        u = std::move(next);
      }
      return u;
    }

    Word lower(Scaffold const& sc, Word const& u) {
      Word next(u.dom() + sc.step());
      for (auto const& x : u.letters()) {
        next.append(sc.lower_shift(x));
      }
      return next;
    }

    bool is_rho(GenFamily f) {
      return f == GenFamily::rho_chop || f == GenFamily::rho_fold;
    }
  }  // namespace

  NormalForm normalize_one_sided(Scaffold const& sc,
                                 Word const&     w,
                                 std::size_t     budget) {
    auto const& sig = sc.signature();
    auto const& sem = *semantics_for(sc.presentation().semantics());
    auto const  d   = sc.step();
    auto const  m   = w.dom();
    NormalForm  nf{Side::left_lambda, m, m, Word(m), {}};
    std::size_t q = m;

    for (auto const& x : w.letters()) {
      bool const left = nf.side == Side::left_lambda;
      if (x.family == GenFamily::lambda) {
        if (left) {
          nf.core = lower(sc, nf.core);
          nf.trace.push_back("shift below " + sc.lambda(q).to_string()
                             + " by x l = l x_+");
        } else {
          auto const k = (m - q - d) / d;
          nf.core.append(raise(sc, sc.w(q), k));
          nf.trace.push_back("r l = w at " + std::to_string(q)
                             + ", then r x = x^+ r " + std::to_string(k)
                             + " times");
          if (m == q + d) {
            nf.side = Side::left_lambda;
          }
        }
        q += d;
      } else if (is_rho(x.family)) {
        auto const next = q - d;
        if (left && m == q) {
          nf.side = Side::right_rho;
          nf.trace.push_back("start right form at " + x.to_string());
        } else if (left) {
          Word core(next);
          core.push_back(sig, sc.lambda(next));
          core.append(nf.core);
          core.push_back(sig, sc.rho(next));
          auto value = evaluate(core, sem);
          try {
            nf.core = monoid_word_for(sc.presentation(), value, next, budget);
          } catch (Error const& e) {
            throw Error(ErrorCode::descend_failure,
                        core.to_string() + ": " + e.what());
          }
          nf.trace.push_back("descend " + core.to_string() + " ~ "
                             + nf.core.to_string());
        } else {
          nf.trace.push_back("absorb " + x.to_string());
        }
        q = next;
      } else {
        if (left) {
          nf.core.push_back(sig, x);
          nf.trace.push_back("append " + x.to_string());
        } else {
          auto const k = (m - q) / d;
          nf.core.append(raise(sc, Word(sig, q, {x}), k));
          nf.trace.push_back("move " + x.to_string() + " left by r x = x^+ r "
                             + std::to_string(k) + " times");
        }
      }
    }
    nf.cod = q;
    return nf;
  }

  Word reconstruct(Scaffold const& sc, NormalForm const& nf) {
    if (nf.side == Side::left_lambda) {
      return concat(sc.lambda_word(nf.dom, nf.cod), nf.core);
    }
    return concat(nf.core, sc.rho_word(nf.dom, nf.cod));
  }

}  // namespace diagcat

#include "diagcat/verify.hpp"

#include <algorithm>      // for max, all_of
#include <chrono>         // for steady_clock
#include <cstdint>        // for uint64_t
#include <deque>          // for deque
#include <functional>     // for function
#include <map>            // for map
#include <numeric>        // for iota, partial_sum
#include <random>         // for mt19937_64
#include <set>            // for set
#include <sstream>        // for ostringstream
#include <unordered_map>  // for unordered_map
#include <unordered_set>  // for unordered_set
#include <utility>        // for pair

#include "diagcat/combinatorics.hpp"  // for bell, catalan, ...
#include "diagcat/error.hpp"          // for Error
#include "diagcat/evaluate.hpp"       // for evaluate
#include "diagcat/rewrite.hpp"        // for swap_layers
#include "diagcat/scaffold.hpp"       // for Scaffold

namespace diagcat {

  std::string_view status_name(Status s) noexcept {
    switch (s) {
      case Status::pass:
        return "PASS";
      case Status::fail:
        return "FAIL";
      case Status::budget:
        return "BUDGET";
    }
    return "?";
  }

  std::string Report::line() const {
    std::string out = std::string(status_name(status)) + " " + check_id;
    if (!params.empty()) {
      out += " " + params;
    }
    if (counterexample) {
      out += " counterexample: " + *counterexample;
    }
    return out;
  }

  std::string Report::detailed() const {
    std::ostringstream os;
    os << line() << "\n  items=" << items << " seconds=" << seconds;
    if (!stats.empty()) {
      os << " " << stats;
    }
    return os.str();
  }

  namespace {
    class Stopwatch {
     public:
      double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now()
                                             - _start)
            .count();
      }

     private:
      std::chrono::steady_clock::time_point _start
          = std::chrono::steady_clock::now();
    };

    Report make_report(std::string id, std::string params) {
      Report r;
      r.check_id = std::move(id);
      r.params   = std::move(params);
      return r;
    }

    void fail(Report& r, std::string counterexample) {
      if (r.status != Status::fail) {
        r.status         = Status::fail;
        r.counterexample = std::move(counterexample);
      }
    }

    std::string str(std::size_t k) {
      return std::to_string(k);
    }

    bool is_rho(GenFamily f) {
      return f == GenFamily::rho_chop || f == GenFamily::rho_fold;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Soundness
  ////////////////////////////////////////////////////////////////////////

  Report check_soundness(Presentation const& pres,
                         Semantics const&    sem,
                         std::size_t         n_max) {
    Stopwatch sw;
    auto      r = make_report("soundness",
                         pres.id() + " semantics=" + sem.name()
                             + " n_max=" + str(n_max));
    for (auto const& inst : pres.instantiate(n_max)) {
      ++r.items;
      auto a = evaluate(inst.lhs, sem);
      auto b = evaluate(inst.rhs, sem);
      if (pres.linear()) {
        a = std::get<LinComb>(a).scaled(DeltaPoly::monomial(inst.lhs_delta));
        b = std::get<LinComb>(b).scaled(DeltaPoly::monomial(inst.rhs_delta));
      }
      if (!(a == b)) {
        auto line = inst.to_line(pres.linear());
        fail(r, line.substr(line.find(" : ") + 3));
        break;
      }
    }
    r.seconds = sw.seconds();
    return r;
  }

  Report check_soundness(Presentation const& pres, std::size_t n_max) {
    return check_soundness(pres, *semantics_for(pres.semantics()), n_max);
  }

  Report check_shadow(std::string_view catalog, std::size_t n_max) {
    if (catalog != "PV" && catalog != "IB" && catalog != "V") {
      throw Error(ErrorCode::unknown_name,
                  "no shadow catalog named '" + std::string(catalog) + "'");
    }
    auto r     = check_soundness(presentation(catalog), n_max);
    r.check_id = "shadow";
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Generation by layers
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // The single-generator layers of a presentation at a given width, with
    // their values.
    class LayerTable {
     public:
      struct Move {
        Layer    layer;
        Morphism value;
      };

      LayerTable(Presentation const& pres, Semantics const& sem)
          : _pres(pres), _sem(sem) {}

      std::vector<Move> const& at(std::size_t w) {
        auto it = _moves.find(w);
        if (it != _moves.end()) {
          return it->second;
        }
        std::vector<Move> out;
        auto const&       sig = _pres.signature();
        if (_pres.level() == Level::tensor) {
          for (auto const& g : sig.tensor_generators()) {
            auto [gd, gc] = *sig.arity(g);
            if (gd > w) {
              continue;
            }
            auto gv = evaluate_edge(g, gd, gc, _sem);
            for (std::size_t p = 0; p + gd <= w; ++p) {
              auto const q = w - p - gd;
              auto v = _sem.tensor(_sem.tensor(_sem.identity(p), gv),
                                   _sem.identity(q));
              out.push_back({Layer{g, p, gd, gc, q}, std::move(v)});
            }
          }
        } else {
          for (auto const& g : sig.edges_from(w)) {
            auto [gd, gc] = *sig.arity(g);
            out.push_back(
                {Layer{g, 0, gd, gc, 0}, evaluate_edge(g, gd, gc, _sem)});
          }
        }
        return _moves.emplace(w, std::move(out)).first->second;
      }

      // Largest increase and decrease of the width by one layer.
      std::pair<std::size_t, std::size_t> spread() const {
        auto const& sig = _pres.signature();
        std::size_t up = 0, down = 0;
        if (_pres.level() == Level::tensor) {
          for (auto const& g : sig.tensor_generators()) {
            auto [gd, gc] = *sig.arity(g);
            up            = std::max(up, gc > gd ? gc - gd : 0);
            down          = std::max(down, gd > gc ? gd - gc : 0);
          }
        } else {
          up = down = sig.step();
        }
        return {up, down};
      }

     private:
      Presentation const&                         _pres;
      Semantics const&                            _sem;
      std::unordered_map<std::size_t, std::vector<Move>> _moves;
    };

    std::string term_string(Layered const& l) {
      return from_layers(l).to_string();
    }
  }  // namespace

  Report check_surjectivity(Presentation const& pres,
                            std::size_t         m,
                            std::size_t         n,
                            std::size_t         size_bound,
                            std::size_t         width_slack,
                            std::size_t         budget) {
    Stopwatch   sw;
    auto        r   = make_report("surjectivity",
                         pres.id() + " m=" + str(m) + " n=" + str(n)
                             + " size=" + str(size_bound));
    auto const& sem = *semantics_for(pres.semantics());
    if (!sem.enumerable()) {
      fail(r, "semantics " + sem.name() + " is not enumerable");
      return r;
    }
    auto const& sig = pres.signature();
    if (m < sig.min_object() || n < sig.min_object()) {
      r.stats = "outside the object set";
      return r;
    }
    std::unordered_set<Morphism, MorphismHash> targets;
    for (auto& f : sem.enumerate(m, n, default_enumeration_budget)) {
      targets.insert(std::move(f));
    }
    std::size_t const cap = std::max(m, n) + width_slack;
    LayerTable        table(pres, sem);
    std::unordered_set<Morphism, MorphismHash> seen;
    std::vector<Morphism>                      frontier{sem.identity(m)};
    seen.insert(frontier.front());
    std::size_t reached = m == n && targets.count(frontier.front()) ? 1 : 0;
    std::size_t depth   = 0;
    while (reached < targets.size() && depth < size_bound
           && !frontier.empty()) {
      ++depth;
      std::vector<Morphism> next;
      for (auto const& v : frontier) {
        for (auto const& mv : table.at(cod(v))) {
          if (mv.layer.width_out() > cap) {
            continue;
          }
          auto w = sem.compose(v, mv.value);
          if (seen.count(w) != 0) {
            continue;
          }
          if (seen.size() >= budget) {
            r.status         = Status::budget;
            r.counterexample = "more than " + str(budget) + " values";
            r.seconds        = sw.seconds();
            return r;
          }
          reached += targets.count(w);
          seen.insert(w);
          next.push_back(std::move(w));
        }
      }
      frontier = std::move(next);
    }
    r.items = reached;
    r.stats = "homset=" + str(targets.size()) + " values=" + str(seen.size())
              + " depth=" + str(depth);
    if (reached < targets.size()) {
      for (auto const& t : targets) {
        if (seen.count(t) == 0) {
          fail(r, to_string(t));
          break;
        }
      }
    }
    r.seconds = sw.seconds();
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Joinability
  ////////////////////////////////////////////////////////////////////////

  namespace {
    class UnionFind {
     public:
      explicit UnionFind(std::size_t n) : _parent(n) {
        std::iota(_parent.begin(), _parent.end(), 0);
      }
      std::size_t find(std::size_t x) {
        while (_parent[x] != x) {
          _parent[x] = _parent[_parent[x]];
          x          = _parent[x];
        }
        return x;
      }
      void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
          _parent[std::max(a, b)] = std::min(a, b);
        }
      }

     private:
      std::vector<std::size_t> _parent;
    };

    struct Rewrite {
      Layered from;
      Layered to;
    };

    // Replaces an occurrence of rw.from in l starting at layer pos, framed
    // by the same identities, or returns nullopt.
    std::optional<Layered> rewrite_at(Layered const& l,
                                      Rewrite const& rw,
                                      std::size_t    pos) {
      auto const& L = l.layers;
      auto const& S = rw.from.layers;
      if (pos + S.size() > L.size() || L[pos].left < S[0].left
          || L[pos].right < S[0].right) {
        return std::nullopt;
      }
      std::size_t const p = L[pos].left - S[0].left;
      std::size_t const q = L[pos].right - S[0].right;
      for (std::size_t t = 0; t < S.size(); ++t) {
        auto const& a = L[pos + t];
        auto const& b = S[t];
        if (!(a.gen == b.gen) || a.dom != b.dom || a.cod != b.cod
            || a.left != b.left + p || a.right != b.right + q) {
          return std::nullopt;
        }
      }
      Layered out;
      out.dom = l.dom;
      out.layers.assign(L.begin(), L.begin() + pos);
      for (auto y : rw.to.layers) {
        y.left += p;
        y.right += q;
        out.layers.push_back(y);
      }
      out.layers.insert(out.layers.end(), L.begin() + pos + S.size(), L.end());
      return out;
    }
  }  // namespace

  namespace {
    // Terms are stored as compact keys: the domain, then five bytes per
    // layer.
    class TermCodec {
     public:
      explicit TermCodec(Signature const& sig) : _sig(sig) {}

      static std::string encode(Layered const& l) {
        std::string k;
        k.reserve(1 + 5 * l.layers.size());
        k.push_back(static_cast<char>(l.dom));
        for (auto const& y : l.layers) {
          k.push_back(static_cast<char>(y.gen.family));
          k.push_back(static_cast<char>(y.gen.i));
          k.push_back(static_cast<char>(y.gen.n));
          k.push_back(static_cast<char>(y.left));
          k.push_back(static_cast<char>(y.right));
        }
        return k;
      }

      Layered decode(std::string_view k) const {
        auto    byte = [&k](std::size_t x) {
          return static_cast<std::size_t>(static_cast<unsigned char>(k[x]));
        };
        Layered l;
        l.dom = byte(0);
        for (std::size_t x = 1; x < k.size(); x += 5) {
          GenSpec g{static_cast<GenFamily>(byte(x)), byte(x + 1), byte(x + 2)};
          auto [gd, gc] = *_sig.arity(g);
          l.layers.push_back(Layer{g, byte(x + 3), gd, gc, byte(x + 4)});
        }
        return l;
      }

      static std::size_t size(std::string_view k) {
        return (k.size() - 1) / 5;
      }

     private:
      Signature const& _sig;
    };
  }  // namespace

  Report check_joinability(Presentation const& pres,
                           std::size_t         m,
                           std::size_t         n,
                           std::size_t         word_size,
                           std::size_t         depth,
                           std::size_t         slack) {
    Stopwatch   sw;
    auto        r   = make_report("joinability",
                         pres.id() + " m=" + str(m) + " n=" + str(n)
                             + " size=" + str(word_size)
                             + " depth=" + str(depth)
                             + " slack=" + str(slack));
    auto const& sem = *semantics_for(pres.semantics());
    auto const& sig = pres.signature();
    if (m < sig.min_object() || n < sig.min_object()) {
      r.stats = "outside the object set";
      return r;
    }
    std::size_t const bound = word_size + slack;
    TermCodec const   codec(sig);

    // All terms (m, n) of size <= bound, with their values.
    LayerTable                         table(pres, sem);
    auto const [up, down]              = table.spread();
    std::deque<std::string>            keys;
    std::vector<std::uint32_t>         value_of;
    std::unordered_map<std::string_view, std::uint32_t> index;
    std::unordered_map<Morphism, std::uint32_t, MorphismHash> value_ids;
    std::vector<Morphism>              values;

    Layered                                           cur{m, {}};
    std::function<void(Morphism const&, std::size_t)> dfs
        = [&](Morphism const& val, std::size_t w) {
            if (w == n) {
              auto [it, fresh] = value_ids.emplace(
                  val, static_cast<std::uint32_t>(values.size()));
              if (fresh) {
                values.push_back(val);
              }
              keys.push_back(TermCodec::encode(cur));
              index.emplace(keys.back(),
                            static_cast<std::uint32_t>(keys.size() - 1));
              value_of.push_back(it->second);
            }
            if (cur.layers.size() == bound) {
              return;
            }
            std::size_t const rest = bound - cur.layers.size() - 1;
            for (auto const& mv : table.at(w)) {
              auto const w2 = mv.layer.width_out();
              if (w2 > n + rest * down || w2 + rest * up < n) {
                continue;
              }
              cur.layers.push_back(mv.layer);
              dfs(sem.compose(val, mv.value), w2);
              cur.layers.pop_back();
            }
          };
    dfs(sem.identity(m), m);
    std::size_t const N = keys.size();

    // Rewrites from both sides of every relation instance; a side without
    // generators can be inserted anywhere its width fits.
    std::size_t const n_max
        = pres.level() == Level::tensor
              ? 0
              : std::max(m, n) + bound * sig.step();
    std::unordered_map<GenSpec, std::vector<Rewrite>, GenSpecHash> rewrites;
    std::vector<Rewrite>                                           inserts;
    for (auto const& inst : pres.instantiate(n_max)) {
      auto lhs = layers_of(inst.lhs);
      auto rhs = layers_of(inst.rhs);
      for (auto* side : {&lhs, &rhs}) {
        auto const& other = side == &lhs ? rhs : lhs;
        if (!side->layers.empty()) {
          rewrites[side->layers[0].gen].push_back({*side, other});
        } else if (!other.layers.empty()) {
          inserts.push_back({*side, other});
        }
      }
    }

    auto lookup = [&](Layered const& l) -> std::optional<std::uint32_t> {
      if (l.layers.size() > bound) {
        return std::nullopt;
      }
      auto it = index.find(TermCodec::encode(l));
      if (it == index.end()) {
        return std::nullopt;
      }
      return it->second;
    };

    // Terms related by interchange moves form one class.
    UnionFind uf(N);
    for (std::size_t v = 0; v < N; ++v) {
      auto const l = codec.decode(keys[v]);
      for (std::size_t k = 0; k + 1 < l.layers.size(); ++k) {
        for (auto const& s : swap_layers(l, k)) {
          if (auto t = lookup(s)) {
            uf.unite(v, *t);
          }
        }
      }
    }
    std::vector<std::uint32_t> root(N), start(N + 1, 0), members(N);
    for (std::size_t v = 0; v < N; ++v) {
      root[v] = static_cast<std::uint32_t>(uf.find(v));
      ++start[root[v] + 1];
    }
    std::partial_sum(start.begin(), start.end(), start.begin());
    {
      auto fill = start;
      for (std::size_t v = 0; v < N; ++v) {
        members[fill[root[v]]++] = static_cast<std::uint32_t>(v);
      }
    }

    auto neighbours = [&](std::uint32_t v, auto&& visit) {
      auto const l = codec.decode(keys[v]);
      for (std::size_t pos = 0; pos < l.layers.size(); ++pos) {
        auto it = rewrites.find(l.layers[pos].gen);
        if (it == rewrites.end()) {
          continue;
        }
        for (auto const& rw : it->second) {
          if (l.layers.size() - rw.from.layers.size() + rw.to.layers.size()
              > bound) {
            continue;
          }
          if (auto res = rewrite_at(l, rw, pos)) {
            if (auto t = lookup(*res)) {
              visit(*t, *res);
            }
          }
        }
      }
      for (auto const& rw : inserts) {
        if (l.layers.size() + rw.to.layers.size() > bound) {
          continue;
        }
        auto const k = rw.from.dom;
        for (std::size_t pos = 0; pos <= l.layers.size(); ++pos) {
          auto const w = pos == 0 ? l.dom : l.layers[pos - 1].width_out();
          for (std::size_t p = 0; p + k <= w; ++p) {
            if (pres.level() != Level::tensor && p != 0) {
              break;
            }
            if (pres.level() != Level::tensor && k != w) {
              break;
            }
            Layered out;
            out.dom = l.dom;
            out.layers.assign(l.layers.begin(), l.layers.begin() + pos);
            for (auto y : rw.to.layers) {
              y.left += p;
              y.right += w - k - p;
              out.layers.push_back(y);
            }
            out.layers.insert(
                out.layers.end(), l.layers.begin() + pos, l.layers.end());
            if (auto t = lookup(out)) {
              visit(*t, out);
            }
          }
        }
      }
    };

    // Breadth-first search over classes from the class of a shortest term
    // of each value.
    std::uint32_t const        none = static_cast<std::uint32_t>(-1);
    std::vector<std::uint32_t> rep(values.size(), none);
    for (std::size_t v = 0; v < N; ++v) {
      auto& rv = rep[value_of[v]];
      if (TermCodec::size(keys[v]) <= word_size
          && (rv == none
              || TermCodec::size(keys[v]) < TermCodec::size(keys[rv]))) {
        rv = static_cast<std::uint32_t>(v);
      }
    }
    std::vector<std::uint32_t> dist(N, none);
    std::deque<std::uint32_t>  queue;
    for (auto v : rep) {
      if (v != none && dist[root[v]] == none) {
        dist[root[v]] = 0;
        queue.push_back(root[v]);
      }
    }
    std::size_t edges = 0;
    while (!queue.empty()) {
      auto c = queue.front();
      queue.pop_front();
      if (dist[c] >= depth) {
        continue;
      }
      for (auto x = start[c]; x < start[c + 1]; ++x) {
        auto const v = members[x];
        neighbours(v, [&](std::uint32_t t, Layered const& res) {
          ++edges;
          if (value_of[t] != value_of[v]) {
            fail(r,
                 term_string(codec.decode(keys[v])) + " -> "
                     + term_string(res) + " changes the value");
          }
          auto const d = root[t];
          if (dist[d] == none) {
            dist[d] = dist[c] + 1;
            queue.push_back(d);
          }
        });
      }
    }

    std::size_t targets = 0, classes = 0, unjoined = 0, radius = 0;
    std::optional<std::uint32_t> witness;
    std::vector<bool>            counted(N, false);
    for (std::size_t v = 0; v < N; ++v) {
      if (TermCodec::size(keys[v]) > word_size) {
        continue;
      }
      ++targets;
      auto const c = root[v];
      if (counted[c]) {
        continue;
      }
      counted[c] = true;
      ++classes;
      if (dist[c] == none) {
        ++unjoined;
        if (!witness) {
          witness = static_cast<std::uint32_t>(v);
        }
      } else {
        radius = std::max<std::size_t>(radius, dist[c]);
      }
    }
    r.items = targets;
    r.stats = "values=" + str(values.size()) + " terms=" + str(N)
              + " classes=" + str(classes) + " radius=" + str(radius)
              + " edges=" + str(edges) + " unjoined=" + str(unjoined);
    if (r.status == Status::pass && witness) {
      r.status         = Status::budget;
      r.counterexample = term_string(codec.decode(keys[rep[value_of[*witness]]]))
                         + " ~ " + term_string(codec.decode(keys[*witness]));
    }
    r.seconds = sw.seconds();
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Counts
  ////////////////////////////////////////////////////////////////////////

  Report check_counts(std::string_view kind, std::size_t m, std::size_t n) {
    namespace cb = combinatorics;
    Stopwatch     sw;
    auto          r = make_report("counts",
                         std::string(kind) + " m=" + str(m) + " n=" + str(n));
    std::uint64_t expected = 0;
    std::size_t   actual   = 0;
    auto const    k        = m + n;
    auto          power    = [](std::uint64_t b, std::uint64_t e) {
      std::uint64_t x = 1;
      for (; e > 0; --e) {
        x *= b;
      }
      return x;
    };
    if (kind == "P" || kind == "PlanarP" || kind == "B" || kind == "TL") {
      DiagramKind dk = kind == "P"         ? DiagramKind::P
                       : kind == "PlanarP" ? DiagramKind::PlanarP
                       : kind == "B"       ? DiagramKind::B
                                           : DiagramKind::TL;
      actual         = enumerate_homset(dk, m, n).size();
      switch (dk) {
        case DiagramKind::P:
          expected = cb::bell(k);
          break;
        case DiagramKind::PlanarP:
          expected = cb::catalan(k);
          break;
        case DiagramKind::B:
          expected = k % 2 == 0 ? cb::perfect_matchings(k) : 0;
          break;
        case DiagramKind::TL:
          expected = k % 2 == 0 ? cb::catalan(k / 2) : 0;
          break;
      }
    } else {
      MapKind mk;
      if (kind == "PT") {
        mk       = MapKind::PT;
        expected = power(n + 1, m);
      } else if (kind == "T") {
        mk       = MapKind::T;
        expected = power(n, m);
      } else if (kind == "I") {
        mk = MapKind::I;
        for (std::size_t j = 0; j <= std::min(m, n); ++j) {
          expected += cb::binomial(m, j) * cb::binomial(n, j) * cb::factorial(j);
        }
      } else if (kind == "PO") {
        mk       = MapKind::PO;
        expected = cb::isotone_partial_maps(m, n);
      } else if (kind == "O") {
        mk       = MapKind::O;
        expected = m == 0 ? 1 : n == 0 ? 0 : cb::binomial(m + n - 1, m);
      } else if (kind == "OI") {
        mk = MapKind::OI;
        for (std::size_t j = 0; j <= std::min(m, n); ++j) {
          expected += cb::binomial(m, j) * cb::binomial(n, j);
        }
      } else {
        throw Error(ErrorCode::unknown_name,
                    "no hom-set kind named '" + std::string(kind) + "'");
      }
      actual = enumerate_homset(mk, m, n).size();
    }
    r.items = actual;
    r.stats = "expected=" + std::to_string(expected);
    if (actual != expected) {
      fail(r, "enumerated " + str(actual) + ", expected "
                  + std::to_string(expected));
    }
    r.seconds = sw.seconds();
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Axioms
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Enumerated hom-sets with a product table for composable pairs.
    class HomTable {
     public:
      HomTable(Semantics const& sem, std::size_t max) : _sem(sem), _max(max) {
        for (std::size_t a = 0; a <= max; ++a) {
          for (std::size_t b = 0; b <= max; ++b) {
            auto& h = _homs[{a, b}];
            h       = sem.enumerate(a, b, default_enumeration_budget);
            auto& ix = _index[{a, b}];
            for (std::size_t k = 0; k < h.size(); ++k) {
              ix.emplace(h[k], k);
            }
          }
        }
      }

      std::vector<Morphism> const& hom(std::size_t a, std::size_t b) const {
        return _homs.at({a, b});
      }

      std::size_t index(Morphism const& f) const {
        return _index.at({dom(f), cod(f)}).at(f);
      }

      struct Product {
        std::size_t index;
        std::size_t floating;
      };

      // Products hom(a, b) x hom(b, c) in row-major order.
      std::vector<Product> const&
      products(std::size_t a, std::size_t b, std::size_t c) {
        auto key = std::tuple{a, b, c};
        auto it  = _products.find(key);
        if (it != _products.end()) {
          return it->second;
        }
        std::vector<Product> out;
        auto const&          X = hom(a, b);
        auto const&          Y = hom(b, c);
        out.reserve(X.size() * Y.size());
        for (auto const& x : X) {
          for (auto const& y : Y) {
            auto const* px = std::get_if<Partition>(&x);
            auto const* py = std::get_if<Partition>(&y);
            if (px != nullptr && py != nullptr) {
              auto comp = compose(*px, *py);
              out.push_back({index(Morphism(comp.diagram)), comp.floating});
            } else {
              out.push_back({index(_sem.compose(x, y)), 0});
            }
          }
        }
        return _products.emplace(key, std::move(out)).first->second;
      }

      std::size_t max() const noexcept {
        return _max;
      }

     private:
      using Key = std::pair<std::size_t, std::size_t>;
      Semantics const&                                               _sem;
      std::size_t                                                    _max;
      std::map<Key, std::vector<Morphism>>                           _homs;
      std::map<Key, std::unordered_map<Morphism, std::size_t, MorphismHash>>
          _index;
      std::map<std::tuple<std::size_t, std::size_t, std::size_t>,
               std::vector<Product>>
          _products;
    };
  }  // namespace

  Report check_axioms(Semantics const& sem, AxiomScale const& scale) {
    Stopwatch sw;
    auto      r = make_report("axioms",
                         sem.name() + " scale=" + str(scale.pairs) + ","
                             + str(scale.triples) + ","
                             + str(scale.tensor_assoc) + ","
                             + str(scale.interchange));
    if (!sem.enumerable()) {
      fail(r, "semantics " + sem.name() + " is not enumerable");
      return r;
    }
    std::size_t const top = std::max({scale.pairs, scale.triples,
                                      scale.tensor_assoc, scale.interchange});
    HomTable          H(sem, top);
    auto const        ok = [&]() { return r.status == Status::pass; };
    auto check = [&](bool cond, auto&& describe) {
      ++r.items;
      if (!cond && ok()) {
        fail(r, describe());
      }
    };
    auto s = [](Morphism const& f) { return to_string(f); };

    // Identities and units.
    for (std::size_t a = 0; a <= scale.pairs && ok(); ++a) {
      for (std::size_t b = 0; b <= scale.pairs && ok(); ++b) {
        auto const idab = sem.tensor(sem.identity(a), sem.identity(b));
        check(idab == sem.identity(a + b),
              [&] { return "id[" + str(a) + "] # id[" + str(b) + "]"; });
        for (auto const& f : H.hom(a, b)) {
          check(sem.compose(sem.identity(a), f) == f
                    && sem.compose(f, sem.identity(b)) == f,
                [&] { return "identity law at " + s(f); });
          check(sem.tensor(f, sem.identity(0)) == f
                    && sem.tensor(sem.identity(0), f) == f,
                [&] { return "tensor unit at " + s(f); });
          if (sem.has_involution()) {
            auto fs = sem.involute(f);
            check(sem.involute(fs) == f,
                  [&] { return "involution at " + s(f); });
            check(sem.compose(sem.compose(f, fs), f) == f,
                  [&] { return "regularity at " + s(f); });
          }
        }
      }
    }

    // Laws in two morphisms: grading of the tensor, the zero-object
    // lemma, and the involution on products.
    for (std::size_t a = 0; a <= scale.pairs && ok(); ++a) {
      for (std::size_t b = 0; b <= scale.pairs && ok(); ++b) {
        for (std::size_t c = 0; c <= scale.pairs && ok(); ++c) {
          for (std::size_t d = 0; d <= scale.pairs && ok(); ++d) {
            for (auto const& f : H.hom(a, b)) {
              for (auto const& g : H.hom(c, d)) {
                auto const t = sem.tensor(f, g);
                check(dom(t) == a + c && cod(t) == b + d,
                      [&] { return "grading of " + s(f) + " # " + s(g); });
                if (b == 0 && c == 0) {
                  auto const fg = sem.compose(f, g);
                  check(fg == t && fg == sem.tensor(g, f), [&] {
                    return "zero object lemma at " + s(f) + ", " + s(g);
                  });
                }
                if (sem.has_involution()) {
                  check(sem.involute(t)
                            == sem.tensor(sem.involute(f), sem.involute(g)),
                        [&] { return "(f # g)* at " + s(f) + ", " + s(g); });
                }
              }
            }
          }
        }
      }
    }
    for (std::size_t a = 0; a <= scale.pairs && ok(); ++a) {
      for (std::size_t b = 0; b <= scale.pairs && ok(); ++b) {
        for (std::size_t c = 0; c <= scale.pairs && ok(); ++c) {
          auto const& P = H.products(a, b, c);
          auto const& F = H.hom(a, b);
          auto const& G = H.hom(b, c);
          for (std::size_t i = 0; i < F.size() && ok(); ++i) {
            for (std::size_t j = 0; j < G.size() && ok(); ++j) {
              auto const& fg = H.hom(a, c)[P[i * G.size() + j].index];
              if (sem.has_involution()) {
                check(sem.involute(fg)
                          == sem.compose(sem.involute(G[j]),
                                         sem.involute(F[i])),
                      [&] { return "(fg)* at " + s(F[i]) + ", " + s(G[j]); });
              }
              // The four parts of the lemma on tensoring with morphisms to
              // or from 0, with h ranging over hom(x, 0) and hom(0, x).
              for (std::size_t x = 0; x <= scale.pairs && ok(); ++x) {
                for (auto const& h : H.hom(x, 0)) {
                  check(sem.tensor(h, fg)
                            == sem.compose(sem.tensor(h, F[i]), G[j]),
                        [&] { return "h # (fg) = (h # f) g at " + s(h); });
                  check(sem.tensor(fg, h)
                            == sem.compose(sem.tensor(F[i], h), G[j]),
                        [&] { return "(fg) # h = (f # h) g at " + s(h); });
                }
                for (auto const& h : H.hom(0, x)) {
                  check(sem.tensor(h, fg)
                            == sem.compose(F[i], sem.tensor(h, G[j])),
                        [&] { return "h # (fg) = f (h # g) at " + s(h); });
                  check(sem.tensor(fg, h)
                            == sem.compose(F[i], sem.tensor(G[j], h)),
                        [&] { return "(fg) # h = f (g # h) at " + s(h); });
                }
              }
            }
          }
        }
      }
    }

    // Associativity of composition, with additive floating counts.
    for (std::size_t a = 0; a <= scale.triples && ok(); ++a) {
      for (std::size_t b = 0; b <= scale.triples && ok(); ++b) {
        for (std::size_t c = 0; c <= scale.triples && ok(); ++c) {
          for (std::size_t d = 0; d <= scale.triples && ok(); ++d) {
            auto const  nf = H.hom(a, b).size();
            auto const  ng = H.hom(b, c).size();
            auto const  nh = H.hom(c, d).size();
            auto const  nac = H.hom(a, c).size();
            auto const& fg  = H.products(a, b, c);
            auto const& gh  = H.products(b, c, d);
            auto const& left  = H.products(a, c, d);
            auto const& right = H.products(a, b, d);
            for (std::size_t i = 0; i < nf && ok(); ++i) {
              for (std::size_t j = 0; j < ng; ++j) {
                auto const x = fg[i * ng + j];
                for (std::size_t k = 0; k < nh; ++k) {
                  auto const y  = gh[j * nh + k];
                  auto const l  = left[x.index * nh + k];
                  auto const rr = right[i * H.hom(b, d).size() + y.index];
                  ++r.items;
                  if (l.index != rr.index
                      || x.floating + l.floating != y.floating + rr.floating) {
                    fail(r, "associativity at " + s(H.hom(a, b)[i]) + ", "
                                + s(H.hom(b, c)[j]) + ", "
                                + s(H.hom(c, d)[k]));
                    break;
                  }
                }
              }
            }
            (void) nac;
          }
        }
      }
    }

    // Associativity of the tensor.
    std::vector<Morphism> small;
    for (std::size_t a = 0; a <= scale.tensor_assoc; ++a) {
      for (std::size_t b = 0; b <= scale.tensor_assoc; ++b) {
        auto const& h = H.hom(a, b);
        small.insert(small.end(), h.begin(), h.end());
      }
    }
    for (std::size_t i = 0; i < small.size() && ok(); ++i) {
      for (std::size_t j = 0; j < small.size() && ok(); ++j) {
        auto const ij = sem.tensor(small[i], small[j]);
        for (std::size_t k = 0; k < small.size() && ok(); ++k) {
          check(sem.tensor(ij, small[k])
                    == sem.tensor(small[i], sem.tensor(small[j], small[k])),
                [&] {
                  return "tensor associativity at " + s(small[i]) + ", "
                         + s(small[j]) + ", " + s(small[k]);
                });
        }
      }
    }

    // Interchange.
    struct Pair {
      Morphism f, g, fg;
    };
    std::vector<Pair> pairs;
    for (std::size_t a = 0; a <= scale.interchange; ++a) {
      for (std::size_t b = 0; b <= scale.interchange; ++b) {
        for (std::size_t c = 0; c <= scale.interchange; ++c) {
          for (auto const& f : H.hom(a, b)) {
            for (auto const& g : H.hom(b, c)) {
              pairs.push_back({f, g, sem.compose(f, g)});
            }
          }
        }
      }
    }
    for (std::size_t i = 0; i < pairs.size() && ok(); ++i) {
      for (std::size_t j = 0; j < pairs.size() && ok(); ++j) {
        auto const& p = pairs[i];
        auto const& q = pairs[j];
        check(sem.tensor(p.fg, q.fg)
                  == sem.compose(sem.tensor(p.f, q.f), sem.tensor(p.g, q.g)),
              [&] {
                return "interchange at " + s(p.f) + ", " + s(p.g) + ", "
                       + s(q.f) + ", " + s(q.g);
              });
      }
    }
    r.seconds = sw.seconds();
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Scaffolds
  ////////////////////////////////////////////////////////////////////////

  namespace {
    SemanticsTag category_semantics(SemanticsTag tag) {
      switch (tag) {
        case SemanticsTag::shadow_PV:
          return SemanticsTag::PT;
        case SemanticsTag::shadow_IB:
          return SemanticsTag::I;
        case SemanticsTag::shadow_V:
          return SemanticsTag::T;
        default:
          return tag;
      }
    }

    Term ubar_power(std::size_t k) {
      Term out = Term::id(0);
      for (std::size_t j = 0; j < k; ++j) {
        out = Term::tensor(out,
                           Term::edge(GenSpec::nullary(GenFamily::Ubar), 0, 1));
      }
      return out;
    }
  }  // namespace

  Report check_scaffold(std::string_view category_id, std::size_t n_max) {
    Stopwatch      sw;
    auto           r = make_report("scaffold",
                         std::string(category_id) + " n_max=" + str(n_max));
    Scaffold const sc(category_id);
    auto const&    pres = sc.presentation();
    auto const&    sig  = sc.signature();
    auto const&    sem  = *semantics_for(pres.semantics());
    auto const     d    = sc.step();
    auto const     lo   = sc.min_object();
    bool const     fold = sig.has_family(GenFamily::rho_fold);
    auto const     ok   = [&]() { return r.status == Status::pass; };
    auto check = [&](bool cond, auto&& describe) {
      ++r.items;
      if (!cond && ok()) {
        fail(r, describe());
      }
    };

    // Relations of the catalog, in both orientations.
    std::set<std::pair<std::string, std::string>> catalog;
    for (auto const& inst : pres.instantiate(n_max + d)) {
      catalog.emplace(inst.lhs.to_string(), inst.rhs.to_string());
      catalog.emplace(inst.rhs.to_string(), inst.lhs.to_string());
    }
    auto member = [&](Word const& u, Word const& v) {
      return catalog.count({u.to_term(sig).to_string(),
                            v.to_term(sig).to_string()})
             != 0;
    };

    // C(m, n) is non-empty iff m = n (mod d) above the least object, or for
    // the categories with rho_fold the pattern of non-empty hom-sets over
    // all of N with |C(0, n)| = 1.
    auto const& full = *semantics_for(category_semantics(pres.semantics()));
    for (std::size_t a = 0; a <= n_max && ok(); ++a) {
      for (std::size_t b = 0; b <= n_max && ok(); ++b) {
        auto const size = full.enumerate(a, b, default_enumeration_budget).size();
        if (fold) {
          check((size != 0) == (a == 0 || b >= 1) && (a != 0 || size == 1),
                [&] { return "hom(" + str(a) + "," + str(b) + ") has "
                             + str(size) + " elements"; });
        } else if (a >= lo && b >= lo) {
          bool const graded = (a > b ? a - b : b - a) % d == 0;
          check((size != 0) == graded, [&] {
            return "hom(" + str(a) + "," + str(b) + ") has " + str(size)
                   + " elements";
          });
        }
      }
    }

    // Monoid relations are catalog relations.
    auto const& monoid = diagcat::presentation(pres.id() + "-monoid");
    for (auto const& inst : monoid.instantiate(n_max)) {
      check(catalog.count({inst.lhs.to_string(), inst.rhs.to_string()}) != 0,
            [&] { return "monoid relation missing: " + inst.to_line(); });
    }

    for (std::size_t k = lo; k <= n_max && ok(); ++k) {
      Word lam(sig, k, {sc.lambda(k)});
      Word rho(sig, k + d, {sc.rho(k)});
      auto lr = concat(lam, rho);
      auto rl = concat(rho, lam);
      // lambda rho = id and rho lambda = w_n, in value and as relations.
      check(evaluate(lr, sem) == sem.identity(k),
            [&] { return lr.to_string() + " is not the identity"; });
      check(member(lr, Word(k)),
            [&] { return lr.to_string() + " == id is not a relation"; });
      auto const wn = sc.w(k);
      check(evaluate(rl, sem) == evaluate(wn, sem),
            [&] { return rl.to_string() + " != " + wn.to_string(); });
      check(member(rl, wn), [&] {
        return rl.to_string() + " == " + wn.to_string() + " is not a relation";
      });
      // The shift relations x lambda = lambda x_+ and rho x = x^+ rho.
      for (auto const& x : sig.letters(k)) {
        Word xw(sig, k, {x});
        auto u = concat(xw, lam);
        auto v = concat(lam, sc.lower_shift(x));
        check(evaluate(u, sem) == evaluate(v, sem) && member(u, v), [&] {
          return u.to_string() + " == " + v.to_string();
        });
        auto u2 = concat(rho, xw);
        auto v2 = concat(sc.upper_shift(x), rho);
        check(evaluate(u2, sem) == evaluate(v2, sem) && member(u2, v2), [&] {
          return u2.to_string() + " == " + v2.to_string();
        });
      }
    }

    if (fold) {
      // The unique edge out of 0 in the tensor partner is Uu : 0 -> 1, and
      // Uu^m ; x = Uu^n for every other generator x : m -> n.
      auto const& tens  = diagcat::presentation(tensor_partner(pres.id()));
      auto const& tsig  = tens.signature();
      auto const& tsem  = *semantics_for(tens.semantics());
      std::size_t zeros = 0;
      for (auto const& g : tsig.tensor_generators()) {
        auto [gd, gc] = *tsig.arity(g);
        if (gd == 0) {
          ++zeros;
          check(g.family == GenFamily::Ubar && gc == 1,
                [&] { return g.to_string() + " leaves 0"; });
          continue;
        }
        auto lhs = Term::compose(ubar_power(gd), Term::edge(g, gd, gc));
        auto rhs = ubar_power(gc);
        check(evaluate(lhs, tsem) == evaluate(rhs, tsem), [&] {
          return lhs.to_string() + " == " + rhs.to_string();
        });
      }
      check(zeros == 1, [&] { return str(zeros) + " edges leave 0"; });
    }
    r.seconds = sw.seconds();
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Hat maps and normal forms
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // The words of length <= max_len with all objects <= max_object, in
    // depth-first order from each source, counted and unranked without
    // listing them.
    class WordSpace {
     public:
      WordSpace(Signature const& sig, std::size_t max_len, std::size_t max_object)
          : _sig(sig), _max_len(max_len), _max_object(max_object) {}

      std::uint64_t size() {
        std::uint64_t total = 0;
        for (std::size_t s = _sig.min_object(); s <= _max_object; ++s) {
          total += count(s, _max_len);
        }
        return total;
      }

      Word at(std::uint64_t k) {
        for (std::size_t s = _sig.min_object(); s <= _max_object; ++s) {
          auto const c = count(s, _max_len);
          if (k < c) {
            Word w(s);
            for (std::size_t len = _max_len; k != 0; --len) {
              --k;
              for (auto const& g : edges(w.cod())) {
                auto const cg = count(_sig.arity(g)->second, len - 1);
                if (k < cg) {
                  w.push_back(_sig, g);
                  break;
                }
                k -= cg;
              }
            }
            return w;
          }
          k -= c;
        }
        throw Error(ErrorCode::out_of_range, "word index out of range");
      }

     private:
      std::vector<GenSpec> const& edges(std::size_t s) {
        auto it = _edges.find(s);
        if (it == _edges.end()) {
          std::vector<GenSpec> out;
          for (auto const& g : _sig.edges_from(s)) {
            auto ar = _sig.arity(g);
            if (ar && ar->second <= _max_object) {
              out.push_back(g);
            }
          }
          it = _edges.emplace(s, std::move(out)).first;
        }
        return it->second;
      }

      // Words from s of length <= len.
      std::uint64_t count(std::size_t s, std::size_t len) {
        auto key = std::pair{s, len};
        auto it  = _counts.find(key);
        if (it != _counts.end()) {
          return it->second;
        }
        std::uint64_t c = 1;
        if (len > 0) {
          for (auto const& g : edges(s)) {
            c += count(_sig.arity(g)->second, len - 1);
          }
        }
        _counts.emplace(key, c);
        return c;
      }

      Signature const& _sig;
      std::size_t      _max_len;
      std::size_t      _max_object;
      std::map<std::size_t, std::vector<GenSpec>>                  _edges;
      std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> _counts;
    };
  }  // namespace

  Report check_hat_map(std::string_view category_id,
                       std::size_t      max_len,
                       std::size_t      max_object) {
    Stopwatch   sw;
    auto        r    = make_report("hat-map",
                         std::string(category_id) + " len=" + str(max_len)
                             + " max_object=" + str(max_object));
    auto const& cat  = presentation(category_id);
    auto const& tens = presentation(tensor_partner(category_id));
    auto const& sig  = cat.signature();
    auto const& csem = *semantics_for(cat.semantics());
    auto const& tsem = *semantics_for(tens.semantics());
    std::unordered_map<GenSpec, std::pair<Morphism, Morphism>, GenSpecHash>
        images;
    auto image = [&](GenSpec const& g) -> std::pair<Morphism, Morphism> const& {
      auto it = images.find(g);
      if (it == images.end()) {
        auto [gd, gc] = *sig.arity(g);
        it            = images
                 .emplace(g,
                          std::pair{evaluate_edge(g, gd, gc, csem),
                                    evaluate(hat_map(category_id, g), tsem)})
                 .first;
      }
      return it->second;
    };
    std::function<void(Word&, Morphism const&, Morphism const&)> go
        = [&](Word& w, Morphism const& a, Morphism const& b) {
            ++r.items;
            if (!(a == b)) {
              fail(r, w.to_string());
              return;
            }
            if (w.size() == max_len || r.status != Status::pass) {
              return;
            }
            for (auto const& g : sig.edges_from(w.cod())) {
              auto ar = sig.arity(g);
              if (!ar || ar->second > max_object) {
                continue;
              }
              auto const& [x, y] = image(g);
              Word next          = w;
              next.push_back(sig, g);
              go(next, csem.compose(a, x), tsem.compose(b, y));
            }
          };
    for (std::size_t s = sig.min_object(); s <= max_object; ++s) {
      Word w(s);
      go(w, csem.identity(s), tsem.identity(s));
    }
    r.seconds = sw.seconds();
    return r;
  }

  Report check_normalize(std::string_view             category_id,
                         std::size_t                  samples,
                         std::size_t                  max_len,
                         std::size_t                  max_object,
                         std::optional<std::uint64_t> seed) {
    Stopwatch      sw;
    auto           r = make_report("normalize",
                         std::string(category_id) + " samples=" + str(samples)
                             + " len=" + str(max_len)
                             + " max_object=" + str(max_object)
                             + (seed ? " seed=" + std::to_string(*seed) : ""));
    Scaffold const sc(category_id);
    auto const&    sig = sc.signature();
    auto const&    sem = *semantics_for(sc.presentation().semantics());

    WordSpace   space(sig, max_len, max_object);
    auto const  total = space.size();
    auto const  count = std::min<std::uint64_t>(samples, total);
    std::vector<Word> words;
    std::mt19937_64   rng(seed.value_or(0));
    std::uniform_int_distribution<std::uint64_t> pick(0, total - 1);
    for (std::uint64_t k = 0; k < count; ++k) {
      words.push_back(space.at(
          seed ? pick(rng)
               : static_cast<std::uint64_t>(
                   static_cast<unsigned __int128>(k) * total / count)));
    }

    std::size_t steps = 0;
    for (auto const& w : words) {
      ++r.items;
      NormalForm nf;
      try {
        nf = normalize_one_sided(sc, w);
      } catch (Error const& e) {
        fail(r, w.to_string() + " (" + e.what() + ")");
        break;
      }
      steps += nf.trace.size();
      bool const left  = nf.side == Side::left_lambda;
      auto const level = left ? nf.cod : nf.dom;
      bool const in_top
          = nf.core.dom() == level && nf.core.cod() == level
            && std::all_of(nf.core.letters().begin(),
                           nf.core.letters().end(),
                           [&](GenSpec const& g) {
                             return g.family != GenFamily::lambda
                                    && !is_rho(g.family) && g.n == level;
                           });
      bool const sided = left ? nf.dom <= nf.cod : nf.dom > nf.cod;
      if (!in_top || !sided || nf.dom != w.dom() || nf.cod != w.cod()
          || !(evaluate(reconstruct(sc, nf), sem) == evaluate(w, sem))) {
        fail(r, w.to_string() + " -> " + reconstruct(sc, nf).to_string());
        break;
      }
    }
    r.stats   = "words=" + std::to_string(total) + " steps=" + str(steps);
    r.seconds = sw.seconds();
    return r;
  }

  Term oi_normal_form(PartialMap const& f) {
    if (!belongs_to(f, MapKind::OI)) {
      throw Error(ErrorCode::unknown_spec,
                  f.to_string() + " is not an order-preserving injection");
    }
    Term const U  = Term::edge(GenSpec::nullary(GenFamily::U), 1, 0);
    Term const Uu = Term::edge(GenSpec::nullary(GenFamily::Ubar), 0, 1);
    std::vector<std::pair<std::size_t, std::size_t>> pairs{{0, 0}};
    for (std::size_t x = 1; x <= f.dom(); ++x) {
      if (f.defined_at(x)) {
        pairs.emplace_back(x, f.image(x));
      }
    }
    pairs.emplace_back(f.dom() + 1, f.cod() + 1);
    Term out = Term::id(0);
    for (std::size_t i = 0; i + 1 < pairs.size(); ++i) {
      if (i > 0) {
        out = Term::tensor(out, Term::id(1));
      }
      auto const p = pairs[i + 1].first - pairs[i].first - 1;
      auto const q = pairs[i + 1].second - pairs[i].second - 1;
      for (std::size_t k = 0; k < p; ++k) {
        out = Term::tensor(out, U);
      }
      for (std::size_t k = 0; k < q; ++k) {
        out = Term::tensor(out, Uu);
      }
    }
    return out;
  }

  Report check_oi_normal_form(std::size_t max) {
    Stopwatch   sw;
    auto        r   = make_report("oi-normal-form", "max=" + str(max));
    auto const& sem = *semantics_for(SemanticsTag::OI);
    for (std::size_t m = 0; m <= max; ++m) {
      for (std::size_t n = 0; n <= max; ++n) {
        for (auto const& f : enumerate_homset(MapKind::OI, m, n)) {
          ++r.items;
          auto t = oi_normal_form(f);
          if (!(evaluate(t, sem) == Morphism(f))) {
            fail(r, f.to_string() + " vs " + t.to_string());
          }
        }
      }
    }
    r.seconds = sw.seconds();
    return r;
  }

}  // namespace diagcat

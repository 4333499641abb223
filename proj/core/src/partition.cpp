#include "diagcat/partition.hpp"

#include <algorithm>  // for sort, max
#include <cctype>     // for isdigit, isspace
#include <numeric>    // for iota

#include "diagcat/combinatorics.hpp"  // for bell, catalan, perfect_matchings
#include "diagcat/error.hpp"          // for Error

namespace diagcat {

  DiagramFlavour flavour_of(DiagramKind kind) noexcept {
    return (kind == DiagramKind::B || kind == DiagramKind::TL)
               ? DiagramFlavour::brauer
               : DiagramFlavour::partition;
  }

  std::string_view kind_name(DiagramKind kind) noexcept {
    switch (kind) {
      case DiagramKind::P:
        return "P";
      case DiagramKind::PlanarP:
        return "PlanarP";
      case DiagramKind::B:
        return "B";
      case DiagramKind::TL:
        return "TL";
    }
    return "?";
  }

  ////////////////////////////////////////////////////////////////////////
  // Partition
  ////////////////////////////////////////////////////////////////////////

  Partition::Partition(std::size_t m, std::size_t n, std::vector<block_id> ids)
      : _m(m), _n(n), _ids(std::move(ids)) {
    canonicalize();
  }

  void Partition::canonicalize() {
    std::vector<block_id> relabel(_ids.size() + 1, block_id(-1));
    std::size_t           next = 0;
    for (auto& id : _ids) {
      if (id >= relabel.size()) {
        relabel.resize(id + 1, block_id(-1));
      }
      if (relabel[id] == block_id(-1)) {
        relabel[id] = static_cast<block_id>(next++);
      }
      id = relabel[id];
    }
    _num_blocks = next;
  }

  Partition
  Partition::make(std::size_t                                 m,
                  std::size_t                                 n,
                  std::vector<std::vector<label_type>> const& blocks) {
    std::vector<block_id> ids(m + n, block_id(-1));
    block_id              next = 0;
    for (auto const& block : blocks) {
      if (block.empty()) {
        continue;
      }
      for (auto label : block) {
        bool ok = (label > 0 && static_cast<std::size_t>(label) <= m)
                  || (label < 0 && static_cast<std::size_t>(-label) <= n);
        if (!ok) {
          throw Error(ErrorCode::out_of_range,
                      "label " + std::to_string(label) + " is not a vertex of P["
                          + std::to_string(m) + "," + std::to_string(n) + "]");
        }
        std::size_t v
            = label > 0 ? std::size_t(label - 1) : m + std::size_t(-label - 1);
        if (ids[v] != block_id(-1)) {
          throw Error(ErrorCode::duplicate_label,
                      "label " + std::to_string(label) + " occurs twice");
        }
        ids[v] = next;
      }
      ++next;
    }
    for (std::size_t v = 0; v < ids.size(); ++v) {
      if (ids[v] == block_id(-1)) {
        auto label = v < m ? static_cast<label_type>(v + 1)
                           : -static_cast<label_type>(v - m + 1);
        throw Error(ErrorCode::incomplete_cover,
                    "label " + std::to_string(label) + " is in no block");
      }
    }
    return Partition(m, n, std::move(ids));
  }

  Partition Partition::identity(std::size_t n) {
    std::vector<block_id> ids(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      ids[i] = ids[n + i] = static_cast<block_id>(i);
    }
    return Partition(n, n, std::move(ids));
  }

  Partition Partition::from_block_ids(std::size_t                  m,
                                      std::size_t                  n,
                                      std::vector<block_id> const& ids) {
    if (ids.size() != m + n) {
      throw Error(ErrorCode::shape_mismatch,
                  "expected " + std::to_string(m + n) + " block ids, got "
                      + std::to_string(ids.size()));
    }
    return Partition(m, n, ids);
  }

  std::vector<std::vector<Partition::label_type>> Partition::blocks() const {
    std::vector<std::vector<label_type>> out(_num_blocks);
    for (std::size_t v = 0; v < _ids.size(); ++v) {
      out[_ids[v]].push_back(label(v));
    }
    return out;
  }

  std::size_t Partition::vertex(label_type label) const {
    if (label > 0 && static_cast<std::size_t>(label) <= _m) {
      return std::size_t(label - 1);
    }
    if (label < 0 && static_cast<std::size_t>(-label) <= _n) {
      return _m + std::size_t(-label - 1);
    }
    throw Error(ErrorCode::out_of_range,
                "label " + std::to_string(label) + " is not a vertex");
  }

  std::string Partition::to_string() const {
    std::string out = "P[" + std::to_string(_m) + "," + std::to_string(_n)
                      + "]{ ";
    for (auto const& block : blocks()) {
      out += "{";
      for (std::size_t k = 0; k < block.size(); ++k) {
        if (k != 0) {
          out += ",";
        }
        out += std::to_string(block[k]);
      }
      out += "} ";
    }
    out += "}";
    return out;
  }

  std::strong_ordering operator<=>(Partition const& a, Partition const& b) {
    if (auto c = a._m <=> b._m; c != 0) {
      return c;
    }
    if (auto c = a._n <=> b._n; c != 0) {
      return c;
    }
    // Walk the blocks in canonical order. Block k is the set of vertices
    // with id k, listed in increasing key order.
    std::size_t const N = a._ids.size();
    std::size_t const K = std::min(a._num_blocks, b._num_blocks);
    for (std::size_t k = 0; k < K; ++k) {
      std::size_t va = 0, vb = 0;
      while (true) {
        while (va < N && a._ids[va] != k) {
          ++va;
        }
        while (vb < N && b._ids[vb] != k) {
          ++vb;
        }
        if (va == N || vb == N) {
          if (va == N && vb == N) {
            break;
          }
          return va == N ? std::strong_ordering::less
                         : std::strong_ordering::greater;
        }
        if (va != vb) {
          return va <=> vb;
        }
        ++va;
        ++vb;
      }
    }
    return a._num_blocks <=> b._num_blocks;
  }

  std::size_t Partition::hash() const noexcept {
    std::size_t h = _m * 131 + _n;
    for (auto id : _ids) {
      h = h * 1099511628211ull + id + 1;
    }
    return h;
  }

  ////////////////////////////////////////////////////////////////////////
  // Operations
  ////////////////////////////////////////////////////////////////////////

  namespace {
    struct UnionFind {
      explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
      }
      std::size_t find(std::size_t x) {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x         = parent[x];
        }
        return x;
      }
      void unite(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x != y) {
          parent[std::max(x, y)] = std::min(x, y);
        }
      }
      std::vector<std::size_t> parent;
    };
  }  // namespace

  Composite compose(Partition const& a, Partition const& b) {
    if (a.cod() != b.dom()) {
      throw Error(ErrorCode::shape_mismatch,
                  "cannot compose P[" + std::to_string(a.dom()) + ","
                      + std::to_string(a.cod()) + "] with P["
                      + std::to_string(b.dom()) + "," + std::to_string(b.cod())
                      + "]");
    }
    std::size_t const m = a.dom(), n = a.cod(), q = b.cod();
    // Vertices: upper row 0..m-1, middle row m..m+n-1, lower row m+n..
    UnionFind uf(m + n + q);
    {
      std::vector<std::size_t> first(a.num_blocks(), std::size_t(-1));
      auto const&              ids = a.block_ids();
      for (std::size_t v = 0; v < m + n; ++v) {
        if (first[ids[v]] == std::size_t(-1)) {
          first[ids[v]] = v;
        } else {
          uf.unite(first[ids[v]], v);
        }
      }
    }
    {
      std::vector<std::size_t> first(b.num_blocks(), std::size_t(-1));
      auto const&              ids = b.block_ids();
      for (std::size_t v = 0; v < n + q; ++v) {
        std::size_t w = m + v;
        if (first[ids[v]] == std::size_t(-1)) {
          first[ids[v]] = w;
        } else {
          uf.unite(first[ids[v]], w);
        }
      }
    }
    std::vector<Partition::block_id> ids(m + q);
    std::vector<char>                outer(m + n + q, 0);
    for (std::size_t v = 0; v < m; ++v) {
      auto r = uf.find(v);
      outer[r] = 1;
      ids[v]   = static_cast<Partition::block_id>(r);
    }
    for (std::size_t v = 0; v < q; ++v) {
      auto r = uf.find(m + n + v);
      outer[r]  = 1;
      ids[m + v] = static_cast<Partition::block_id>(r);
    }
    std::size_t floating = 0;
    for (std::size_t v = m; v < m + n; ++v) {
      auto r = uf.find(v);
      if (r == v && !outer[r]) {
        ++floating;
      }
    }
    return {Partition::from_block_ids(m, q, ids), floating};
  }

  Partition tensor(Partition const& a, Partition const& b) {
    std::size_t const ma = a.dom(), na = a.cod(), mb = b.dom(), nb = b.cod();
    auto const        shift = static_cast<Partition::block_id>(a.num_blocks());
    auto const&       ia    = a.block_ids();
    auto const&       ib    = b.block_ids();
    std::vector<Partition::block_id> ids;
    ids.reserve(ma + na + mb + nb);
    ids.insert(ids.end(), ia.begin(), ia.begin() + ma);
    for (std::size_t v = 0; v < mb; ++v) {
      ids.push_back(ib[v] + shift);
    }
    ids.insert(ids.end(), ia.begin() + ma, ia.end());
    for (std::size_t v = mb; v < mb + nb; ++v) {
      ids.push_back(ib[v] + shift);
    }
    return Partition::from_block_ids(ma + mb, na + nb, ids);
  }

  Partition involute(Partition const& a) {
    auto const&                      ia = a.block_ids();
    std::vector<Partition::block_id> ids(ia.begin() + a.dom(), ia.end());
    ids.insert(ids.end(), ia.begin(), ia.begin() + a.dom());
    return Partition::from_block_ids(a.cod(), a.dom(), ids);
  }

  bool is_brauer(Partition const& a) {
    std::vector<std::size_t> size(a.num_blocks(), 0);
    for (auto id : a.block_ids()) {
      ++size[id];
    }
    return std::all_of(
        size.begin(), size.end(), [](std::size_t s) { return s == 2; });
  }

  bool is_planar(Partition const& a) {
    // Position of each vertex on the boundary cycle +1..+m, -n..-1.
    std::size_t const m = a.dom(), n = a.cod();
    std::vector<std::vector<std::size_t>> pos(a.num_blocks());
    auto const&                           ids = a.block_ids();
    for (std::size_t v = 0; v < m + n; ++v) {
      std::size_t p = v < m ? v : m + (n - 1 - (v - m));
      pos[ids[v]].push_back(p);
    }
    for (auto& p : pos) {
      std::sort(p.begin(), p.end());
    }
    // Two blocks cross iff the merged cyclic sequence alternates at least
    // four times between them.
    for (std::size_t x = 0; x < pos.size(); ++x) {
      for (std::size_t y = x + 1; y < pos.size(); ++y) {
        std::size_t i = 0, j = 0, runs = 0;
        int         last = -1, first = -1;
        while (i < pos[x].size() || j < pos[y].size()) {
          int who;
          if (j == pos[y].size()
              || (i < pos[x].size() && pos[x][i] < pos[y][j])) {
            who = 0;
            ++i;
          } else {
            who = 1;
            ++j;
          }
          if (first == -1) {
            first = who;
          }
          if (who != last) {
            ++runs;
            last = who;
          }
        }
        if (runs > 1 && last == first) {
          --runs;  // the cyclic wrap joins the first and last runs
        }
        if (runs >= 4) {
          return false;
        }
      }
    }
    return true;
  }

  DiagramClass classify(Partition const& a) {
    bool planar = is_planar(a);
    bool brauer = is_brauer(a);
    return {planar, brauer, planar && brauer};
  }

  bool belongs_to(Partition const& a, DiagramKind kind) {
    switch (kind) {
      case DiagramKind::P:
        return true;
      case DiagramKind::PlanarP:
        return is_planar(a);
      case DiagramKind::B:
        return is_brauer(a);
      case DiagramKind::TL:
        return is_brauer(a) && is_planar(a);
    }
    return false;
  }

  ////////////////////////////////////////////////////////////////////////
  // Generators
  ////////////////////////////////////////////////////////////////////////

  namespace {
    using Blocks = std::vector<std::vector<Partition::label_type>>;

    Blocks identity_blocks(std::size_t n, std::size_t skip_from = 0,
                           std::size_t skip_to = 0) {
      Blocks out;
      for (std::size_t k = 1; k <= n; ++k) {
        if (k >= skip_from && k <= skip_to) {
          continue;
        }
        auto l = static_cast<Partition::label_type>(k);
        out.push_back({l, -l});
      }
      return out;
    }

    [[noreturn]] void no_image(GenSpec const& spec, DiagramFlavour flavour) {
      throw Error(ErrorCode::no_diagram_image,
                  spec.to_string() + " has no "
                      + (flavour == DiagramFlavour::brauer ? "Brauer"
                                                           : "partition")
                      + " diagram");
    }
  }  // namespace

  Partition generator(GenSpec const& spec, DiagramFlavour flavour) {
    if (!spec.indices_valid()) {
      throw Error(ErrorCode::out_of_range,
                  "generator indices out of range: " + spec.to_string());
    }
    bool const brauer = flavour == DiagramFlavour::brauer;
    auto const i      = static_cast<Partition::label_type>(spec.i);
    auto const n      = spec.n;
    auto const ln     = static_cast<Partition::label_type>(n);
    switch (spec.family) {
      case GenFamily::sigma: {
        auto b = identity_blocks(n, spec.i, spec.i + 1);
        b.push_back({i, -(i + 1)});
        b.push_back({i + 1, -i});
        return Partition::make(n, n, b);
      }
      case GenFamily::eps: {
        if (brauer) {
          no_image(spec, flavour);
        }
        auto b = identity_blocks(n, spec.i, spec.i);
        b.push_back({i});
        b.push_back({-i});
        return Partition::make(n, n, b);
      }
      case GenFamily::tau: {
        auto b = identity_blocks(n, spec.i, spec.i + 1);
        if (brauer) {
          b.push_back({i, i + 1});
          b.push_back({-i, -(i + 1)});
        } else {
          b.push_back({i, i + 1, -i, -(i + 1)});
        }
        return Partition::make(n, n, b);
      }
      case GenFamily::lambda: {
        auto b = identity_blocks(n);
        if (brauer) {
          b.push_back({-(ln + 1), -(ln + 2)});
          return Partition::make(n, n + 2, b);
        }
        b.push_back({-(ln + 1)});
        return Partition::make(n, n + 1, b);
      }
      case GenFamily::rho_chop: {
        auto b = identity_blocks(n);
        if (brauer) {
          b.push_back({ln + 1, ln + 2});
          return Partition::make(n + 2, n, b);
        }
        b.push_back({ln + 1});
        return Partition::make(n + 1, n, b);
      }
      case GenFamily::X:
        return Partition::make(2, 2, {{1, -2}, {2, -1}});
      case GenFamily::D:
        if (brauer) {
          no_image(spec, flavour);
        }
        return Partition::make(2, 2, {{1, 2, -1, -2}});
      case GenFamily::U:
        return brauer ? Partition::make(2, 0, {{1, 2}})
                      : Partition::make(1, 0, {{1}});
      case GenFamily::Ubar:
        return brauer ? Partition::make(0, 2, {{-1, -2}})
                      : Partition::make(0, 1, {{-1}});
      default:
        no_image(spec, flavour);
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void check_budget(std::uint64_t count, std::size_t budget,
                      DiagramKind kind, std::size_t m, std::size_t n) {
      if (count > budget) {
        throw Error(ErrorCode::budget_exceeded,
                    std::string(kind_name(kind)) + " hom(" + std::to_string(m)
                        + "," + std::to_string(n) + ") has "
                        + std::to_string(count) + " elements, budget "
                        + std::to_string(budget));
      }
    }

    // All restricted growth strings of length m + n, by recursion on the
    // next vertex.
    void all_partitions(std::vector<Partition::block_id>& ids,
                        std::size_t                       v,
                        std::size_t                       used,
                        std::size_t                       m,
                        std::size_t                       n,
                        std::vector<Partition>&           out) {
      if (v == ids.size()) {
        out.push_back(Partition::from_block_ids(m, n, ids));
        return;
      }
      for (std::size_t b = 0; b <= used; ++b) {
        ids[v] = static_cast<Partition::block_id>(b);
        all_partitions(ids, v + 1, std::max(used, b + 1), m, n, out);
      }
    }

    // Perfect matchings: pair the lowest free vertex with every other one.
    void all_matchings(std::vector<Partition::block_id>& ids,
                       Partition::block_id               next,
                       std::size_t                       m,
                       std::size_t                       n,
                       std::vector<Partition>&           out) {
      auto free = std::find(ids.begin(), ids.end(), Partition::block_id(-1));
      if (free == ids.end()) {
        out.push_back(Partition::from_block_ids(m, n, ids));
        return;
      }
      *free = next;
      for (auto it = free + 1; it != ids.end(); ++it) {
        if (*it == Partition::block_id(-1)) {
          *it = next;
          all_matchings(ids, next + 1, m, n, out);
          *it = Partition::block_id(-1);
        }
      }
      *free = Partition::block_id(-1);
    }

    using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;

    // Non-crossing perfect matchings of the boundary positions lo..hi-1:
    // position lo is joined to some k, splitting the rest in two.
    std::vector<Pairs> noncrossing(std::size_t lo, std::size_t hi) {
      if (lo == hi) {
        return {Pairs{}};
      }
      std::vector<Pairs> out;
      for (std::size_t k = lo + 1; k < hi; k += 2) {
        auto inner = noncrossing(lo + 1, k);
        auto outer = noncrossing(k + 1, hi);
        for (auto const& a : inner) {
          for (auto const& b : outer) {
            Pairs p{{lo, k}};
            p.insert(p.end(), a.begin(), a.end());
            p.insert(p.end(), b.begin(), b.end());
            out.push_back(std::move(p));
          }
        }
      }
      return out;
    }

    void noncrossing_all(std::size_t m, std::size_t n,
                         std::vector<Partition>& out) {
      std::size_t const N = m + n;
      auto vertex_at = [m, n](std::size_t p) {
        return p < m ? p : m + (n - 1 - (p - m));
      };
      for (auto const& pairs : noncrossing(0, N)) {
        std::vector<Partition::block_id> ids(N);
        Partition::block_id              next = 0;
        for (auto [x, y] : pairs) {
          ids[vertex_at(x)] = ids[vertex_at(y)] = next++;
        }
        out.push_back(Partition::from_block_ids(m, n, ids));
      }
    }
  }  // namespace

  std::vector<Partition> enumerate_homset(DiagramKind kind,
                                          std::size_t m,
                                          std::size_t n,
                                          std::size_t budget) {
    std::size_t const      N = m + n;
    std::vector<Partition> out;
    switch (kind) {
      case DiagramKind::P:
      case DiagramKind::PlanarP:
        check_budget(combinatorics::bell(N), budget, kind, m, n);
        {
          std::vector<Partition::block_id> ids(N, 0);
          all_partitions(ids, 0, 0, m, n, out);
        }
        if (kind == DiagramKind::PlanarP) {
          std::erase_if(out, [](Partition const& p) { return !is_planar(p); });
        }
        break;
      case DiagramKind::B: {
        if (N % 2 == 1) {
          return out;
        }
        check_budget(combinatorics::perfect_matchings(N), budget, kind, m, n);
        std::vector<Partition::block_id> ids(N, Partition::block_id(-1));
        all_matchings(ids, 0, m, n, out);
        break;
      }
      case DiagramKind::TL:
        if (N % 2 == 1) {
          return out;
        }
        check_budget(combinatorics::catalan(N / 2), budget, kind, m, n);
        noncrossing_all(m, n, out);
        break;
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text format
  ////////////////////////////////////////////////////////////////////////

  namespace {
    class Scanner {
     public:
      explicit Scanner(std::string_view text) : _text(text) {}

      void skip_space() {
        while (_pos < _text.size()
               && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
      }
      bool peek(char c) {
        skip_space();
        return _pos < _text.size() && _text[_pos] == c;
      }
      void expect(char c) {
        if (!peek(c)) {
          fail(std::string("expected '") + c + "'");
        }
        ++_pos;
      }
      void expect_word(std::string_view w) {
        skip_space();
        if (_text.substr(_pos, w.size()) != w) {
          fail("expected '" + std::string(w) + "'");
        }
        _pos += w.size();
      }
      long integer() {
        skip_space();
        std::size_t start = _pos;
        if (_pos < _text.size() && _text[_pos] == '-') {
          ++_pos;
        }
        std::size_t digits = _pos;
        while (_pos < _text.size()
               && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
        if (digits == _pos) {
          fail("expected an integer");
        }
        return std::stol(std::string(_text.substr(start, _pos - start)));
      }
      bool at_end() {
        skip_space();
        return _pos == _text.size();
      }
      [[noreturn]] void fail(std::string const& msg) const {
        throw Error(ErrorCode::syntax_error,
                    msg + " at column " + std::to_string(_pos + 1));
      }

     private:
      std::string_view _text;
      std::size_t      _pos = 0;
    };
  }  // namespace

  Partition parse_partition(std::string_view text) {
    Scanner s(text);
    s.expect_word("P");
    s.expect('[');
    long m = s.integer();
    s.expect(',');
    long n = s.integer();
    s.expect(']');
    if (m < 0 || n < 0) {
      s.fail("negative size");
    }
    s.expect('{');
    std::vector<std::vector<Partition::label_type>> blocks;
    while (s.peek('{')) {
      s.expect('{');
      std::vector<Partition::label_type> block;
      if (!s.peek('}')) {
        block.push_back(static_cast<int>(s.integer()));
        while (s.peek(',')) {
          s.expect(',');
          block.push_back(static_cast<int>(s.integer()));
        }
      }
      s.expect('}');
      blocks.push_back(std::move(block));
    }
    s.expect('}');
    if (!s.at_end()) {
      s.fail("trailing input");
    }
    return Partition::make(std::size_t(m), std::size_t(n), blocks);
  }

}  // namespace diagcat

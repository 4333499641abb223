#include "diagcat/partial_map.hpp"

#include <algorithm>  // for sort
#include <cctype>     // for isdigit, isspace

#include "diagcat/error.hpp"  // for Error

namespace diagcat {

  std::string_view kind_name(MapKind kind) noexcept {
    switch (kind) {
      case MapKind::PT:
        return "PT";
      case MapKind::T:
        return "T";
      case MapKind::I:
        return "I";
      case MapKind::PO:
        return "PO";
      case MapKind::O:
        return "O";
      case MapKind::OI:
        return "OI";
    }
    return "?";
  }

  PartialMap::PartialMap(std::size_t             m,
                         std::size_t             n,
                         std::vector<point_type> image)
      : _n(n), _image(std::move(image)) {
    if (_image.size() != m) {
      throw Error(ErrorCode::shape_mismatch,
                  "expected " + std::to_string(m) + " images, got "
                      + std::to_string(_image.size()));
    }
    for (std::size_t x = 0; x < m; ++x) {
      if (_image[x] > n) {
        throw Error(ErrorCode::out_of_range,
                    "image " + std::to_string(_image[x]) + " of "
                        + std::to_string(x + 1) + " exceeds "
                        + std::to_string(n));
      }
    }
  }

  PartialMap PartialMap::identity(std::size_t n) {
    std::vector<point_type> image(n);
    for (std::size_t x = 0; x < n; ++x) {
      image[x] = static_cast<point_type>(x + 1);
    }
    return PartialMap(n, n, std::move(image));
  }

  std::size_t PartialMap::rank() const noexcept {
    std::size_t r = 0;
    for (auto y : _image) {
      r += (y != 0);
    }
    return r;
  }

  void PartialMap::set(std::size_t x, point_type y) {
    if (x == 0 || x > _image.size() || y > _n) {
      throw Error(ErrorCode::out_of_range,
                  std::to_string(x) + ":" + std::to_string(y)
                      + " is not a point of F[" + std::to_string(dom()) + ","
                      + std::to_string(_n) + "]");
    }
    _image[x - 1] = y;
  }

  std::string PartialMap::to_string() const {
    std::string out
        = "F[" + std::to_string(dom()) + "," + std::to_string(_n) + "]{";
    bool first = true;
    for (std::size_t x = 0; x < _image.size(); ++x) {
      if (_image[x] == 0) {
        continue;
      }
      if (!first) {
        out += " ";
      }
      first = false;
      out += std::to_string(x + 1) + ":" + std::to_string(_image[x]);
    }
    return out + "}";
  }

  std::size_t PartialMap::hash() const noexcept {
    std::size_t h = dom() * 131 + _n;
    for (auto y : _image) {
      h = h * 1099511628211ull + y + 1;
    }
    return h;
  }

  PartialMap compose(PartialMap const& f, PartialMap const& g) {
    if (f.cod() != g.dom()) {
      throw Error(ErrorCode::shape_mismatch,
                  "cannot compose F[" + std::to_string(f.dom()) + ","
                      + std::to_string(f.cod()) + "] with F["
                      + std::to_string(g.dom()) + "," + std::to_string(g.cod())
                      + "]");
    }
    std::vector<PartialMap::point_type> image(f.dom(), 0);
    for (std::size_t x = 1; x <= f.dom(); ++x) {
      auto y = f.image(x);
      if (y != 0) {
        image[x - 1] = g.image(y);
      }
    }
    return PartialMap(f.dom(), g.cod(), std::move(image));
  }

  PartialMap tensor(PartialMap const& f, PartialMap const& g) {
    std::vector<PartialMap::point_type> image(f.images());
    auto const shift = static_cast<PartialMap::point_type>(f.cod());
    for (auto y : g.images()) {
      image.push_back(y == 0 ? 0 : y + shift);
    }
    return PartialMap(f.dom() + g.dom(), f.cod() + g.cod(), std::move(image));
  }

  bool is_total(PartialMap const& f) {
    return f.rank() == f.dom();
  }

  bool is_injective(PartialMap const& f) {
    std::vector<char> hit(f.cod() + 1, 0);
    for (auto y : f.images()) {
      if (y != 0) {
        if (hit[y]) {
          return false;
        }
        hit[y] = 1;
      }
    }
    return true;
  }

  bool is_isotone(PartialMap const& f) {
    PartialMap::point_type last = 0;
    for (auto y : f.images()) {
      if (y != 0) {
        if (y < last) {
          return false;
        }
        last = y;
      }
    }
    return true;
  }

  bool belongs_to(PartialMap const& f, MapKind kind) {
    switch (kind) {
      case MapKind::PT:
        return true;
      case MapKind::T:
        return is_total(f);
      case MapKind::I:
        return is_injective(f);
      case MapKind::PO:
        return is_isotone(f);
      case MapKind::O:
        return is_isotone(f) && is_total(f);
      case MapKind::OI:
        return is_isotone(f) && is_injective(f);
    }
    return false;
  }

  PartialMap map_generator(GenSpec const& spec) {
    if (!spec.indices_valid()) {
      throw Error(ErrorCode::out_of_range,
                  "generator indices out of range: " + spec.to_string());
    }
    std::size_t const n = spec.n;
    std::size_t const i = spec.i;
    auto const        p = [](std::size_t x) {
      return static_cast<PartialMap::point_type>(x);
    };
    switch (spec.family) {
      case GenFamily::X:
      case GenFamily::Xinv:
        return PartialMap(2, 2, {2, 1});
      case GenFamily::V:
        return PartialMap(2, 1, {1, 1});
      case GenFamily::U:
        return PartialMap(1, 0);
      case GenFamily::Ubar:
        return PartialMap(0, 1);
      case GenFamily::sigma:
      case GenFamily::sigma_inv: {
        auto f = PartialMap::identity(n);
        f.set(i, p(i + 1));
        f.set(i + 1, p(i));
        return f;
      }
      case GenFamily::eps: {
        auto f = PartialMap::identity(n);
        f.set(i, 0);
        return f;
      }
      case GenFamily::mu: {
        auto f = PartialMap::identity(n);
        f.set(i + 1, p(i));
        return f;
      }
      case GenFamily::eta: {
        auto f = PartialMap::identity(n);
        f.set(i, p(i + 1));
        return f;
      }
      case GenFamily::lambda: {
        PartialMap f(n, n + 1);
        for (std::size_t x = 1; x <= n; ++x) {
          f.set(x, p(x));
        }
        return f;
      }
      case GenFamily::rho_chop: {
        PartialMap f(n + 1, n);
        for (std::size_t x = 1; x <= n; ++x) {
          f.set(x, p(x));
        }
        return f;
      }
      case GenFamily::rho_fold: {
        if (n == 0) {
          throw Error(ErrorCode::unknown_spec, "r[0] cannot fold onto [0]");
        }
        PartialMap f(n + 1, n);
        for (std::size_t x = 1; x <= n; ++x) {
          f.set(x, p(x));
        }
        f.set(n + 1, p(n));
        return f;
      }
      default:
        throw Error(ErrorCode::unknown_spec,
                    spec.to_string() + " has no transformation image");
    }
  }

  namespace {
    void all_maps(MapKind                              kind,
                  std::vector<PartialMap::point_type>& image,
                  std::size_t                          x,
                  std::size_t                          n,
                  std::vector<char>&                   used,
                  PartialMap::point_type               floor,
                  std::vector<PartialMap>&             out) {
      if (x == image.size()) {
        out.emplace_back(image.size(), n, image);
        return;
      }
      bool const total     = kind == MapKind::T || kind == MapKind::O;
      bool const injective = kind == MapKind::I || kind == MapKind::OI;
      bool const isotone   = kind == MapKind::PO || kind == MapKind::O
                           || kind == MapKind::OI;
      if (!total) {
        image[x] = 0;
        all_maps(kind, image, x + 1, n, used, floor, out);
      }
      for (PartialMap::point_type y = 1; y <= n; ++y) {
        if ((injective && used[y]) || (isotone && y < floor)) {
          continue;
        }
        image[x] = y;
        used[y]  = 1;
        all_maps(kind, image, x + 1, n, used, isotone ? y : floor, out);
        used[y] = 0;
      }
      image[x] = 0;
    }

    std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t e) {
      std::uint64_t r = 1;
      for (std::uint64_t k = 0; k < e; ++k) {
        if (r > (std::uint64_t(1) << 40)) {
          return r;
        }
        r *= base;
      }
      return r;
    }
  }  // namespace

  std::vector<PartialMap> enumerate_homset(MapKind     kind,
                                           std::size_t m,
                                           std::size_t n,
                                           std::size_t budget) {
    // (n + 1)^m bounds every kind.
    auto bound = saturating_pow(n + 1, m);
    if (bound > budget && kind == MapKind::PT) {
      throw Error(ErrorCode::budget_exceeded,
                  "PT hom(" + std::to_string(m) + "," + std::to_string(n)
                      + ") has " + std::to_string(bound) + " elements, budget "
                      + std::to_string(budget));
    }
    std::vector<PartialMap>             out;
    std::vector<PartialMap::point_type> image(m, 0);
    std::vector<char>                   used(n + 1, 0);
    all_maps(kind, image, 0, n, used, 1, out);
    if (out.size() > budget) {
      throw Error(ErrorCode::budget_exceeded,
                  std::string(kind_name(kind)) + " hom(" + std::to_string(m)
                      + "," + std::to_string(n) + ") exceeds budget "
                      + std::to_string(budget));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  PartialMap parse_partial_map(std::string_view text) {
    std::size_t pos  = 0;
    auto        fail = [&](std::string const& msg) {
      throw Error(ErrorCode::syntax_error,
                  msg + " at column " + std::to_string(pos + 1));
    };
    auto skip = [&] {
      while (pos < text.size()
             && std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
    };
    auto expect = [&](char c) {
      skip();
      if (pos >= text.size() || text[pos] != c) {
        fail(std::string("expected '") + c + "'");
      }
      ++pos;
    };
    auto number = [&]() -> std::size_t {
      skip();
      std::size_t start = pos;
      while (pos < text.size()
             && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
      if (start == pos) {
        fail("expected a number");
      }
      return std::stoul(std::string(text.substr(start, pos - start)));
    };
    expect('F');
    expect('[');
    auto m = number();
    expect(',');
    auto n = number();
    expect(']');
    expect('{');
    PartialMap f(m, n);
    skip();
    while (pos < text.size() && text[pos] != '}') {
      auto x = number();
      expect(':');
      auto y = number();
      if (x == 0 || x > m || y == 0 || y > n) {
        throw Error(ErrorCode::out_of_range,
                    std::to_string(x) + ":" + std::to_string(y)
                        + " is not a point of F[" + std::to_string(m) + ","
                        + std::to_string(n) + "]");
      }
      if (f.defined_at(x)) {
        throw Error(ErrorCode::duplicate_label,
                    "point " + std::to_string(x) + " listed twice");
      }
      f.set(x, static_cast<PartialMap::point_type>(y));
      skip();
    }
    expect('}');
    skip();
    if (pos != text.size()) {
      fail("trailing input");
    }
    return f;
  }

}  // namespace diagcat

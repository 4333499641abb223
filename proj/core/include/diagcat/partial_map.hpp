#ifndef DIAGCAT_PARTIAL_MAP_HPP_
#define DIAGCAT_PARTIAL_MAP_HPP_

#include <cstddef>      // for size_t
#include <cstdint>      // for uint32_t
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "gen_spec.hpp"  // for GenSpec

namespace diagcat {

  enum class MapKind { PT, T, I, PO, O, OI };

  std::string_view kind_name(MapKind kind) noexcept;

  // A partial function [m] -> [n]. Points are 1-based; image(x) == 0 means x
  // is outside the domain.
  class PartialMap {
   public:
    using point_type = std::uint32_t;

    PartialMap() = default;
    // Everywhere undefined.
    PartialMap(std::size_t m, std::size_t n) : _n(n), _image(m, 0) {}
    PartialMap(std::size_t m, std::size_t n, std::vector<point_type> image);

    static PartialMap identity(std::size_t n);

    std::size_t dom() const noexcept {
      return _image.size();
    }
    std::size_t cod() const noexcept {
      return _n;
    }
    point_type image(std::size_t x) const noexcept {
      return _image[x - 1];
    }
    bool defined_at(std::size_t x) const noexcept {
      return _image[x - 1] != 0;
    }
    std::vector<point_type> const& images() const noexcept {
      return _image;
    }
    std::size_t rank() const noexcept;

    void set(std::size_t x, point_type y);

    // "F[m,n]{1:3 2:3}", ascending domain order.
    std::string to_string() const;

    friend bool operator==(PartialMap const&, PartialMap const&) = default;
    friend auto operator<=>(PartialMap const& a, PartialMap const& b) {
      if (auto c = a.dom() <=> b.dom(); c != 0) {
        return c;
      }
      if (auto c = a._n <=> b._n; c != 0) {
        return c;
      }
      return a._image <=> b._image;
    }

    std::size_t hash() const noexcept;

   private:
    std::size_t             _n = 0;
    std::vector<point_type> _image;
  };

  struct PartialMapHash {
    std::size_t operator()(PartialMap const& f) const noexcept {
      return f.hash();
    }
  };

  // x -> g(f(x)) where both are defined.
  PartialMap compose(PartialMap const& f, PartialMap const& g);
  PartialMap tensor(PartialMap const& f, PartialMap const& g);

  bool is_total(PartialMap const& f);
  bool is_injective(PartialMap const& f);
  // x <= y in the domain implies f(x) <= f(y).
  bool is_isotone(PartialMap const& f);
  bool belongs_to(PartialMap const& f, MapKind kind);

  // Image of a generator symbol under the surmorphism onto transformations.
  PartialMap map_generator(GenSpec const& spec);

  std::vector<PartialMap> enumerate_homset(MapKind     kind,
                                           std::size_t m,
                                           std::size_t n,
                                           std::size_t budget = 5'000'000);

  // Parses the text produced by PartialMap::to_string.
  PartialMap parse_partial_map(std::string_view text);

}  // namespace diagcat

#endif  // DIAGCAT_PARTIAL_MAP_HPP_

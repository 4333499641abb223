#ifndef DIAGCAT_PARTITION_HPP_
#define DIAGCAT_PARTITION_HPP_

#include <compare>      // for strong_ordering
#include <cstddef>      // for size_t
#include <cstdint>      // for uint16_t
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "gen_spec.hpp"  // for GenSpec

namespace diagcat {

  enum class DiagramKind { P, PlanarP, B, TL };

  // Which generator shapes apply: the partition shapes (P and planar P) or
  // the Brauer shapes (B and TL). tau, lambda, rho, U and Ubar differ.
  enum class DiagramFlavour { partition, brauer };

  DiagramFlavour flavour_of(DiagramKind kind) noexcept;
  std::string_view kind_name(DiagramKind kind) noexcept;

  struct DiagramClass {
    bool planar;
    bool brauer;
    bool tl;
  };

  // A set partition of {+1..+m} u {-1..-n}. Vertices are indexed by key - 1,
  // where key(+i) = i and key(-j) = m + j. The partition is stored as one
  // block id per vertex with blocks numbered in order of their minimum key,
  // which is a canonical form: two partitions are equal iff the id vectors
  // are equal.
  class Partition {
   public:
    using label_type = int;
    using block_id   = std::uint16_t;

    Partition() = default;

    // Raw blocks of signed labels. Empty raw blocks are ignored.
    static Partition make(std::size_t                             m,
                          std::size_t                             n,
                          std::vector<std::vector<label_type>> const& blocks);

    static Partition identity(std::size_t n);

    // Any assignment of ids to the m + n vertices; ids are renumbered.
    static Partition from_block_ids(std::size_t                m,
                                    std::size_t                n,
                                    std::vector<block_id> const& ids);

    std::size_t dom() const noexcept {
      return _m;
    }
    std::size_t cod() const noexcept {
      return _n;
    }
    std::size_t num_vertices() const noexcept {
      return _m + _n;
    }
    std::size_t num_blocks() const noexcept {
      return _num_blocks;
    }
    std::vector<block_id> const& block_ids() const noexcept {
      return _ids;
    }

    // Blocks as signed labels in canonical order.
    std::vector<std::vector<label_type>> blocks() const;

    // The vertex index for a signed label.
    std::size_t vertex(label_type label) const;
    label_type  label(std::size_t vertex) const noexcept {
      return vertex < _m ? static_cast<label_type>(vertex + 1)
                         : -static_cast<label_type>(vertex - _m + 1);
    }

    std::string to_string() const;

    friend bool operator==(Partition const& a, Partition const& b) noexcept {
      return a._m == b._m && a._n == b._n && a._ids == b._ids;
    }

    // Canonical diagram order: by (m, n), then lexicographically by block
    // lists, each block compared as its increasing key sequence.
    friend std::strong_ordering operator<=>(Partition const& a,
                                            Partition const& b);

    std::size_t hash() const noexcept;

   private:
    Partition(std::size_t m, std::size_t n, std::vector<block_id> ids);
    void canonicalize();

    std::size_t           _m          = 0;
    std::size_t           _n          = 0;
    std::size_t           _num_blocks = 0;
    std::vector<block_id> _ids;
  };

  struct PartitionHash {
    std::size_t operator()(Partition const& p) const noexcept {
      return p.hash();
    }
  };

  struct Composite {
    Partition   diagram;
    std::size_t floating;
  };

  // Product-graph composition; floating counts the components lying wholly
  // in the middle row.
  Composite compose(Partition const& a, Partition const& b);
  Partition tensor(Partition const& a, Partition const& b);
  Partition involute(Partition const& a);

  bool         is_brauer(Partition const& a);
  bool         is_planar(Partition const& a);
  DiagramClass classify(Partition const& a);
  bool         belongs_to(Partition const& a, DiagramKind kind);

  Partition generator(GenSpec const& spec, DiagramFlavour flavour);

  inline constexpr std::size_t default_enumeration_budget = 5'000'000;

  // Every diagram of the kind in hom(m, n), in canonical order.
  std::vector<Partition>
  enumerate_homset(DiagramKind kind,
                   std::size_t m,
                   std::size_t n,
                   std::size_t budget = default_enumeration_budget);

  // Parses the text produced by Partition::to_string.
  Partition parse_partition(std::string_view text);

}  // namespace diagcat

#endif  // DIAGCAT_PARTITION_HPP_

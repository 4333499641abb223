#ifndef DIAGCAT_SEMANTICS_HPP_
#define DIAGCAT_SEMANTICS_HPP_

#include <cstddef>        // for size_t
#include <memory>         // for shared_ptr
#include <optional>       // for optional
#include <string>         // for string
#include <string_view>    // for string_view
#include <unordered_map>  // for unordered_map
#include <vector>         // for vector

#include "gen_spec.hpp"  // for GenSpec
#include "morphism.hpp"  // for Morphism

namespace diagcat {

  enum class SemanticsTag {
    P,
    B,
    TL,
    PT,
    T,
    I,
    PO,
    O,
    OI,
    P_linear,
    B_linear,
    TL_linear,
    shadow_PV,
    shadow_IB,
    shadow_V
  };

  std::string_view tag_name(SemanticsTag tag) noexcept;

  // A target tensor category together with an assignment of morphisms to
  // generator symbols. Edge images must have the arities the signature gives
  // them; evaluation reports ShapeMismatch otherwise.
  class Semantics {
   public:
    explicit Semantics(std::string name) : _name(std::move(name)) {}
    virtual ~Semantics() = default;

    std::string const& name() const noexcept {
      return _name;
    }

    virtual Morphism identity(std::size_t n) const = 0;
    virtual Morphism compose(Morphism const& a, Morphism const& b) const = 0;
    virtual Morphism tensor(Morphism const& a, Morphism const& b) const = 0;
    // std::nullopt when the symbol has no image.
    virtual std::optional<Morphism> assign(GenSpec const& g) const = 0;

    virtual bool has_involution() const {
      return false;
    }
    virtual Morphism involute(Morphism const& a) const;

    virtual bool enumerable() const {
      return false;
    }
    virtual std::vector<Morphism>
    enumerate(std::size_t m, std::size_t n, std::size_t budget) const;

   private:
    std::string _name;
  };

  class DiagramSemantics : public Semantics {
   public:
    explicit DiagramSemantics(DiagramKind kind);

    DiagramKind kind() const noexcept {
      return _kind;
    }

    Morphism identity(std::size_t n) const override;
    Morphism compose(Morphism const& a, Morphism const& b) const override;
    Morphism tensor(Morphism const& a, Morphism const& b) const override;
    std::optional<Morphism> assign(GenSpec const& g) const override;
    bool                    has_involution() const override {
      return true;
    }
    Morphism involute(Morphism const& a) const override;
    bool     enumerable() const override {
      return true;
    }
    std::vector<Morphism>
    enumerate(std::size_t m, std::size_t n, std::size_t budget) const override;

   private:
    DiagramKind _kind;
  };

  // The d-linear category: morphisms are LinComb, composition is the star
  // product that records floating components as powers of d.
  class LinearDiagramSemantics : public Semantics {
   public:
    explicit LinearDiagramSemantics(DiagramKind kind);

    Morphism identity(std::size_t n) const override;
    Morphism compose(Morphism const& a, Morphism const& b) const override;
    Morphism tensor(Morphism const& a, Morphism const& b) const override;
    std::optional<Morphism> assign(GenSpec const& g) const override;
    bool                    has_involution() const override {
      return true;
    }
    Morphism involute(Morphism const& a) const override;

   private:
    DiagramKind _kind;
  };

  class MapSemantics : public Semantics {
   public:
    explicit MapSemantics(MapKind kind, std::string name = "");

    MapKind kind() const noexcept {
      return _kind;
    }

    Morphism identity(std::size_t n) const override;
    Morphism compose(Morphism const& a, Morphism const& b) const override;
    Morphism tensor(Morphism const& a, Morphism const& b) const override;
    std::optional<Morphism> assign(GenSpec const& g) const override;
    bool                    enumerable() const override {
      return true;
    }
    std::vector<Morphism>
    enumerate(std::size_t m, std::size_t n, std::size_t budget) const override;

   private:
    MapKind _kind;
  };

  // Explicit edge assignment on top of a base semantics; symbols missing from
  // the table are unassigned.
  class TableSemantics : public Semantics {
   public:
    TableSemantics(std::shared_ptr<Semantics const> base,
                   std::unordered_map<GenSpec, Morphism, GenSpecHash> table,
                   std::string name = "table");

    Morphism identity(std::size_t n) const override {
      return _base->identity(n);
    }
    Morphism compose(Morphism const& a, Morphism const& b) const override {
      return _base->compose(a, b);
    }
    Morphism tensor(Morphism const& a, Morphism const& b) const override {
      return _base->tensor(a, b);
    }
    std::optional<Morphism> assign(GenSpec const& g) const override;

   private:
    std::shared_ptr<Semantics const>                   _base;
    std::unordered_map<GenSpec, Morphism, GenSpecHash> _table;
  };

  std::shared_ptr<Semantics const> semantics_for(SemanticsTag tag);
  // Accepts the tag names: P, B, TL, PT, T, I, PO, O, OI, P-linear, ...
  std::shared_ptr<Semantics const> semantics_by_name(std::string_view name);

}  // namespace diagcat

#endif  // DIAGCAT_SEMANTICS_HPP_

#include "diagcat/semantics.hpp"

#include <array>  // for array
#include <mutex>  // for once_flag

#include "diagcat/error.hpp"  // for Error

namespace diagcat {

  std::size_t dom(Morphism const& f) {
    return std::visit([](auto const& x) { return x.dom(); }, f);
  }

  std::size_t cod(Morphism const& f) {
    return std::visit([](auto const& x) { return x.cod(); }, f);
  }

  std::string to_string(Morphism const& f) {
    return std::visit([](auto const& x) { return x.to_string(); }, f);
  }

  std::string_view tag_name(SemanticsTag tag) noexcept {
    switch (tag) {
      case SemanticsTag::P:
        return "P";
      case SemanticsTag::B:
        return "B";
      case SemanticsTag::TL:
        return "TL";
      case SemanticsTag::PT:
        return "PT";
      case SemanticsTag::T:
        return "T";
      case SemanticsTag::I:
        return "I";
      case SemanticsTag::PO:
        return "PO";
      case SemanticsTag::O:
        return "O";
      case SemanticsTag::OI:
        return "OI";
      case SemanticsTag::P_linear:
        return "P-linear";
      case SemanticsTag::B_linear:
        return "B-linear";
      case SemanticsTag::TL_linear:
        return "TL-linear";
      case SemanticsTag::shadow_PV:
        return "shadow-PV";
      case SemanticsTag::shadow_IB:
        return "shadow-IB";
      case SemanticsTag::shadow_V:
        return "shadow-V";
    }
    return "?";
  }

  ////////////////////////////////////////////////////////////////////////
  // Semantics
  ////////////////////////////////////////////////////////////////////////

  Morphism Semantics::involute(Morphism const&) const {
    throw Error(ErrorCode::unknown_spec, _name + " has no involution");
  }

  std::vector<Morphism>
  Semantics::enumerate(std::size_t, std::size_t, std::size_t) const {
    throw Error(ErrorCode::unknown_spec, _name + " is not enumerable");
  }

  namespace {
    template <typename T>
    T const& as(Morphism const& f, std::string const& who) {
      if (auto const* p = std::get_if<T>(&f)) {
        return *p;
      }
      throw Error(ErrorCode::shape_mismatch,
                  who + " received a morphism of the wrong type: "
                      + to_string(f));
    }
  }  // namespace

  DiagramSemantics::DiagramSemantics(DiagramKind kind)
      : Semantics(std::string(kind_name(kind))), _kind(kind) {}

  Morphism DiagramSemantics::identity(std::size_t n) const {
    return Partition::identity(n);
  }

  Morphism DiagramSemantics::compose(Morphism const& a,
                                     Morphism const& b) const {
    return diagcat::compose(as<Partition>(a, name()), as<Partition>(b, name()))
        .diagram;
  }

  Morphism DiagramSemantics::tensor(Morphism const& a,
                                    Morphism const& b) const {
    return diagcat::tensor(as<Partition>(a, name()), as<Partition>(b, name()));
  }

  std::optional<Morphism> DiagramSemantics::assign(GenSpec const& g) const {
    try {
      return Morphism(generator(g, flavour_of(_kind)));
    } catch (Error const& e) {
      if (e.code() == ErrorCode::no_diagram_image) {
        return std::nullopt;
      }
      throw;
    }
  }

  Morphism DiagramSemantics::involute(Morphism const& a) const {
    return diagcat::involute(as<Partition>(a, name()));
  }

  std::vector<Morphism> DiagramSemantics::enumerate(std::size_t m,
                                                    std::size_t n,
                                                    std::size_t budget) const {
    auto                  all = enumerate_homset(_kind, m, n, budget);
    std::vector<Morphism> out(std::make_move_iterator(all.begin()),
                              std::make_move_iterator(all.end()));
    return out;
  }

  LinearDiagramSemantics::LinearDiagramSemantics(DiagramKind kind)
      : Semantics(std::string(kind_name(kind)) + "-linear"), _kind(kind) {}

  Morphism LinearDiagramSemantics::identity(std::size_t n) const {
    return LinComb::identity(n);
  }

  Morphism LinearDiagramSemantics::compose(Morphism const& a,
                                           Morphism const& b) const {
    return star_compose(as<LinComb>(a, name()), as<LinComb>(b, name()));
  }

  Morphism LinearDiagramSemantics::tensor(Morphism const& a,
                                          Morphism const& b) const {
    return star_tensor(as<LinComb>(a, name()), as<LinComb>(b, name()));
  }

  std::optional<Morphism>
  LinearDiagramSemantics::assign(GenSpec const& g) const {
    try {
      return Morphism(LinComb::basis(generator(g, flavour_of(_kind))));
    } catch (Error const& e) {
      if (e.code() == ErrorCode::no_diagram_image) {
        return std::nullopt;
      }
      throw;
    }
  }

  Morphism LinearDiagramSemantics::involute(Morphism const& a) const {
    return star_involute(as<LinComb>(a, name()));
  }

  MapSemantics::MapSemantics(MapKind kind, std::string name)
      : Semantics(name.empty() ? std::string(kind_name(kind)) : name),
        _kind(kind) {}

  Morphism MapSemantics::identity(std::size_t n) const {
    return PartialMap::identity(n);
  }

  Morphism MapSemantics::compose(Morphism const& a, Morphism const& b) const {
    return diagcat::compose(as<PartialMap>(a, name()),
                            as<PartialMap>(b, name()));
  }

  Morphism MapSemantics::tensor(Morphism const& a, Morphism const& b) const {
    return diagcat::tensor(as<PartialMap>(a, name()),
                           as<PartialMap>(b, name()));
  }

  std::optional<Morphism> MapSemantics::assign(GenSpec const& g) const {
    try {
      return Morphism(map_generator(g));
    } catch (Error const& e) {
      if (e.code() == ErrorCode::unknown_spec) {
        return std::nullopt;
      }
      throw;
    }
  }

  std::vector<Morphism> MapSemantics::enumerate(std::size_t m,
                                                std::size_t n,
                                                std::size_t budget) const {
    auto                  all = enumerate_homset(_kind, m, n, budget);
    std::vector<Morphism> out(std::make_move_iterator(all.begin()),
                              std::make_move_iterator(all.end()));
    return out;
  }

  TableSemantics::TableSemantics(
      std::shared_ptr<Semantics const>                   base,
      std::unordered_map<GenSpec, Morphism, GenSpecHash> table,
      std::string                                        name)
      : Semantics(std::move(name)),
        _base(std::move(base)),
        _table(std::move(table)) {}

  std::optional<Morphism> TableSemantics::assign(GenSpec const& g) const {
    auto it = _table.find(g);
    if (it == _table.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  ////////////////////////////////////////////////////////////////////////
  // Registry
  ////////////////////////////////////////////////////////////////////////

  namespace {
    constexpr std::array all_tags = {SemanticsTag::P,
                                     SemanticsTag::B,
                                     SemanticsTag::TL,
                                     SemanticsTag::PT,
                                     SemanticsTag::T,
                                     SemanticsTag::I,
                                     SemanticsTag::PO,
                                     SemanticsTag::O,
                                     SemanticsTag::OI,
                                     SemanticsTag::P_linear,
                                     SemanticsTag::B_linear,
                                     SemanticsTag::TL_linear,
                                     SemanticsTag::shadow_PV,
                                     SemanticsTag::shadow_IB,
                                     SemanticsTag::shadow_V};

    std::shared_ptr<Semantics const> make(SemanticsTag tag) {
      switch (tag) {
        case SemanticsTag::P:
          return std::make_shared<DiagramSemantics>(DiagramKind::P);
        case SemanticsTag::B:
          return std::make_shared<DiagramSemantics>(DiagramKind::B);
        case SemanticsTag::TL:
          return std::make_shared<DiagramSemantics>(DiagramKind::TL);
        case SemanticsTag::PT:
          return std::make_shared<MapSemantics>(MapKind::PT);
        case SemanticsTag::T:
          return std::make_shared<MapSemantics>(MapKind::T);
        case SemanticsTag::I:
          return std::make_shared<MapSemantics>(MapKind::I);
        case SemanticsTag::PO:
          return std::make_shared<MapSemantics>(MapKind::PO);
        case SemanticsTag::O:
          return std::make_shared<MapSemantics>(MapKind::O);
        case SemanticsTag::OI:
          return std::make_shared<MapSemantics>(MapKind::OI);
        case SemanticsTag::P_linear:
          return std::make_shared<LinearDiagramSemantics>(DiagramKind::P);
        case SemanticsTag::B_linear:
          return std::make_shared<LinearDiagramSemantics>(DiagramKind::B);
        case SemanticsTag::TL_linear:
          return std::make_shared<LinearDiagramSemantics>(DiagramKind::TL);
        case SemanticsTag::shadow_PV:
          return std::make_shared<MapSemantics>(MapKind::PT, "shadow-PV");
        case SemanticsTag::shadow_IB:
          return std::make_shared<MapSemantics>(MapKind::I, "shadow-IB");
        case SemanticsTag::shadow_V:
          return std::make_shared<MapSemantics>(MapKind::T, "shadow-V");
      }
      throw Error(ErrorCode::unknown_name, "unknown semantics tag");
    }
  }  // namespace

  std::shared_ptr<Semantics const> semantics_for(SemanticsTag tag) {
    static std::array<std::shared_ptr<Semantics const>, all_tags.size()> cache;
    static std::once_flag                                              once;
    std::call_once(once, [] {
      for (std::size_t k = 0; k < all_tags.size(); ++k) {
        cache[k] = make(all_tags[k]);
      }
    });
    return cache[static_cast<std::size_t>(tag)];
  }

  std::shared_ptr<Semantics const> semantics_by_name(std::string_view name) {
    for (auto tag : all_tags) {
      if (tag_name(tag) == name) {
        return semantics_for(tag);
      }
    }
    throw Error(ErrorCode::unknown_name,
                "no semantics named '" + std::string(name) + "'");
  }

}  // namespace diagcat

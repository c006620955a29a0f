#include "fre2fa/lattice.hpp"

#include <stdexcept>
#include <string>

namespace fre2fa {

std::string_view LatticeStructure::name() const noexcept
{
    switch (kind_) {
    case StructureKind::Goedel: return "goedel";
    case StructureKind::Product: return "product";
    case StructureKind::Boolean: return "boolean";
    }
    return "unknown";
}

TruthValue LatticeStructure::join(const TruthValue& a, const TruthValue& b) const
{
    return fre2fa::join(a, b);
}

TruthValue LatticeStructure::meet(const TruthValue& a, const TruthValue& b) const
{
    return fre2fa::meet(a, b);
}

TruthValue LatticeStructure::tensor(const TruthValue& a, const TruthValue& b) const
{
    switch (kind_) {
    case StructureKind::Product:
        if (a.is_one())
            return b;
        if (b.is_one())
            return a;
        return TruthValue(a.rational() * b.rational());
    case StructureKind::Goedel:
    case StructureKind::Boolean:
        break;
    }
    return fre2fa::meet(a, b);
}

bool LatticeStructure::admits(const TruthValue& v) const
{
    return kind_ != StructureKind::Boolean || v.is_zero() || v.is_one();
}

TruthValue join(const TruthValue& a, const TruthValue& b)
{
    return a < b ? b : a;
}

TruthValue meet(const TruthValue& a, const TruthValue& b)
{
    return b < a ? b : a;
}

TruthValue tensor(const LatticeStructure& structure, const TruthValue& a, const TruthValue& b)
{
    return structure.tensor(a, b);
}

StructureKind parse_structure_kind(std::string_view name)
{
    if (name == "goedel")
        return StructureKind::Goedel;
    if (name == "product")
        return StructureKind::Product;
    if (name == "boolean")
        return StructureKind::Boolean;
    throw std::invalid_argument("unknown structure '" + std::string(name) + "'");
}

} // namespace fre2fa

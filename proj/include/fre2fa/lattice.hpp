#ifndef FRE2FA_LATTICE_HPP
#define FRE2FA_LATTICE_HPP

#include <string_view>

#include "fre2fa/truth_value.hpp"

namespace fre2fa {

enum class StructureKind { Goedel, Product, Boolean };

/// Integral lattice-ordered monoid over a totally ordered carrier in
/// [0, 1]. Join and meet are max and min; the monoid product depends on
/// the kind:
///
///   Goedel   a (x) b = min(a, b)
///   Product  a (x) b = a * b
///   Boolean  min restricted to {0, 1}
///
/// Every provided kind is integral (identity e coincides with top 1).
class LatticeStructure {
public:
    LatticeStructure() = default;
    explicit LatticeStructure(StructureKind kind) : kind_(kind) {}

    StructureKind kind() const noexcept { return kind_; }
    std::string_view name() const noexcept;

    TruthValue join(const TruthValue& a, const TruthValue& b) const;
    TruthValue meet(const TruthValue& a, const TruthValue& b) const;
    TruthValue tensor(const TruthValue& a, const TruthValue& b) const;

    TruthValue zero() const { return TruthValue::zero(); }
    TruthValue one() const { return TruthValue::one(); }
    TruthValue identity() const { return TruthValue::one(); }

    bool is_integral() const { return identity() == one(); }
    /// Whether `v` belongs to the carrier ({0, 1} for Boolean).
    bool admits(const TruthValue& v) const;

    friend bool operator==(const LatticeStructure&, const LatticeStructure&) = default;

private:
    StructureKind kind_ = StructureKind::Goedel;
};

TruthValue join(const TruthValue& a, const TruthValue& b);
TruthValue meet(const TruthValue& a, const TruthValue& b);
TruthValue tensor(const LatticeStructure& structure, const TruthValue& a, const TruthValue& b);

/// Accepts `goedel`, `product`, `boolean`. Throws std::invalid_argument.
StructureKind parse_structure_kind(std::string_view name);

} // namespace fre2fa

#endif

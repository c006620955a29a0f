#ifndef FRE2FA_SEMIRING_HPP
#define FRE2FA_SEMIRING_HPP

#include <cstddef>
#include <vector>

#include "fre2fa/lattice.hpp"

namespace fre2fa {

/// Selects between the serial reference kernels and their OpenMP
/// counterparts. Both produce identical results.
enum class Execution { Serial, Parallel };

using TruthVector = std::vector<TruthValue>;

/// Dense row-major matrix of truth values.
class TruthMatrix {
public:
    TruthMatrix() = default;
    TruthMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static TruthMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    TruthValue& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const TruthValue& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend bool operator==(const TruthMatrix&, const TruthMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<TruthValue> data_;
};

// Products over the (join, tensor) semiring of a structure.

TruthMatrix multiply(const LatticeStructure& s, const TruthMatrix& a, const TruthMatrix& b,
                     Execution exec = Execution::Serial);
TruthMatrix join(const TruthMatrix& a, const TruthMatrix& b);
TruthVector multiply(const LatticeStructure& s, const TruthVector& v, const TruthMatrix& m);
TruthVector multiply(const LatticeStructure& s, const TruthMatrix& m, const TruthVector& v);
TruthValue dot(const LatticeStructure& s, const TruthVector& a, const TruthVector& b);

/// Reflexive-transitive closure I v A v A^2 v ... by repeated squaring.
/// Converges because the carrier is integral (no cycle raises a value).
TruthMatrix star_closure(const LatticeStructure& s, const TruthMatrix& a,
                         Execution exec = Execution::Serial);

} // namespace fre2fa

#endif

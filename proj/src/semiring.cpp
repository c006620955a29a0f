#include "fre2fa/semiring.hpp"

#include <cstdint>
#include <stdexcept>

namespace fre2fa {

namespace {

// Below this many inner-product terms the thread team costs more than it saves.
constexpr std::size_t parallel_threshold = 4096;

TruthValue row_col(const LatticeStructure& s, const TruthMatrix& a, const TruthMatrix& b, std::size_t i,
                   std::size_t j)
{
    TruthValue acc;
    for (std::size_t m = 0; m < a.cols(); ++m) {
        if (a(i, m).is_zero() || b(m, j).is_zero())
            continue;
        TruthValue t = s.tensor(a(i, m), b(m, j));
        if (acc < t)
            acc = std::move(t);
    }
    return acc;
}

TruthMatrix multiply_serial(const LatticeStructure& s, const TruthMatrix& a, const TruthMatrix& b)
{
    TruthMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            c(i, j) = row_col(s, a, b, i, j);
    return c;
}

TruthMatrix multiply_parallel(const LatticeStructure& s, const TruthMatrix& a, const TruthMatrix& b)
{
    TruthMatrix c(a.rows(), b.cols());
    const auto rows = static_cast<std::int64_t>(a.rows());
    const bool worth_it = a.rows() * a.cols() * b.cols() >= parallel_threshold;
#pragma omp parallel for schedule(static) if (worth_it)
    for (std::int64_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            c(static_cast<std::size_t>(i), j) = row_col(s, a, b, static_cast<std::size_t>(i), j);
    return c;
}

} // namespace

TruthMatrix TruthMatrix::identity(std::size_t n)
{
    TruthMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = TruthValue::one();
    return m;
}

TruthMatrix multiply(const LatticeStructure& s, const TruthMatrix& a, const TruthMatrix& b, Execution exec)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix dimensions do not match");
    return exec == Execution::Parallel ? multiply_parallel(s, a, b) : multiply_serial(s, a, b);
}

TruthMatrix join(const TruthMatrix& a, const TruthMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix dimensions do not match");
    TruthMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            c(i, j) = fre2fa::join(a(i, j), b(i, j));
    return c;
}

TruthVector multiply(const LatticeStructure& s, const TruthVector& v, const TruthMatrix& m)
{
    if (v.size() != m.rows())
        throw std::invalid_argument("vector/matrix dimensions do not match");
    TruthVector out(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (v[i].is_zero())
            continue;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).is_zero())
                continue;
            TruthValue t = s.tensor(v[i], m(i, j));
            if (out[j] < t)
                out[j] = std::move(t);
        }
    }
    return out;
}

TruthVector multiply(const LatticeStructure& s, const TruthMatrix& m, const TruthVector& v)
{
    if (v.size() != m.cols())
        throw std::invalid_argument("matrix/vector dimensions do not match");
    TruthVector out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).is_zero() || v[j].is_zero())
                continue;
            TruthValue t = s.tensor(m(i, j), v[j]);
            if (out[i] < t)
                out[i] = std::move(t);
        }
    return out;
}

TruthValue dot(const LatticeStructure& s, const TruthVector& a, const TruthVector& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("vector dimensions do not match");
    TruthValue acc;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero() || b[i].is_zero())
            continue;
        TruthValue t = s.tensor(a[i], b[i]);
        if (acc < t)
            acc = std::move(t);
    }
    return acc;
}

TruthMatrix star_closure(const LatticeStructure& s, const TruthMatrix& a, Execution exec)
{
    if (a.rows() != a.cols())
        throw std::invalid_argument("closure of a non-square matrix");
    TruthMatrix c = join(TruthMatrix::identity(a.rows()), a);
    // c >= I, so c (x) c >= c and squaring doubles the covered path length.
    for (;;) {
        TruthMatrix next = multiply(s, c, c, exec);
        if (next == c)
            return c;
        c = std::move(next);
    }
}

} // namespace fre2fa

#ifndef PERMTT_PRIME_FIELD_HPP
#define PERMTT_PRIME_FIELD_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace permtt
{

/// Raised when two operands have incompatible shapes.
struct DimensionError : std::invalid_argument
{
    using std::invalid_argument::invalid_argument;
};

/// Raised when operands live over different prime fields.
struct FieldMismatch : std::invalid_argument
{
    using std::invalid_argument::invalid_argument;
};

/// The prime field GF(p), 2 <= p < 2^16.
///
/// Residues are kept in [0, p). The bound on p keeps every product of two
/// residues inside 32 bits.
class FieldSpec
{
public:
    explicit FieldSpec(std::uint32_t p);

    std::uint32_t p() const noexcept { return p_; }

    std::uint32_t reduce(std::int64_t v) const noexcept
    {
        auto r = v % static_cast<std::int64_t>(p_);
        return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
    }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept
    {
        auto s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept
    {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept
    {
        return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p_);
    }
    std::uint32_t inv(std::uint32_t a) const;

    bool operator==(const FieldSpec&) const = default;

private:
    std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

using FpVector = std::vector<std::uint32_t>;

/// Dense row-major matrix over GF(p).
class FpMatrix
{
public:
    FpMatrix(FieldSpec field, std::size_t rows, std::size_t cols);
    FpMatrix(FieldSpec field, std::size_t rows, std::size_t cols, std::vector<std::uint32_t> entries);

    static FpMatrix identity(FieldSpec field, std::size_t n);
    /// Builds a matrix from signed integer rows; entries are reduced mod p.
    static FpMatrix from_rows(FieldSpec field, const std::vector<std::vector<std::int64_t>>& rows);
    static FpMatrix from_columns(FieldSpec field, std::size_t rows, const std::vector<FpVector>& columns);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const FieldSpec& field() const noexcept { return field_; }
    const std::vector<std::uint32_t>& entries() const noexcept { return data_; }

    std::uint32_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::uint32_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    FpVector column(std::size_t c) const;
    bool is_zero() const noexcept;

    FpMatrix transpose() const;
    /// Rows and columns picked by index lists, in the given order.
    FpMatrix submatrix(const std::vector<std::size_t>& row_idx, const std::vector<std::size_t>& col_idx) const;
    /// Copies `block` into this matrix with its top-left corner at (r0, c0).
    void place(const FpMatrix& block, std::size_t r0, std::size_t c0);

    bool operator==(const FpMatrix&) const = default;

private:
    FieldSpec field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint32_t> data_;
};

FpMatrix mat_mul(const FpMatrix& a, const FpMatrix& b);
FpMatrix operator*(const FpMatrix& a, const FpMatrix& b);
FpMatrix operator+(const FpMatrix& a, const FpMatrix& b);
FpMatrix operator-(const FpMatrix& a, const FpMatrix& b);
FpMatrix scale(const FpMatrix& a, std::uint32_t s);
FpMatrix kronecker(const FpMatrix& a, const FpMatrix& b);
FpVector apply(const FpMatrix& a, const FpVector& v);

/// Reduces `a` in place to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> row_reduce(FpMatrix& a);

std::size_t rank(const FpMatrix& a);

/// Basis of the right null space, one vector per free column.
std::vector<FpVector> kernel_basis(const FpMatrix& a);

struct AffineSolution
{
    FpMatrix particular;             // one solution X with aX = b
    std::vector<FpVector> kernel;    // basis of {v : av = 0}
};

/// Solves aX = b column by column. Empty when some column is inconsistent.
std::optional<AffineSolution> solve_space(const FpMatrix& a, const FpMatrix& b);

std::string to_string(const FpMatrix& a);

} // namespace permtt

#endif

#include "permtt/prime_field.hpp"

#include <sstream>
#include <utility>

namespace permtt
{

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

FieldSpec::FieldSpec(std::uint32_t p) : p_(p)
{
    if (p >= (1u << 16))
        throw std::invalid_argument("field characteristic must be below 65536, got " + std::to_string(p));
    if (!is_prime(p))
        throw std::invalid_argument("field characteristic must be prime, got " + std::to_string(p));
}

std::uint32_t FieldSpec::inv(std::uint32_t a) const
{
    if (a % p_ == 0)
        throw std::domain_error("inverse of zero in GF(" + std::to_string(p_) + ")");
    // Fermat: a^(p-2)
    std::uint32_t result = 1, base = a % p_;
    for (std::uint32_t e = p_ - 2; e > 0; e >>= 1)
    {
        if (e & 1u)
            result = mul(result, base);
        base = mul(base, base);
    }
    return result;
}

FpMatrix::FpMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0)
{
}

FpMatrix::FpMatrix(FieldSpec field, std::size_t rows, std::size_t cols, std::vector<std::uint32_t> entries)
    : field_(field), rows_(rows), cols_(cols), data_(std::move(entries))
{
    if (data_.size() != rows * cols)
        throw DimensionError("matrix entry count does not match its shape");
    for (auto v : data_)
        if (v >= field_.p())
            throw std::invalid_argument("matrix entry out of range for GF(" + std::to_string(field_.p()) + ")");
}

FpMatrix FpMatrix::identity(FieldSpec field, std::size_t n)
{
    FpMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

FpMatrix FpMatrix::from_rows(FieldSpec field, const std::vector<std::vector<std::int64_t>>& rows)
{
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    FpMatrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
    {
        if (rows[r].size() != cols)
            throw DimensionError("ragged row list");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = field.reduce(rows[r][c]);
    }
    return m;
}

FpMatrix FpMatrix::from_columns(FieldSpec field, std::size_t rows, const std::vector<FpVector>& columns)
{
    FpMatrix m(field, rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c)
    {
        if (columns[c].size() != rows)
            throw DimensionError("column length does not match row count");
        for (std::size_t r = 0; r < rows; ++r)
            m(r, c) = columns[c][r];
    }
    return m;
}

FpVector FpMatrix::column(std::size_t c) const
{
    FpVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

bool FpMatrix::is_zero() const noexcept
{
    for (auto v : data_)
        if (v != 0)
            return false;
    return true;
}

FpMatrix FpMatrix::transpose() const
{
    FpMatrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

FpMatrix FpMatrix::submatrix(const std::vector<std::size_t>& row_idx, const std::vector<std::size_t>& col_idx) const
{
    FpMatrix s(field_, row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j)
            s(i, j) = (*this)(row_idx[i], col_idx[j]);
    return s;
}

void FpMatrix::place(const FpMatrix& block, std::size_t r0, std::size_t c0)
{
    if (r0 + block.rows() > rows_ || c0 + block.cols() > cols_)
        throw DimensionError("block does not fit");
    for (std::size_t r = 0; r < block.rows(); ++r)
        for (std::size_t c = 0; c < block.cols(); ++c)
            (*this)(r0 + r, c0 + c) = block(r, c);
}

namespace
{
void require_same_field(const FpMatrix& a, const FpMatrix& b)
{
    if (a.field() != b.field())
        throw FieldMismatch("matrices over GF(" + std::to_string(a.field().p()) + ") and GF(" +
                            std::to_string(b.field().p()) + ")");
}
} // namespace

FpMatrix mat_mul(const FpMatrix& a, const FpMatrix& b)
{
    require_same_field(a, b);
    if (a.cols() != b.rows())
        throw DimensionError("mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
                             std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    const auto p = a.field().p();
    std::vector<std::uint64_t> acc(b.cols());
    FpMatrix out(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
    {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t k = 0; k < a.cols(); ++k)
        {
            auto aik = a(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
            {
                acc[j] += static_cast<std::uint64_t>(aik) * b(k, j);
                // keep the accumulator far from overflow
                if (acc[j] >= (1ull << 62))
                    acc[j] %= p;
            }
        }
        for (std::size_t j = 0; j < b.cols(); ++j)
            out(i, j) = static_cast<std::uint32_t>(acc[j] % p);
    }
    return out;
}

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) { return mat_mul(a, b); }

FpMatrix operator+(const FpMatrix& a, const FpMatrix& b)
{
    require_same_field(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("matrix sum shape mismatch");
    FpMatrix out = a;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            out(r, c) = a.field().add(a(r, c), b(r, c));
    return out;
}

FpMatrix operator-(const FpMatrix& a, const FpMatrix& b)
{
    require_same_field(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("matrix difference shape mismatch");
    FpMatrix out = a;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            out(r, c) = a.field().sub(a(r, c), b(r, c));
    return out;
}

FpMatrix scale(const FpMatrix& a, std::uint32_t s)
{
    FpMatrix out = a;
    s %= a.field().p();
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            out(r, c) = a.field().mul(a(r, c), s);
    return out;
}

FpMatrix kronecker(const FpMatrix& a, const FpMatrix& b)
{
    require_same_field(a, b);
    FpMatrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
        {
            auto aij = a(i, j);
            if (aij == 0)
                continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a.field().mul(aij, b(k, l));
        }
    return out;
}

FpVector apply(const FpMatrix& a, const FpVector& v)
{
    if (v.size() != a.cols())
        throw DimensionError("apply: vector length does not match column count");
    FpVector out(a.rows(), 0);
    for (std::size_t r = 0; r < a.rows(); ++r)
    {
        std::uint64_t acc = 0;
        for (std::size_t c = 0; c < a.cols(); ++c)
            acc = (acc + static_cast<std::uint64_t>(a(r, c)) * v[c]) % a.field().p();
        out[r] = static_cast<std::uint32_t>(acc);
    }
    return out;
}

std::vector<std::size_t> row_reduce(FpMatrix& a)
{
    const auto& f = a.field();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col)
    {
        std::size_t pivot = row;
        while (pivot < a.rows() && a(pivot, col) == 0)
            ++pivot;
        if (pivot == a.rows())
            continue;
        if (pivot != row)
            for (std::size_t c = 0; c < a.cols(); ++c)
                std::swap(a(pivot, c), a(row, c));
        auto inv = f.inv(a(row, col));
        for (std::size_t c = col; c < a.cols(); ++c)
            a(row, c) = f.mul(a(row, c), inv);
        for (std::size_t r = 0; r < a.rows(); ++r)
        {
            if (r == row || a(r, col) == 0)
                continue;
            auto factor = a(r, col);
            for (std::size_t c = col; c < a.cols(); ++c)
                a(r, c) = f.sub(a(r, c), f.mul(factor, a(row, c)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(const FpMatrix& a)
{
    if (a.rows() == 0 || a.cols() == 0)
        return 0;
    // eliminate along the shorter side
    FpMatrix work = a.rows() <= a.cols() ? a : a.transpose();
    return row_reduce(work).size();
}

std::vector<FpVector> kernel_basis(const FpMatrix& a)
{
    FpMatrix work = a;
    auto pivots = row_reduce(work);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : pivots)
        is_pivot[c] = true;

    std::vector<FpVector> basis;
    for (std::size_t free = 0; free < a.cols(); ++free)
    {
        if (is_pivot[free])
            continue;
        FpVector v(a.cols(), 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = a.field().neg(work(i, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<AffineSolution> solve_space(const FpMatrix& a, const FpMatrix& b)
{
    if (a.field() != b.field())
        throw FieldMismatch("solve_space: field mismatch");
    if (a.rows() != b.rows())
        throw DimensionError("solve_space: a has " + std::to_string(a.rows()) + " rows, b has " +
                             std::to_string(b.rows()));

    // Reduce [a | b] and read off solutions from the pivot structure.
    FpMatrix aug(a.field(), a.rows(), a.cols() + b.cols());
    aug.place(a, 0, 0);
    aug.place(b, 0, a.cols());
    auto pivots = row_reduce(aug);

    FpMatrix particular(a.field(), a.cols(), b.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
    {
        if (pivots[i] >= a.cols())
            return std::nullopt; // pivot in the b block: inconsistent
        for (std::size_t j = 0; j < b.cols(); ++j)
            particular(pivots[i], j) = aug(i, a.cols() + j);
    }
    return AffineSolution{std::move(particular), kernel_basis(a)};
}

std::string to_string(const FpMatrix& a)
{
    std::ostringstream out;
    out << "[";
    for (std::size_t r = 0; r < a.rows(); ++r)
    {
        out << (r ? ",[" : "[");
        for (std::size_t c = 0; c < a.cols(); ++c)
            out << (c ? "," : "") << a(r, c);
        out << "]";
    }
    out << "]";
    return out.str();
}

} // namespace permtt

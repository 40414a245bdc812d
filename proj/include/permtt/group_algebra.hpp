#ifndef PERMTT_GROUP_ALGEBRA_HPP
#define PERMTT_GROUP_ALGEBRA_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "permtt/perm_module.hpp"

namespace permtt
{

/// Raised when "multiply by q, then project" does not descend to the quotient,
/// i.e. q * I_{K1} is not contained in I_{K2}.
struct IllDefinedEntry : std::invalid_argument
{
    using std::invalid_argument::invalid_argument;
};

struct PolynomialSyntaxError : std::invalid_argument
{
    PolynomialSyntaxError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)), position(position)
    {
    }
    std::size_t position;
};

/// A polynomial in the augmentation generators x_i = g_i - 1 of a group with
/// chosen generators g_1..g_r. Coefficients are plain integers until the
/// polynomial is evaluated over a field.
class AugmentationPolynomial
{
public:
    using Monomial = std::vector<unsigned>; // exponent of each x_i

    AugmentationPolynomial() = default;
    static AugmentationPolynomial constant(std::int64_t c);
    /// x_{index+1} raised to `power`.
    static AugmentationPolynomial variable(std::size_t index, unsigned power = 1);

    /// Variables: t and x name x_1, y names x_2, z names x_3, and x<i> names
    /// x_i explicitly. Example: "x+y", "t^2", "-1", "2xy".
    static AugmentationPolynomial parse(std::string_view text);

    const std::map<Monomial, std::int64_t>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t variables_used() const;

    AugmentationPolynomial operator+(const AugmentationPolynomial& o) const;
    AugmentationPolynomial operator*(const AugmentationPolynomial& o) const;

    /// Element of kG as coefficients indexed by group element.
    FpVector evaluate(const FiniteGroup& g, FieldSpec field) const;

    std::string to_string() const;

private:
    void add_term(Monomial m, std::int64_t c);
    std::map<Monomial, std::int64_t> terms_;
};

/// k(G/K1) -> k(G/K2), gK1 -> (g q) K2. G must be abelian; its defining
/// generators name the variables of q.
ModuleMap mult_entry_map(const AugmentationPolynomial& q, const Subgroup& k1, const Subgroup& k2, FieldSpec field);

/// Summands are coset modules k(G/K); entries[row][col] maps source summand
/// col to target summand row. Throws IllDefinedEntry naming the entry.
ModuleMap assemble_block_map(const std::vector<Subgroup>& source, const std::vector<Subgroup>& target,
                             const std::vector<std::vector<AugmentationPolynomial>>& entries, FieldSpec field);

PermModule sum_of_cosets(const FiniteGroup& g, const std::vector<Subgroup>& summands, FieldSpec field);

} // namespace permtt

#endif

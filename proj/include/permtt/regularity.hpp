#ifndef PERMTT_REGULARITY_HPP
#define PERMTT_REGULARITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "permtt/finite_group.hpp"

namespace permtt
{

enum class Verdict
{
    Regular,
    NotRegular
};

enum class RegularityReason
{
    NonModular,
    P2SylowCyclic,
    OddPrimeWitnessCp,
    KleinFourWitness,
    Q8Witness
};

std::string to_string(Verdict v);
std::string to_string(RegularityReason r);

struct RegularityReport
{
    std::string group;
    std::size_t order;
    unsigned p;
    bool modular;
    Verdict verdict;
    RegularityReason reason;
    std::optional<Subgroup> witness; // present exactly when NotRegular
};

/// Regular iff p does not divide |G|, or p = 2 with cyclic Sylow 2-subgroups.
/// Otherwise the witness is a subgroup C_p (p odd), C2 x C2 or Q8.
RegularityReport classify(const FiniteGroup& g, unsigned p);

/// Checks that the witness is a subgroup of the claimed type.
bool verify_witness(const RegularityReport& r);

struct PointStatus
{
    std::string point;                  // M(1), M(C_p^i) or bottom(i)
    bool closed;
    std::optional<std::size_t> subgroup_order;
    Verdict verdict;
    std::string note;
};

/// Closed points M(H_0) .. M(H_n) of C_{p^n}, then the n bottom points.
std::vector<PointStatus> cyclic_point_report(unsigned n, unsigned p);

struct CensusRow
{
    std::string descriptor;
    unsigned p;
    std::optional<RegularityReport> report;
    std::string error; // set when the descriptor could not be built
};

/// Rows ordered by group, then prime, as given.
std::vector<CensusRow> census(const std::vector<std::string>& groups, const std::vector<unsigned>& primes,
                              std::size_t cap = kDefaultOrderCap);

} // namespace permtt

#endif

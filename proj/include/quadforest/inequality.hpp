#ifndef QUADFOREST_INEQUALITY_HPP
#define QUADFOREST_INEQUALITY_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace qf {

/// ceil((4n+3)/7); n >= 1.
int bound(int n);

/// ceil(x/7) for any integer x.
int ceil_div7(long long x);

/// ceil((4t+3)/7) as used all over the counting arguments.
int ceil4(long long t);

struct IneqCounterexample {
    std::vector<long long> params;  // part-specific tuple, n last
    std::string note;
};

struct ExceptionReport {
    std::vector<int> residues;  // the excepted pattern, mod 7
    bool realized = false;      // a concrete failing tuple exists in range
    std::vector<long long> witness;
};

struct IneqVerdict {
    bool pass = false;
    std::optional<IneqCounterexample> counterexample;
    std::vector<ExceptionReport> exceptions;
    long long tuples_checked = 0;
};

/// max{ceil4(a1)+ceil4(a2)+2, ceil((4a1-1)/7)+ceil((4a2-1)/7)+3} >= bound(n)
/// for a1+a2 = n+3-k, k <= 8, over all 1 <= a1, a2 <= range.
IneqVerdict check_ineq1(int range);

/// One of the eight ceiling inequalities, checked exhaustively over the
/// enumeration domain (see implementation notes on the per-part caps), with
/// every listed exception pattern either realized by a failing tuple or
/// reported vacuous.
IneqVerdict check_ineq2(int part, int range);

struct ResidueRow {
    int a_mod7;
    int four_a_plus3_mod7;
    int ceil_pad;  // 7*ceil4(a) - (4a+3)
};

/// The mod-7 behavior of ceil((4a+3)/7), one row per residue class.
std::array<ResidueRow, 7> residue_table();

}  // namespace qf

#endif

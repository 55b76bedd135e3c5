#include "quadforest/inequality.hpp"

#include <algorithm>
#include <stdexcept>

namespace qf {

namespace {

long long floor_div(long long a, long long b) {
    long long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

int mod7(long long x) { return static_cast<int>(((x % 7) + 7) % 7); }

}  // namespace

int ceil_div7(long long x) { return static_cast<int>(floor_div(x + 6, 7)); }

int ceil4(long long t) { return ceil_div7(4 * t + 3); }

int bound(int n) {
    if (n < 1) throw std::invalid_argument("bound: n must be >= 1");
    return ceil4(n);
}

IneqVerdict check_ineq1(int range) {
    if (range < 20) throw std::invalid_argument("check_ineq1: range must be >= 20");
    IneqVerdict v;
    v.pass = true;
    for (int a1 = 1; a1 <= range; ++a1)
        for (int a2 = a1; a2 <= range; ++a2)
            for (int k = 4 - a1 - a2; k <= 8; ++k) {
                long long n = static_cast<long long>(a1) + a2 + k - 3;
                if (n < 1) continue;
                ++v.tuples_checked;
                int lhs = std::max(ceil4(a1) + ceil4(a2) + 2,
                                   ceil_div7(4LL * a1 - 1) + ceil_div7(4LL * a2 - 1) + 3);
                if (lhs < ceil4(n)) {
                    v.pass = false;
                    v.counterexample = IneqCounterexample{
                        {a1, a2, k, n}, "max-inequality fails (a1, a2, k, n)"};
                    return v;
                }
            }
    return v;
}

namespace {

constexpr int kCRange = 10;

struct PartState {
    IneqVerdict verdict;
    std::vector<std::vector<int>> patterns;  // excepted residue tuples

    void init_patterns(std::vector<std::vector<int>> p) {
        patterns = std::move(p);
        for (const auto& pat : patterns)
            verdict.exceptions.push_back({pat, false, {}});
        verdict.pass = true;
    }

    int matched_pattern(const std::vector<int>& residues) const {
        for (size_t i = 0; i < patterns.size(); ++i)
            if (patterns[i] == residues) return static_cast<int>(i);
        return -1;
    }

    // ok = conclusion held; returns false when the whole check must stop.
    bool record(const std::vector<int>& residues, bool ok,
                const std::vector<long long>& tuple, const char* label) {
        ++verdict.tuples_checked;
        int pat = matched_pattern(residues);
        if (ok) return true;
        if (pat < 0) {
            verdict.pass = false;
            verdict.counterexample = IneqCounterexample{tuple, label};
            return false;
        }
        if (!verdict.exceptions[pat].realized) {
            verdict.exceptions[pat].realized = true;
            verdict.exceptions[pat].witness = tuple;
        }
        return true;
    }
};

// parts 2..5 and 8 share the (a, a_1[, a_2], c) shape
bool conclusion_pair(int a, int a1, int c, long long n, bool with_indicator) {
    int target = ceil4(n);
    if (!with_indicator) return ceil4(a) + ceil4(a1) + c >= target;
    for (int A1 = 0; A1 <= 1; ++A1)
        if (ceil4(a - A1) + ceil4(a1 - A1) + c - (1 - A1) >= target) return true;
    return false;
}

bool conclusion_triple(int a, int a1, int a2, int c, long long n) {
    int target = ceil4(n);
    for (int A1 = 0; A1 <= 1; ++A1)
        for (int A2 = 0; A2 <= 1; ++A2)
            if (ceil4(a - A1 - A2) + ceil4(a1 - A1) + ceil4(a2 - A2) + c - (1 - A1) - (1 - A2) >=
                target)
                return true;
    return false;
}

IneqVerdict part_pair(int range, int hyp_shift, bool with_indicator, long long lhs_offset,
                      std::vector<std::vector<int>> patterns, const char* label) {
    // hypothesis: (4a+3) + (4a1+3) + 7c + lhs_offset >= 4n + hyp_shift
    PartState st;
    st.init_patterns(std::move(patterns));
    for (int a = 1; a <= range; ++a)
        for (int a1 = 1; a1 <= range; ++a1)
            for (int c = 1; c <= kCRange; ++c) {
                long long X = (4LL * a + 3) + (4LL * a1 + 3) + 7LL * c + lhs_offset;
                long long n = floor_div(X - hyp_shift, 4);
                if (n < 1) continue;
                bool ok = conclusion_pair(a, a1, c, n, with_indicator);
                if (!st.record({mod7(4LL * a + 3), mod7(4LL * a1 + 3)}, ok,
                               {a, a1, c, n}, label))
                    return st.verdict;
            }
    return st.verdict;
}

IneqVerdict part_triple(int range, int hyp_shift, std::vector<std::vector<int>> patterns,
                        const char* label) {
    // hypothesis: (4a+3) + sum(4ai+3) + 7c - 14 >= 4n + hyp_shift
    PartState st;
    st.init_patterns(std::move(patterns));
    for (int a = 1; a <= range; ++a)
        for (int a1 = 1; a1 <= range; ++a1)
            for (int a2 = 1; a2 <= range; ++a2)
                for (int c = 1; c <= kCRange; ++c) {
                    long long X =
                        (4LL * a + 3) + (4LL * a1 + 3) + (4LL * a2 + 3) + 7LL * c - 14;
                    long long n = floor_div(X - hyp_shift, 4);
                    if (n < 1) continue;
                    bool ok = conclusion_triple(a, a1, a2, c, n);
                    if (!st.record(
                            {mod7(4LL * a + 3), mod7(4LL * a1 + 3), mod7(4LL * a2 + 3)}, ok,
                            {a, a1, a2, c, n}, label))
                        return st.verdict;
                }
    return st.verdict;
}

// sorted k-multisets over [1, cap]
void multisets(int k, int cap, std::vector<int>& cur, const auto& visit) {
    if (static_cast<int>(cur.size()) == k) {
        visit(cur);
        return;
    }
    int lo = cur.empty() ? 1 : cur.back();
    for (int x = lo; x <= cap; ++x) {
        cur.push_back(x);
        multisets(k, cap, cur, visit);
        cur.pop_back();
    }
}

IneqVerdict part_sum(int range, int hyp_shift, bool exception_allows_six, const char* label) {
    // hypothesis: sum(4ai+3) + 7c >= 4n + hyp_shift; k ranges over 1..4
    PartState st;
    std::vector<std::vector<int>> patterns;
    for (int k = 1; k <= 4; ++k) {
        patterns.push_back(std::vector<int>(k, 0));
        if (exception_allows_six) {
            std::vector<int> p(k, 0);
            p.back() = 6;  // sorted multiset: one residue in {6}, rest 0
            patterns.push_back(p);
        }
    }
    st.init_patterns(std::move(patterns));
    bool stop = false;
    for (int k = 1; k <= 4 && !stop; ++k) {
        std::vector<int> cur;
        multisets(k, range, cur, [&](const std::vector<int>& as) {
            if (stop) return;
            long long S = 0;
            for (int ai : as) S += 4LL * ai + 3;
            for (int c = 1; c <= kCRange; ++c) {
                long long n = floor_div(S + 7LL * c - hyp_shift, 4);
                if (n < 1) continue;
                int lhs = c;
                for (int ai : as) lhs += ceil4(ai);
                std::vector<int> residues;
                for (int ai : as) residues.push_back(mod7(4LL * ai + 3));
                std::sort(residues.begin(), residues.end());
                std::vector<long long> tuple(as.begin(), as.end());
                tuple.push_back(c);
                tuple.push_back(n);
                if (!st.record(residues, lhs >= ceil4(n), tuple, label)) {
                    stop = true;
                    return;
                }
            }
        });
    }
    return st.verdict;
}

IneqVerdict part_one(int range) {
    // hypothesis: (4a+3) + sum_i(4ai+3) + sum_j(4bj+3) + 7c - 7k >= 4n+3-3k.
    //
    // Verdicts are invariant under adding 7 to any single parameter (both
    // sides shift by exactly 4), so capped enumeration at two to four full
    // residue periods is exhaustive in behavior; the caps keep the k+l >= 3
    // arities tractable.
    PartState st;
    st.init_patterns({});
    bool stop = false;
    for (int k = 1; k <= 4 && !stop; ++k) {
        for (int l = 0; l <= 2 && !stop; ++l) {
            int cap = (k + l <= 2) ? range : (k + l == 3 ? std::min(range, 28)
                                                         : std::min(range, 14));
            std::vector<int> as_cur;
            multisets(k, cap, as_cur, [&](const std::vector<int>& as) {
                if (stop) return;
                std::vector<int> bs_cur;
                multisets(l, cap, bs_cur, [&](const std::vector<int>& bs) {
                    if (stop) return;
                    long long S = 0;
                    for (int ai : as) S += 4LL * ai + 3;
                    long long B = 0;
                    int bceil = 0;
                    for (int bj : bs) {
                        B += 4LL * bj + 3;
                        bceil += ceil4(bj);
                    }
                    for (int a = 1; a <= cap && !stop; ++a)
                        for (int c = 1; c <= kCRange; ++c) {
                            long long X = (4LL * a + 3) + S + B + 7LL * c - 7LL * k;
                            long long n = floor_div(X - 3 + 3LL * k, 4);
                            if (n < 1) continue;
                            int target = ceil4(n);
                            bool ok = false;
                            for (int mask = 0; mask < (1 << k) && !ok; ++mask) {
                                int sumA = __builtin_popcount(static_cast<unsigned>(mask));
                                int lhs = ceil4(a - sumA) + bceil + c - (k - sumA);
                                for (int i = 0; i < k; ++i)
                                    lhs += ceil4(as[i] - ((mask >> i) & 1));
                                ok = lhs >= target;
                            }
                            std::vector<long long> tuple{a};
                            tuple.insert(tuple.end(), as.begin(), as.end());
                            tuple.insert(tuple.end(), bs.begin(), bs.end());
                            tuple.push_back(c);
                            tuple.push_back(n);
                            if (!st.record({}, ok, tuple, "part 1 (a, a_i.., b_j.., c, n)")) {
                                stop = true;
                                return;
                            }
                        }
                });
            });
        }
    }
    return st.verdict;
}

}  // namespace

IneqVerdict check_ineq2(int part, int range) {
    if (part < 1 || part > 8) throw std::invalid_argument("check_ineq2: part must be 1..8");
    if (range < 14) throw std::invalid_argument("check_ineq2: range must be >= 14");
    switch (part) {
        case 1:
            return part_one(range);
        case 2:
            return part_pair(range, -1, true, -7, {{0, 4}, {4, 0}}, "part 2 (a, a1, c, n)");
        case 3:
            return part_pair(range, -1, false, 0,
                             {{0, 0}, {0, 6}, {0, 5}, {0, 4}, {4, 0}, {6, 5}, {5, 6}, {5, 0},
                              {6, 6}, {6, 0}},
                             "part 3 (a, a1, c, n)");
        case 4:
            return part_triple(range, -4, {{1, 0, 0}, {4, 0, 4}, {4, 4, 0}, {0, 4, 4}},
                               "part 4 (a, a1, a2, c, n)");
        case 5:
            return part_triple(range, -5,
                               {{0, 0, 0}, {1, 0, 0}, {4, 0, 3}, {4, 3, 0}, {3, 0, 4},
                                {4, 0, 4}, {3, 4, 0}, {4, 4, 0}, {1, 6, 0}, {1, 0, 6},
                                {0, 3, 4}, {0, 4, 3}, {0, 4, 4}, {6, 4, 4}, {4, 4, 6},
                                {4, 6, 4}},
                               "part 5 (a, a1, a2, c, n)");
        case 6:
            return part_sum(range, 2, false, "part 6 (a_1..a_k, c, n)");
        case 7:
            return part_sum(range, 1, true, "part 7 (a_1..a_k, c, n)");
        case 8:
            return part_pair(range, 0, false, 0,
                             {{0, 0}, {0, 6}, {0, 5}, {5, 0}, {6, 6}, {6, 0}},
                             "part 8 (a, a1, c, n)");
    }
    return {};
}

std::array<ResidueRow, 7> residue_table() {
    std::array<ResidueRow, 7> t{};
    for (int r = 0; r < 7; ++r) {
        int fr = mod7(4 * r + 3);
        t[r] = {r, fr, (7 - fr) % 7};
    }
    return t;
}

}  // namespace qf

#ifndef SOLTES_BOUNDS_HPP
#define SOLTES_BOUNDS_HPP

#include <cstdint>
#include <string>

#include "soltes/graph.hpp"

namespace soltes {

// Exact 128-bit arithmetic; every product and sum is overflow-checked and
// raises Errc::overflow past the capacity. No floating point in this module.
using Int128 = __int128;

Int128 checked_add_128(Int128 a, Int128 b);
Int128 checked_mul_128(Int128 a, Int128 b);
Int128 checked_pow_128(Int128 base, int exp);
std::string int128_to_string(Int128 v);

// Normalized exact rational (den > 0, gcd(|num|, den) = 1).
struct Rational {
    Int128 num = 0;
    Int128 den = 1;

    static Rational make(Int128 num, Int128 den);
    bool operator==(const Rational&) const = default;
    std::string str() const;
};

// num/den comparisons against integer expressions, exact via cross-multiplication.
bool rational_less(const Rational& a, const Rational& b);

struct MooreParams {
    int d = 0;
    int g = 0;
    int k = 0;       // g / 2
    Int128 moore = 0;  // 2 * sum_{i<k} (d-1)^i
};

// Minimum order of a d-regular graph of even girth g.
Int128 moore_bound(int d, int g);
MooreParams moore_params(int d, int g);

// |N^j| = (d-1)^ceil(j/2).
Int128 layer_count(int d, std::int64_t j);

// Pairs whose shortest path crosses the deleted arc-graph vertex, counted by
// layer convolution: even distance 2i+2 and odd distance 2i+1.
struct PairCounts {
    Int128 even_count = 0;
    Int128 odd_count = 0;
};

PairCounts pair_counts(int d, std::int64_t i);
// Degree-7 closed forms: (2i+1)*6^(i+1) and 7i*6^i.
PairCounts pair_counts_closed_7(std::int64_t i);

// Lower bound on the total detour in the arc-graph of a 7-regular graph of
// girth 2k, via both the defining double sum and the closed form
// 2(6^k(365k-606)+840k+606)/125.
struct DiffBound7 {
    Int128 double_sum = 0;
    Int128 closed_form = 0;
    bool routes_agree = false;

    Int128 value() const { return double_sum; }
};

DiffBound7 diff_lower_bound_7(int k);

// Transmission upper bound (6^k(700.7k-365)+365)/125 with 700.7 held exactly
// as 7007/10.
Rational sigma_upper_bound_7(int k);

// True iff diff_lower_bound_7(k) - sigma_upper_bound_7(k) > coeff * k^2.
bool gap_check(int k, std::int64_t threshold_coeff = 1000);

// 23 + sum_{j=12}^{122} j = 7460, and the compensator attached to a synthetic
// host realizes exactly the distances 12..122 plus one vertex at 23.
struct Decomposition7460 {
    Int128 path_sum = 0;  // sum_{j=12}^{122} j
    Int128 total = 0;     // 23 + path_sum
    int added_vertex_count = 0;
    bool distances_ok = false;
};

Decomposition7460 decomposition_7460();

}  // namespace soltes

#endif  // SOLTES_BOUNDS_HPP

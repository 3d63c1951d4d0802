#include "soltes/bounds.hpp"

#include <algorithm>
#include <map>

#include "soltes/metrics.hpp"
#include "soltes/transforms.hpp"

namespace soltes {

Int128 checked_add_128(Int128 a, Int128 b) {
    Int128 out;
    if (__builtin_add_overflow(a, b, &out)) fail(Errc::overflow, "128-bit addition overflow");
    return out;
}

Int128 checked_mul_128(Int128 a, Int128 b) {
    Int128 out;
    if (__builtin_mul_overflow(a, b, &out)) fail(Errc::overflow, "128-bit multiplication overflow");
    return out;
}

Int128 checked_pow_128(Int128 base, int exp) {
    Int128 out = 1;
    for (int i = 0; i < exp; ++i) out = checked_mul_128(out, base);
    return out;
}

std::string int128_to_string(Int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    std::string digits;
    while (v != 0) {
        int d = static_cast<int>(v % 10);
        digits.push_back(static_cast<char>('0' + (d < 0 ? -d : d)));
        v /= 10;
    }
    if (neg) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

namespace {

Int128 gcd128(Int128 a, Int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

Rational Rational::make(Int128 num, Int128 den) {
    if (den == 0) fail(Errc::bad_parameter, "zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    Int128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational{num, den};
}

std::string Rational::str() const { return int128_to_string(num) + "/" + int128_to_string(den); }

bool rational_less(const Rational& a, const Rational& b) {
    return checked_mul_128(a.num, b.den) < checked_mul_128(b.num, a.den);
}

Int128 moore_bound(int d, int g) {
    if (d < 3) fail(Errc::bad_parameter, "degree must be at least 3");
    if (g < 4 || g % 2 != 0) fail(Errc::bad_parameter, "girth must be even and at least 4");
    Int128 sum = 0;
    for (int i = 0; i < g / 2; ++i) sum = checked_add_128(sum, checked_pow_128(d - 1, i));
    return checked_mul_128(2, sum);
}

MooreParams moore_params(int d, int g) {
    return MooreParams{d, g, g / 2, moore_bound(d, g)};
}

Int128 layer_count(int d, std::int64_t j) {
    if (d < 3) fail(Errc::bad_parameter, "degree must be at least 3");
    if (j < 0) fail(Errc::bad_parameter, "layer index must be non-negative");
    return checked_pow_128(d - 1, static_cast<int>((j + 1) / 2));
}

PairCounts pair_counts(int d, std::int64_t i) {
    PairCounts out;
    for (std::int64_t j = 0; j <= 2 * i; ++j)
        out.even_count =
            checked_add_128(out.even_count, checked_mul_128(layer_count(d, j), layer_count(d, 2 * i + 1 - j)));
    for (std::int64_t j = 0; j <= 2 * i - 1; ++j)
        out.odd_count =
            checked_add_128(out.odd_count, checked_mul_128(layer_count(d, j), layer_count(d, 2 * i - j)));
    return out;
}

PairCounts pair_counts_closed_7(std::int64_t i) {
    PairCounts out;
    out.even_count = checked_mul_128(2 * i + 1, checked_pow_128(6, static_cast<int>(i) + 1));
    out.odd_count = checked_mul_128(7 * i, checked_pow_128(6, static_cast<int>(i)));
    return out;
}

DiffBound7 diff_lower_bound_7(int k) {
    if (k < 1) fail(Errc::bad_parameter, "k must be positive");
    const std::int64_t g = 2LL * k;
    DiffBound7 out;

    Int128 sum = 0;
    for (std::int64_t i = 0; i + 2 <= k; ++i)
        sum = checked_add_128(sum, checked_mul_128(checked_mul_128(2 * i + 1, checked_pow_128(6, i + 1)),
                                                   g - 2 * i - 2));
    for (std::int64_t i = 1; i + 1 <= k; ++i)
        sum = checked_add_128(
            sum, checked_mul_128(checked_mul_128(7 * i, checked_pow_128(6, i)), g - 2 * i - 1));
    out.double_sum = checked_mul_128(2, sum);

    Int128 numer = checked_add_128(checked_mul_128(checked_pow_128(6, k), 365LL * k - 606),
                                   Int128(840LL * k + 606));
    bool divisible = numer % 125 == 0;
    out.closed_form = checked_mul_128(2, numer / 125);
    out.routes_agree = divisible && out.closed_form == out.double_sum;
    return out;
}

Rational sigma_upper_bound_7(int k) {
    if (k < 1) fail(Errc::bad_parameter, "k must be positive");
    // (6^k (7007k/10 - 365) + 365) / 125 = (6^k (7007k - 3650) + 3650) / 1250
    Int128 numer =
        checked_add_128(checked_mul_128(checked_pow_128(6, k), 7007LL * k - 3650), Int128(3650));
    return Rational::make(numer, 1250);
}

bool gap_check(int k, std::int64_t threshold_coeff) {
    if (k < 1) fail(Errc::bad_parameter, "k must be positive");
    Int128 diff_lb = diff_lower_bound_7(k).value();
    Rational sigma_ub = sigma_upper_bound_7(k);
    // diff_lb - num/den > coeff*k^2  <=>  diff_lb*den - num > coeff*k^2*den
    Int128 lhs = checked_add_128(checked_mul_128(diff_lb, sigma_ub.den), -sigma_ub.num);
    Int128 rhs = checked_mul_128(checked_mul_128(threshold_coeff, Int128(k) * k), sigma_ub.den);
    return lhs > rhs;
}

Decomposition7460 decomposition_7460() {
    Decomposition7460 out;
    for (int j = 12; j <= 122; ++j) out.path_sum = checked_add_128(out.path_sum, j);
    out.total = checked_add_128(out.path_sum, 23);

    // Synthetic host: C46 with a chord far from the attachment edge {0,45};
    // w = 11 sits at distance 11 from the edge and reaches the compensator
    // only through it.
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i < 46; ++i) e.emplace_back(i, (i + 1) % 46);
    e.emplace_back(20, 30);
    Graph host = Graph::from_edge_list(46, e);
    Graph q = construct_q(host, EdgeRef(0, 45));
    out.added_vertex_count = q.vertex_count() - host.vertex_count();

    auto profile = bfs_layers(q, 11);
    std::map<Vertex, int> seen;
    for (Vertex z = 46; z < q.vertex_count(); ++z) ++seen[profile.dist[z]];
    std::map<Vertex, int> want;
    for (int j = 12; j <= 122; ++j) ++want[j];
    ++want[23];
    out.distances_ok = seen == want;
    return out;
}

}  // namespace soltes

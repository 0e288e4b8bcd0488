#pragma once

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <cmath>
#include <functional>
#include <iomanip>

#include "ramsey/bigmath.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/rng.hpp"

namespace ramsey {

using Float50 = boost::multiprecision::cpp_dec_float_50;

// One evaluated bound. Values are exact rationals wherever the formula is
// rational; asymptotic forms carry a 50-digit float with stated precision.
struct BoundReport {
    std::string name;
    std::vector<std::pair<std::string, long long>> inputs;
    std::optional<BigRat> exact;
    std::optional<Float50> approx;
    int precision_digits = 50;
    enum class Side { lower, upper, exact_value };
    Side side = Side::exact_value;
    std::string source;
    std::vector<std::string> flags;
    std::string note;

    std::string value_string() const {
        if (exact) return exact->str();
        std::ostringstream out;
        out << std::setprecision(precision_digits) << *approx;
        return out.str();
    }

    std::string inputs_string() const {
        std::ostringstream out;
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            if (i) out << " ";
            out << inputs[i].first << "=" << inputs[i].second;
        }
        return out.str();
    }

    std::string side_string() const {
        switch (side) {
        case Side::lower: return "lower";
        case Side::upper: return "upper";
        case Side::exact_value: return "exact";
        }
        return "?";
    }

    // tab-separated `name inputs value side source`; a trailing `flag=`
    // column is appended only when flags are present
    std::string tsv_line() const {
        std::ostringstream out;
        out << name << "\t" << inputs_string() << "\t" << value_string() << "\t" << side_string()
            << "\t" << source;
        if (!flags.empty()) {
            out << "\tflag=";
            for (std::size_t i = 0; i < flags.size(); ++i) {
                if (i) out << ",";
                out << flags[i];
            }
        }
        return out.str();
    }
};

// s(n-1)+1, the exact degree bipartite Ramsey number of the star K_{1,n}
inline BoundReport bound_star(long long n, long long s) {
    BoundReport r;
    r.name = "star";
    r.inputs = {{"n", n}, {"s", s}};
    r.exact = BigRat(s * (n - 1) + 1);
    r.side = BoundReport::Side::exact_value;
    r.source = "Lemma1";
    if (n < 2 || s < 2) r.flags.push_back("out-of-hypothesis");
    return r;
}

// s(k-1)+1 for trees with one vertex of degree k and the rest at most ceil(k/2)
inline BoundReport bound_tree_spider(long long k, long long s) {
    if (k < 1) throw std::invalid_argument("need k >= 1");
    BoundReport r;
    r.name = "spider";
    r.inputs = {{"k", k}, {"s", s}};
    r.exact = BigRat(s * (k - 1) + 1);
    r.side = BoundReport::Side::exact_value;
    r.source = "Theorem2";
    if (k == 1) r.flags.push_back("degenerate-k1");
    return r;
}

// 2s(Delta(T)-1), upper bound for every tree
inline BoundReport bound_tree_upper(long long delta_t, long long s) {
    if (delta_t < 1) throw std::invalid_argument("need max degree >= 1");
    BoundReport r;
    r.name = "tree-upper";
    r.inputs = {{"delta", delta_t}, {"s", s}};
    r.exact = BigRat(2 * s * (delta_t - 1));
    r.side = BoundReport::Side::upper;
    r.source = "Theorem3";
    if (delta_t == 1) r.flags.push_back("degenerate-single-vertex-tree");
    return r;
}

// s * C(N, m+n) * C(m+n, m) / s^{mn}: upper bound on the probability of a
// monochromatic K_{m,n} under the uniform random s-coloring of K_N
inline BoundReport kmn_expected_upper(long long N, long long m, long long n, long long s) {
    if (m + n > N) throw std::invalid_argument("need m+n <= N");
    if (s < 1) throw std::invalid_argument("need s >= 1");
    BoundReport r;
    r.name = "kmn-expected-upper";
    r.inputs = {{"N", N}, {"m", m}, {"n", n}, {"s", s}};
    BigRat value = BigRat(BigInt(s) * big_binomial(N, m + n) * big_binomial(m + n, m));
    value /= BigRat(big_pow(BigInt(s), m * n));
    r.exact = value;
    r.side = BoundReport::Side::upper;
    r.source = "Theorem1";
    if (m < 2) r.flags.push_back("out-of-hypothesis");
    return r;
}

// e^{-2} * s^{(mn-1)/(m+n)} * n, the random-coloring lower bound; valid
// asymptotically in n, reported at 50-digit precision
inline BoundReport kmn_lower_bound(long long n, long long m, long long s) {
    if (s < 1) throw std::invalid_argument("need s >= 1");
    BoundReport r;
    r.name = "kmn-lower";
    r.inputs = {{"n", n}, {"m", m}, {"s", s}};
    Float50 expo = Float50(m * n - 1) / Float50(m + n);
    Float50 value = exp(Float50(-2)) * exp(expo * log(Float50(s))) * n;
    r.approx = value;
    r.side = BoundReport::Side::lower;
    r.source = "Theorem1";
    r.flags.push_back("asymptotic-large-n");
    if (m < 2) r.flags.push_back("out-of-hypothesis");
    return r;
}

// M choice from the two branches of the constant computation
inline long long kmn_constant_M(long long m, long long s) {
    return m <= s + 1 ? (s + 1) * m : (m - 1) * (m - 1);
}

// C = C(M,m) / C(M/s,m), exact; the non-integral M/s case evaluates the
// falling-factorial (Gamma) extension of the lower binomial, which is still
// a rational number
inline BigRat kmn_constant_value(long long m, long long s) {
    long long M = kmn_constant_M(m, s);
    BigRat lower = rational_binomial(BigRat(M) / s, m);
    if (lower <= 0) throw InternalError("degenerate binomial in constant computation");
    return BigRat(big_binomial(M, m)) / lower;
}

inline Float50 kmn_constant_cap(long long m, long long s) {
    Float50 cap = exp(Float50(s * s - 1));
    return cap * exp(Float50(m) * log(Float50(s)));
}

inline Float50 to_float50(const BigRat& r) {
    namespace mp = boost::multiprecision;
    return Float50(mp::numerator(r).str()) / Float50(mp::denominator(r).str());
}

// C <= s^m e^{s^2-1}, compared conservatively: the float margin is far wider
// than the 50-digit rounding error, so a pass is a real pass. s = 1 has an
// exactly representable cap and is compared exactly.
inline bool kmn_constant_cap_holds(long long m, long long s) {
    BigRat c = kmn_constant_value(m, s);
    if (s == 1) return c <= BigRat(1);
    Float50 cap = kmn_constant_cap(m, s);
    return to_float50(c) <= cap * (Float50(1) - Float50("1e-40"));
}

inline BoundReport kmn_upper_constant(long long m, long long s) {
    if (m < 2 || s < 1) throw std::invalid_argument("need m >= 2 and s >= 1");
    long long M = kmn_constant_M(m, s);
    BoundReport r;
    r.name = "kmn-constant";
    r.inputs = {{"m", m}, {"s", s}, {"M", M}};
    r.exact = kmn_constant_value(m, s);
    r.side = BoundReport::Side::upper;
    r.source = "Theorem1";
    if (M % s != 0) r.flags.push_back("non-integral-M-over-s");
    std::ostringstream note;
    note << "cap s^m*e^(s^2-1) " << (kmn_constant_cap_holds(m, s) ? "holds" : "VIOLATED");
    r.note = note.str();
    if (!kmn_constant_cap_holds(m, s)) r.flags.push_back("cap-violated");
    return r;
}

// ceil(n^2/s): monochromatic edges forced in any s-coloring of K_{n,n}
inline BigInt pigeonhole_count(long long n, long long s) {
    if (s < 1) throw std::invalid_argument("need s >= 1");
    return (BigInt(n) * n + s - 1) / s;
}

// Theta exponent 1 + 1/(m-1) for even cycles C_{2m}; tight for m in {2,3,5}
inline BoundReport cycle_bounds(long long m, long long s,
                                std::optional<long long> n = std::nullopt) {
    if (m < 2) throw std::invalid_argument("need m >= 2");
    BoundReport r;
    r.name = "cycle";
    r.inputs = {{"m", m}, {"s", s}};
    r.exact = BigRat(m, m - 1); // 1 + 1/(m-1)
    r.side = BoundReport::Side::exact_value;
    r.source = "Section1";
    r.note = "Theta exponent only; no constants claimed";
    if (m != 2 && m != 3 && m != 5) r.flags.push_back("tightness-not-established");
    if (n) {
        r.inputs.push_back({"n", *n});
        r.note += "; pigeonhole: any s-coloring of K_{n,n} has >= " +
                  pigeonhole_count(*n, s).str() + " monochromatic edges";
    }
    return r;
}

// ---------------------------------------------------------------------------
// Monte Carlo validation of the random-coloring expectation
// ---------------------------------------------------------------------------

struct MonteCarloKmnReport {
    long long N = 0, m = 0, n = 0, s = 0, trials = 0;
    std::uint64_t seed = 0;
    long long copies = 0;    // K_{m,n} subgraph copies of K_N
    BigRat exact_expected;   // copies * s^{1-mn}
    BigRat expected_upper;   // ordered-partition probability bound
    double mean_count = 0;
    double std_error = 0;
    double existence_freq = 0;
    double existence_se = 0;
    bool mean_within_3se = false;
    bool markov_consistent = false;
};

namespace detail {

inline void enumerate_kmn_copies(long long N, long long m, long long n,
                                 std::vector<std::vector<int>>& copies_edges) {
    auto edge_id = [N](long long a, long long b) {
        if (a > b) std::swap(a, b);
        return static_cast<int>(a * N - a * (a + 1) / 2 + (b - a - 1));
    };
    std::vector<int> subset;
    std::vector<int> pick;
    // choose the m+n vertices, then the left side within them; for m == n the
    // overall minimum stays on the left to avoid double counting
    std::function<void()> split;
    std::function<void(int)> choose = [&](int start) {
        if (static_cast<long long>(subset.size()) == m + n) {
            split();
            return;
        }
        for (int v = start; v < N; ++v) {
            subset.push_back(v);
            choose(v + 1);
            subset.pop_back();
        }
    };
    std::function<void(std::size_t)> pick_left = [&](std::size_t start) {
        if (static_cast<long long>(pick.size()) == m) {
            std::vector<int> edges;
            for (int a : pick)
                for (int b : subset)
                    if (std::find(pick.begin(), pick.end(), b) == pick.end())
                        edges.push_back(edge_id(a, b));
            copies_edges.push_back(std::move(edges));
            return;
        }
        for (std::size_t i = start; i < subset.size(); ++i) {
            if (m == n && pick.empty() && subset[i] != subset.front()) break;
            pick.push_back(subset[i]);
            pick_left(i + 1);
            pick.pop_back();
        }
    };
    split = [&]() { pick_left(0); };
    choose(0);
}

} // namespace detail

// Seeded random s-colorings of K_N: reports the empirical frequency of a
// monochromatic K_{m,n} against the probability bound (Markov) and the mean
// monochromatic copy count against its exact expectation.
inline MonteCarloKmnReport monte_carlo_kmn(long long N, long long m, long long n, long long s,
                                           long long trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("need at least one trial");
    if (m + n > N) throw std::invalid_argument("need m+n <= N");
    if (s < 1) throw std::invalid_argument("need s >= 1");
    BigInt plan = big_binomial(N, m + n) * big_binomial(m + n, m);
    if (plan > 2'000'000) throw std::invalid_argument("too many copies to enumerate");

    MonteCarloKmnReport rep;
    rep.N = N;
    rep.m = m;
    rep.n = n;
    rep.s = s;
    rep.trials = trials;
    rep.seed = seed;

    std::vector<std::vector<int>> copies;
    detail::enumerate_kmn_copies(N, m, n, copies);
    rep.copies = static_cast<long long>(copies.size());
    rep.exact_expected = BigRat(rep.copies) * BigRat(s) / BigRat(big_pow(BigInt(s), m * n));
    rep.expected_upper = *kmn_expected_upper(N, m, n, s).exact;

    long long edge_total = N * (N - 1) / 2;
    std::vector<int> color(edge_total);
    double sum = 0, sum_sq = 0;
    long long hits = 0;
    for (long long t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
        for (long long i = 0; i < edge_total; ++i)
            color[i] = s == 1 ? 0 : rng.below_int(static_cast<int>(s));
        long long count = 0;
        for (const auto& copy : copies) {
            int c0 = color[copy[0]];
            bool mono = true;
            for (std::size_t i = 1; i < copy.size(); ++i)
                if (color[copy[i]] != c0) {
                    mono = false;
                    break;
                }
            count += mono;
        }
        sum += static_cast<double>(count);
        sum_sq += static_cast<double>(count) * static_cast<double>(count);
        hits += count > 0;
    }
    double tn = static_cast<double>(trials);
    rep.mean_count = sum / tn;
    double variance = trials > 1 ? std::max(0.0, (sum_sq - sum * sum / tn) / (tn - 1)) : 0.0;
    rep.std_error = std::sqrt(variance / tn);
    rep.existence_freq = static_cast<double>(hits) / tn;
    rep.existence_se = std::sqrt(rep.existence_freq * (1 - rep.existence_freq) / tn);

    double exact_d = static_cast<double>(rep.exact_expected);
    rep.mean_within_3se = std::abs(rep.mean_count - exact_d) <= 3 * rep.std_error;
    double upper_d = std::min(1.0, static_cast<double>(rep.expected_upper));
    rep.markov_consistent = rep.existence_freq <= upper_d + 3 * rep.existence_se;
    return rep;
}

} // namespace ramsey

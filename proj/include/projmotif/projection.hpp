#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "projmotif/alphabet.hpp"
#include "projmotif/errors.hpp"
#include "projmotif/kmer.hpp"
#include "projmotif/parallel.hpp"
#include "projmotif/rng.hpp"
#include "projmotif/sequence.hpp"

namespace projmotif {

/// Parameters of one projection run: projection width k, bucket threshold s,
/// trial count m, target success probability q, and the assumed number of
/// motif-bearing sequences t_hat.
struct TrialParams {
    int l = 0;
    int d = 0;
    int k = 0;
    int s = 0;
    std::int64_t m = 0;
    double q = 0.0;
    int t_hat = 0;
};

/// A projection h_k: the k retained positions, strictly increasing in [1, l].
class ProjectionPlan {
public:
    ProjectionPlan(int l, std::vector<int> kept_positions) : l_(l), kept_(std::move(kept_positions)) {
        if (l < 1) {
            throw InvalidParamsError("projection source length must be positive, got " + std::to_string(l));
        }
        if (kept_.empty() || static_cast<int>(kept_.size()) > l) {
            throw InvalidParamsError("projection must keep between 1 and l positions, got " +
                                     std::to_string(kept_.size()) + " of l=" + std::to_string(l));
        }
        int prev = 0;
        for (int p : kept_) {
            if (p <= prev || p > l) {
                throw InvalidParamsError("kept positions must be strictly increasing within [1," +
                                         std::to_string(l) + "]");
            }
            prev = p;
        }
    }

    /// The trivial projection keeping every position.
    static ProjectionPlan identity(int l) {
        std::vector<int> all(static_cast<std::size_t>(l));
        for (int p = 1; p <= l; ++p) {
            all[static_cast<std::size_t>(p - 1)] = p;
        }
        return ProjectionPlan(l, std::move(all));
    }

    int l() const { return l_; }
    int k() const { return static_cast<int>(kept_.size()); }
    const std::vector<int>& kept_positions() const { return kept_; }

    bool operator==(const ProjectionPlan& other) const = default;

private:
    int l_;
    std::vector<int> kept_;
};

/// One projection bucket: all l-mers sharing a projected k-mer code.
struct Bucket {
    std::uint64_t key = 0;
    std::vector<LmerRef> members;
};

/// All nonempty buckets of a trial, sorted by ascending key; members are in
/// (sequence, offset) order. Membership totals x across the grouping.
using BucketGrouping = std::vector<Bucket>;

/// A bucket that met the threshold s, truncated to at most r = t*s members.
struct EnrichedBucket {
    std::uint64_t key = 0;
    std::vector<LmerRef> members;
    bool overflowed = false;
};

enum class HashBackend {
    dense,     // direct-indexed table of |Σ|^k counters
    grouped,   // sort-and-group over encoded k-mers
    automatic  // dense when the table fits, grouped otherwise
};

inline int optimal_k(int l, int d) {
    if (l - d - 1 < 1) {
        throw InvalidParamsError("no valid projection width: l-d-1 = " + std::to_string(l - d - 1) +
                                 " (l=" + std::to_string(l) + ", d=" + std::to_string(d) + ")");
    }
    return l - d - 1;
}

/// p̂(l,d,k) = C(l−d,k)/C(l,k): the chance a uniformly drawn k-subset of
/// positions avoids all d mutated ones. Zero when k > l−d.
inline double p_hat(int l, int d, int k) {
    if (l < 1 || d < 0 || d >= l || k < 0 || k > l) {
        throw InvalidParamsError("p_hat needs 0 <= d < l and 0 <= k <= l");
    }
    if (k > l - d) {
        return 0.0;
    }
    // Product form of the binomial ratio; every factor is <= 1.
    double p = 1.0;
    for (int i = 0; i < k; ++i) {
        p *= static_cast<double>(l - d - i) / static_cast<double>(l - i);
    }
    return p;
}

/// P(X < s) for X ~ Binomial(t_hat, p), clamped to [0,1].
inline double binomial_lt(int t_hat, double p, int s) {
    if (t_hat < 1 || s < 0 || p < 0.0 || p > 1.0) {
        throw InvalidParamsError("binomial_lt needs t_hat >= 1, s >= 0, p in [0,1]");
    }
    if (s == 0) {
        return 0.0;
    }
    if (s > t_hat) {
        return 1.0;  // X <= t_hat < s always; avoids a rounded full-pmf sum
    }
    if (p <= 0.0) {
        return 1.0;
    }
    if (p >= 1.0) {
        return s > t_hat ? 1.0 : 0.0;
    }
    // term_i = C(t_hat,i) p^i (1-p)^(t_hat-i), built up incrementally.
    double term = std::pow(1.0 - p, t_hat);
    double sum = term;
    const int top = std::min(s - 1, t_hat);
    for (int i = 0; i < top; ++i) {
        term *= static_cast<double>(t_hat - i) / static_cast<double>(i + 1) * (p / (1.0 - p));
        sum += term;
    }
    return std::clamp(sum, 0.0, 1.0);
}

/// Smallest m with B^m <= 1-q, i.e. m trials push the miss probability below
/// 1-q. The ceiling from the closed form is nudged so the inverse property
/// holds exactly in double arithmetic.
inline std::int64_t trials_for_tail(double q, double miss_probability) {
    if (!(q > 0.0 && q < 1.0)) {
        throw InvalidParamsError("q must lie strictly between 0 and 1");
    }
    const double b = miss_probability;
    if (b >= 1.0) {
        throw UnreachableError("bucket threshold unattainable: per-trial miss probability is 1");
    }
    if (b <= 0.0) {
        return 1;  // degenerate: a single trial already succeeds
    }
    const double target = 1.0 - q;
    double guess = std::ceil(std::log(target) / std::log(b));
    std::int64_t m = guess < 1.0 ? 1 : static_cast<std::int64_t>(guess);
    while (std::pow(b, static_cast<double>(m)) > target) {
        ++m;
    }
    while (m > 1 && std::pow(b, static_cast<double>(m - 1)) <= target) {
        --m;
    }
    return m;
}

inline std::int64_t num_trials(double q, int t_hat, double p, int s) {
    return trials_for_tail(q, binomial_lt(t_hat, p, s));
}

/// s = max(floor, ceil of twice the average bucket load 2·x/|Σ|^k) for a
/// total of x projected l-mers.
inline int bucket_threshold_for_windows(std::uint64_t total_windows, int k, int floor,
                                        const Alphabet& alphabet = Alphabet::dna()) {
    if (k < 1 || floor < 1) {
        throw InvalidParamsError("bucket threshold needs k >= 1 and floor >= 1");
    }
    long double denom = 1.0L;
    for (int i = 0; i < k; ++i) {
        denom *= static_cast<long double>(alphabet.size());
    }
    const long double average_doubled = 2.0L * static_cast<long double>(total_windows) / denom;
    const long double ceiled = std::ceil(average_doubled);
    if (ceiled <= static_cast<long double>(floor)) {
        return floor;
    }
    return static_cast<int>(ceiled);
}

inline int bucket_threshold(int t, int n, int l, int k, int floor = 3,
                            const Alphabet& alphabet = Alphabet::dna()) {
    if (t < 1 || l < 1 || l > n) {
        throw InvalidParamsError("bucket threshold needs t >= 1 and 1 <= l <= n");
    }
    const std::uint64_t windows = static_cast<std::uint64_t>(t) * static_cast<std::uint64_t>(n - l + 1);
    return bucket_threshold_for_windows(windows, k, floor, alphabet);
}

/// Draws l−k distinct excluded positions from [1,l]; the plan keeps the
/// sorted complement.
inline ProjectionPlan sample_plan(int l, int k, Rng& rng) {
    if (k < 1 || k > l) {
        throw InvalidParamsError("plan needs 1 <= k <= l, got k=" + std::to_string(k) + ", l=" + std::to_string(l));
    }
    std::vector<char> excluded(static_cast<std::size_t>(l) + 1, 0);
    for (int p : detail::sample_distinct(l, l - k, rng)) {
        excluded[static_cast<std::size_t>(p)] = 1;
    }
    std::vector<int> kept;
    kept.reserve(static_cast<std::size_t>(k));
    for (int p = 1; p <= l; ++p) {
        if (!excluded[static_cast<std::size_t>(p)]) {
            kept.push_back(p);
        }
    }
    return ProjectionPlan(l, std::move(kept));
}

/// h_k(v): characters of v at the kept positions, order preserved.
inline std::string project(std::string_view lmer, const ProjectionPlan& plan) {
    if (static_cast<int>(lmer.size()) != plan.l()) {
        throw LengthMismatchError("cannot project a length-" + std::to_string(lmer.size()) +
                                  " string with a plan for l=" + std::to_string(plan.l()));
    }
    std::string out;
    out.reserve(static_cast<std::size_t>(plan.k()));
    for (int p : plan.kept_positions()) {
        out.push_back(lmer[static_cast<std::size_t>(p - 1)]);
    }
    return out;
}

/// encode_kmer(project(lmer, plan)) without materializing the k-mer string.
inline std::uint64_t project_encode(std::string_view lmer, const ProjectionPlan& plan, const Alphabet& alphabet) {
    if (static_cast<int>(lmer.size()) != plan.l()) {
        throw LengthMismatchError("cannot project a length-" + std::to_string(lmer.size()) +
                                  " string with a plan for l=" + std::to_string(plan.l()));
    }
    const std::uint64_t sigma = static_cast<std::uint64_t>(alphabet.size());
    std::uint64_t code = 0;
    for (int p : plan.kept_positions()) {
        code = code * sigma + static_cast<std::uint64_t>(alphabet.rank(lmer[static_cast<std::size_t>(p - 1)]));
    }
    return code;
}

namespace detail {

inline BucketGrouping group_dense(const std::vector<LmerRef>& refs, const std::vector<std::uint64_t>& codes,
                                  std::uint64_t table_size) {
    // Counting sort by key: one counter per possible code, then a second
    // pass appends members in input (seq, offset) order.
    std::vector<std::uint32_t> counts(table_size, 0);
    for (std::uint64_t code : codes) {
        ++counts[code];
    }
    std::vector<std::int32_t> bucket_of(table_size, -1);
    BucketGrouping grouping;
    for (std::uint64_t key = 0; key < table_size; ++key) {
        if (counts[key] > 0) {
            bucket_of[key] = static_cast<std::int32_t>(grouping.size());
            grouping.push_back(Bucket{key, {}});
            grouping.back().members.reserve(counts[key]);
        }
    }
    for (std::size_t i = 0; i < refs.size(); ++i) {
        grouping[static_cast<std::size_t>(bucket_of[codes[i]])].members.push_back(refs[i]);
    }
    return grouping;
}

inline BucketGrouping group_sorted(const std::vector<LmerRef>& refs, const std::vector<std::uint64_t>& codes) {
    // Sort l-mer indices by (code, index); equal-code runs become buckets.
    // Index as tie-break keeps members in (seq, offset) order.
    std::vector<std::uint32_t> order(refs.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = static_cast<std::uint32_t>(i);
    }
    std::sort(order.begin(), order.end(), [&codes](std::uint32_t a, std::uint32_t b) {
        if (codes[a] != codes[b]) {
            return codes[a] < codes[b];
        }
        return a < b;
    });
    BucketGrouping grouping;
    std::size_t run_start = 0;
    while (run_start < order.size()) {
        std::size_t run_end = run_start + 1;
        const std::uint64_t key = codes[order[run_start]];
        while (run_end < order.size() && codes[order[run_end]] == key) {
            ++run_end;
        }
        Bucket bucket{key, {}};
        bucket.members.reserve(run_end - run_start);
        for (std::size_t i = run_start; i < run_end; ++i) {
            bucket.members.push_back(refs[order[i]]);
        }
        grouping.push_back(std::move(bucket));
        run_start = run_end;
    }
    return grouping;
}

}  // namespace detail

/// Projects and hashes every l-mer of the set into buckets keyed by the
/// projected k-mer code. The projection map over the x l-mers is
/// write-disjoint and may run on several workers; the grouping step is
/// deterministic, so the result does not depend on the worker count.
inline BucketGrouping hash_trial(const SequenceSet& seqs, int l, const ProjectionPlan& plan,
                                 HashBackend backend = HashBackend::automatic, int workers = 1,
                                 std::uint64_t dense_table_cap = 65536) {
    if (plan.l() != l) {
        throw LengthMismatchError("plan built for l=" + std::to_string(plan.l()) + ", asked to hash l=" +
                                  std::to_string(l));
    }
    const Alphabet& alphabet = seqs.alphabet();
    if (plan.k() > max_kmer_length(alphabet)) {
        throw KmerTooLongError("projection width " + std::to_string(plan.k()) +
                               " exceeds the encodable k-mer length " + std::to_string(max_kmer_length(alphabet)));
    }

    const std::vector<LmerRef> refs = seqs.lmer_refs(l);
    std::vector<std::uint64_t> codes(refs.size());
    parallel_for(static_cast<std::int64_t>(refs.size()), workers, [&](std::int64_t begin, std::int64_t end) {
        for (std::int64_t i = begin; i < end; ++i) {
            const LmerRef& ref = refs[static_cast<std::size_t>(i)];
            codes[static_cast<std::size_t>(i)] = project_encode(seqs.lmer_view(ref), plan, alphabet);
        }
    });

    const std::uint64_t table_size = detail::pow_sigma(alphabet.size(), plan.k());
    HashBackend chosen = backend;
    if (chosen == HashBackend::automatic) {
        chosen = table_size <= dense_table_cap ? HashBackend::dense : HashBackend::grouped;
    }
    if (chosen == HashBackend::dense) {
        if (table_size > dense_table_cap) {
            throw DenseTableTooLargeError("dense backend would allocate " + std::to_string(table_size) +
                                          " buckets, above the cap of " + std::to_string(dense_table_cap) +
                                          "; use the grouped backend");
        }
        return detail::group_dense(refs, codes, table_size);
    }
    return detail::group_sorted(refs, codes);
}

/// Buckets with at least s members, sorted by descending (pre-truncation)
/// size then ascending key, each truncated to the first r_cap members.
inline std::vector<EnrichedBucket> enriched_buckets(const BucketGrouping& grouping, int s, int r_cap) {
    if (s < 1 || r_cap < s) {
        throw InvalidParamsError("enriched buckets need s >= 1 and r_cap >= s");
    }
    struct Pick {
        const Bucket* bucket;
        std::size_t size;
    };
    std::vector<Pick> picks;
    for (const Bucket& bucket : grouping) {
        if (static_cast<int>(bucket.members.size()) >= s) {
            picks.push_back(Pick{&bucket, bucket.members.size()});
        }
    }
    std::sort(picks.begin(), picks.end(), [](const Pick& a, const Pick& b) {
        if (a.size != b.size) {
            return a.size > b.size;
        }
        return a.bucket->key < b.bucket->key;
    });
    std::vector<EnrichedBucket> out;
    out.reserve(picks.size());
    for (const Pick& pick : picks) {
        EnrichedBucket eb;
        eb.key = pick.bucket->key;
        eb.overflowed = pick.size > static_cast<std::size_t>(r_cap);
        const std::size_t take = eb.overflowed ? static_cast<std::size_t>(r_cap) : pick.size;
        eb.members.assign(pick.bucket->members.begin(), pick.bucket->members.begin() + static_cast<std::ptrdiff_t>(take));
        out.push_back(std::move(eb));
    }
    return out;
}

}  // namespace projmotif

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "projmotif/alphabet.hpp"
#include "projmotif/errors.hpp"
#include "projmotif/projection.hpp"
#include "projmotif/scoring.hpp"
#include "projmotif/sequence.hpp"

namespace projmotif {

/// θ: |Σ| rows by (l+1) columns of probabilities. Column 0 is the background
/// distribution, columns 1..l are the motif positions. Columns sum to 1.
class MotifModel {
public:
    MotifModel(int sigma, int l)
        : sigma_(sigma), l_(l), theta_(static_cast<std::size_t>(sigma) * static_cast<std::size_t>(l + 1), 0.0) {
        if (sigma < 1 || l < 1) {
            throw InvalidParamsError("model dimensions must be positive");
        }
    }

    int sigma() const { return sigma_; }
    int motif_length() const { return l_; }

    // rank is 0-based; column 0 is background, 1..l are motif positions
    double& at(int rank, int column) { return theta_[index(rank, column)]; }
    double at(int rank, int column) const { return theta_[index(rank, column)]; }

    double column_max(int column) const {
        double best = 0.0;
        for (int r = 0; r < sigma_; ++r) {
            best = std::max(best, at(r, column));
        }
        return best;
    }

    /// True when every column sums to 1 within tol.
    bool is_column_stochastic(double tol = 1e-9) const {
        for (int c = 0; c <= l_; ++c) {
            double sum = 0.0;
            for (int r = 0; r < sigma_; ++r) {
                const double v = at(r, c);
                if (v < 0.0 || v > 1.0) {
                    return false;
                }
                sum += v;
            }
            if (std::abs(sum - 1.0) > tol) {
                return false;
            }
        }
        return true;
    }

    bool operator==(const MotifModel& other) const = default;

private:
    std::size_t index(int rank, int column) const {
        if (rank < 0 || rank >= sigma_ || column < 0 || column > l_) {
            throw IndexOutOfRangeError("model cell (" + std::to_string(rank) + "," + std::to_string(column) +
                                       ") outside " + std::to_string(sigma_) + "x" + std::to_string(l_ + 1));
        }
        return static_cast<std::size_t>(rank) * static_cast<std::size_t>(l_ + 1) + static_cast<std::size_t>(column);
    }

    int sigma_;
    int l_;
    std::vector<double> theta_;
};

struct RefinedCandidate {
    std::string consensus;
    StartVector positions;
    int score = 0;
    double expectation = 0.0;
    int iterations = 0;
    std::uint64_t source_bucket = 0;
};

/// θ⁰: motif columns from the bucket members' symbol counts (optionally
/// pseudocounted), background column from symbol frequencies over the whole
/// sequence set.
inline MotifModel init_model(const std::vector<LmerRef>& members, const SequenceSet& seqs, int l,
                             double pseudocount = 0.0) {
    if (members.empty()) {
        throw EmptyBucketError("cannot build a motif model from an empty bucket");
    }
    if (pseudocount < 0.0) {
        throw InvalidParamsError("pseudocount must be non-negative");
    }
    const Alphabet& alphabet = seqs.alphabet();
    const int sigma = alphabet.size();
    MotifModel model(sigma, l);

    const double denom = static_cast<double>(members.size()) + static_cast<double>(sigma) * pseudocount;
    for (int r = 0; r < sigma; ++r) {
        for (int c = 1; c <= l; ++c) {
            model.at(r, c) = pseudocount / denom;
        }
    }
    for (const LmerRef& ref : members) {
        std::string_view lmer = seqs.lmer_view(ref.seq_index, ref.offset, l);
        for (int c = 1; c <= l; ++c) {
            model.at(alphabet.rank(lmer[static_cast<std::size_t>(c - 1)]), c) += 1.0 / denom;
        }
    }

    std::uint64_t total = 0;
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(sigma), 0);
    for (int i = 1; i <= seqs.count(); ++i) {
        for (char ch : seqs.sequence(i)) {
            ++counts[static_cast<std::size_t>(alphabet.rank(ch))];
            ++total;
        }
    }
    for (int r = 0; r < sigma; ++r) {
        model.at(r, 0) = static_cast<double>(counts[static_cast<std::size_t>(r)]) / static_cast<double>(total);
    }
    return model;
}

/// Refinement metric: Σ_{j=1..l} max_σ θ[σ][j].
inline double expectation(const MotifModel& model) {
    double sum = 0.0;
    for (int c = 1; c <= model.motif_length(); ++c) {
        sum += model.column_max(c);
    }
    return sum;
}

namespace detail {

constexpr double kProbabilityFloor = 1e-9;

struct EStep {
    std::vector<std::vector<double>> responsibilities;  // [sequence][offset-1]
    double log_likelihood = 0.0;
};

/// OOPS E-step. Z_ij ∝ Π_p θ[σ][p]/θ[σ][0] over the window at offset j,
/// normalized per sequence; accumulation is in log space. Also returns the
/// OOPS log-likelihood of the model that produced Z.
inline EStep e_step(const MotifModel& model, const SequenceSet& seqs, int l) {
    const Alphabet& alphabet = seqs.alphabet();
    const int sigma = model.sigma();
    std::vector<double> log_motif(static_cast<std::size_t>(sigma) * static_cast<std::size_t>(l));
    std::vector<double> log_background(static_cast<std::size_t>(sigma));
    for (int r = 0; r < sigma; ++r) {
        log_background[static_cast<std::size_t>(r)] = std::log(std::max(model.at(r, 0), kProbabilityFloor));
        for (int c = 1; c <= l; ++c) {
            log_motif[static_cast<std::size_t>(r) * static_cast<std::size_t>(l) + static_cast<std::size_t>(c - 1)] =
                std::log(std::max(model.at(r, c), kProbabilityFloor));
        }
    }

    EStep result;
    result.responsibilities.resize(static_cast<std::size_t>(seqs.count()));
    for (int i = 1; i <= seqs.count(); ++i) {
        const std::string& s = seqs.sequence(i);
        const int windows = seqs.window_count(i, l);
        std::vector<double>& z = result.responsibilities[static_cast<std::size_t>(i - 1)];
        z.resize(static_cast<std::size_t>(windows));

        double log_base = 0.0;  // log Π_pos θ[σ_pos][0]
        for (char ch : s) {
            log_base += log_background[static_cast<std::size_t>(alphabet.rank(ch))];
        }

        double max_w = -std::numeric_limits<double>::infinity();
        for (int j = 0; j < windows; ++j) {
            double w = 0.0;
            for (int c = 0; c < l; ++c) {
                const int r = alphabet.rank(s[static_cast<std::size_t>(j + c)]);
                w += log_motif[static_cast<std::size_t>(r) * static_cast<std::size_t>(l) + static_cast<std::size_t>(c)] -
                     log_background[static_cast<std::size_t>(r)];
            }
            z[static_cast<std::size_t>(j)] = w;
            max_w = std::max(max_w, w);
        }
        if (!std::isfinite(max_w)) {
            throw NumericalUnderflowError("all window weights vanished in sequence " + std::to_string(i));
        }

        double sum_exp = 0.0;
        for (double& w : z) {
            w = std::exp(w - max_w);
            sum_exp += w;
        }
        for (double& w : z) {
            w /= sum_exp;
        }
        // log P(S_i) = log Π θ_bg − log W + logsumexp_j(w_ij)
        result.log_likelihood += log_base - std::log(static_cast<double>(windows)) + max_w + std::log(sum_exp);
    }
    return result;
}

}  // namespace detail

struct EmStepResult {
    MotifModel model;
    double log_likelihood = 0.0;  // OOPS log-likelihood of the input model
};

/// One EM iteration. The M-step re-estimates motif columns from the
/// responsibility-weighted symbol counts and the background from the
/// remaining (non-motif) expected counts; columns are floored and
/// renormalized so no probability can reach zero.
inline EmStepResult em_step(const MotifModel& model, const SequenceSet& seqs, int l) {
    if (model.motif_length() != l) {
        throw LengthMismatchError("model built for l=" + std::to_string(model.motif_length()) +
                                  ", asked to step with l=" + std::to_string(l));
    }
    const Alphabet& alphabet = seqs.alphabet();
    const int sigma = model.sigma();
    const detail::EStep estep = detail::e_step(model, seqs, l);

    MotifModel next(sigma, l);
    std::vector<double> motif_counts(static_cast<std::size_t>(sigma) * static_cast<std::size_t>(l), 0.0);
    for (int i = 1; i <= seqs.count(); ++i) {
        const std::string& s = seqs.sequence(i);
        const std::vector<double>& z = estep.responsibilities[static_cast<std::size_t>(i - 1)];
        for (std::size_t j = 0; j < z.size(); ++j) {
            for (int c = 0; c < l; ++c) {
                const int r = alphabet.rank(s[j + static_cast<std::size_t>(c)]);
                motif_counts[static_cast<std::size_t>(r) * static_cast<std::size_t>(l) + static_cast<std::size_t>(c)] +=
                    z[j];
            }
        }
    }

    // Total symbol counts; motif expectations are subtracted to leave the
    // expected background counts.
    std::vector<double> background_counts(static_cast<std::size_t>(sigma), 0.0);
    for (int i = 1; i <= seqs.count(); ++i) {
        for (char ch : seqs.sequence(i)) {
            background_counts[static_cast<std::size_t>(alphabet.rank(ch))] += 1.0;
        }
    }
    for (int r = 0; r < sigma; ++r) {
        for (int c = 0; c < l; ++c) {
            background_counts[static_cast<std::size_t>(r)] -=
                motif_counts[static_cast<std::size_t>(r) * static_cast<std::size_t>(l) + static_cast<std::size_t>(c)];
        }
        background_counts[static_cast<std::size_t>(r)] = std::max(background_counts[static_cast<std::size_t>(r)], 0.0);
    }

    std::vector<double> raw(static_cast<std::size_t>(sigma));
    auto write_column = [&](int column) {
        double sum = 0.0;
        for (double v : raw) {
            sum += v;
        }
        double floored_sum = 0.0;
        for (double& v : raw) {
            v = sum > 0.0 ? std::max(v / sum, detail::kProbabilityFloor) : 1.0 / static_cast<double>(sigma);
            floored_sum += v;
        }
        for (int r = 0; r < sigma; ++r) {
            next.at(r, column) = raw[static_cast<std::size_t>(r)] / floored_sum;
        }
    };

    for (int c = 1; c <= l; ++c) {
        for (int r = 0; r < sigma; ++r) {
            raw[static_cast<std::size_t>(r)] = motif_counts[static_cast<std::size_t>(r) * static_cast<std::size_t>(l) +
                                                            static_cast<std::size_t>(c - 1)];
        }
        write_column(c);
    }
    raw = background_counts;
    write_column(0);

    return EmStepResult{std::move(next), estep.log_likelihood};
}

/// Refines one enriched bucket: θ⁰ from the members (zero pseudocount), EM
/// until the log-likelihood gain drops below tol or max_iters is reached,
/// then occurrence positions by per-sequence responsibility argmax (ties to
/// the smallest offset).
inline RefinedCandidate refine(const EnrichedBucket& bucket, const SequenceSet& seqs, int l, int max_iters = 5,
                               double tol = 1e-6) {
    if (max_iters < 1) {
        throw InvalidParamsError("need at least one EM iteration");
    }
    MotifModel model = init_model(bucket.members, seqs, l, 0.0);
    double prev_ll = -std::numeric_limits<double>::infinity();
    int iterations = 0;
    for (int it = 1; it <= max_iters; ++it) {
        EmStepResult step = em_step(model, seqs, l);
        model = std::move(step.model);
        iterations = it;
        if (it >= 2 && step.log_likelihood - prev_ll < tol) {
            break;
        }
        prev_ll = step.log_likelihood;
    }

    const detail::EStep final_estep = detail::e_step(model, seqs, l);
    RefinedCandidate out;
    out.positions.resize(static_cast<std::size_t>(seqs.count()));
    for (int i = 1; i <= seqs.count(); ++i) {
        const std::vector<double>& z = final_estep.responsibilities[static_cast<std::size_t>(i - 1)];
        int best_offset = 1;
        for (int j = 2; j <= static_cast<int>(z.size()); ++j) {
            if (z[static_cast<std::size_t>(j - 1)] > z[static_cast<std::size_t>(best_offset - 1)]) {
                best_offset = j;
            }
        }
        out.positions[static_cast<std::size_t>(i - 1)] = best_offset;
    }
    const ProfileMatrix prof = profile(alignment(seqs, out.positions, l), seqs.alphabet());
    out.consensus = consensus(prof, seqs.alphabet());
    out.score = score_profile(prof);
    out.expectation = expectation(model);
    out.iterations = iterations;
    out.source_bucket = bucket.key;
    return out;
}

}  // namespace projmotif

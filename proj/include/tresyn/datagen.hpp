#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "tresyn/timed_word.hpp"
#include "tresyn/tre.hpp"

namespace tresyn {

// ===========================================================================
// Labeled example generation
// ===========================================================================
//
// Draws timed words from a target expression to build (positive, negative)
// example sets for tests and benchmarks.  Sampling is not uniform over the
// timed language: derivation shapes are drawn top-down (star iteration
// counts truncated-geometric, alternation branches fair coins) and delays
// are rejection-sampled from a rational grid until the nested delay-sum
// restrictions hold.  Every emitted label is verified with the membership
// check.  All randomness flows through the seed, and delays stay on a
// decimal grid, so regenerated datasets are byte-identical.

struct SampleLimits {
    int max_word_length = 12;
    int max_star_iterations = 3;
    /* Delays are multiples of 1/delay_grid; must divide a power of ten. */
    int delay_grid = 10;
    int max_rejection_attempts = 10000;
    std::uint64_t seed = 1;
};

/* Sampling could not produce the requested words within the attempt budget. */
class sample_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/*
 * One word from the target's language: a derivation shape is chosen
 * top-down, then grid delays are drawn until every restriction on the shape
 * holds.  Throws sample_error after max_rejection_attempts, naming the
 * restriction that failed most often.
 */
TimedWord sample_word(const Tre& target, const SampleLimits& limits, std::mt19937_64& rng);

struct Dataset {
    std::vector<TimedWord> positives;
    std::vector<TimedWord> negatives;
    /* What was asked for — smaller produced counts mean the attempt budget
     * ran out, reported rather than hidden. */
    int requested_positives = 0;
    int requested_negatives = 0;
};

/*
 * n_pos member words plus n_neg non-member words over the same alphabet.
 * Negatives come from two mixed sources: a positive with its delays
 * redrawn (same event sequence, timing outside the language) and wholly
 * random words up to max_word_length; membership filters both.  Returns a
 * partial dataset with honest counts when the budget runs out.
 */
Dataset generate_dataset(const Tre& target, int n_pos, int n_neg, const SampleLimits& limits);

/* JSON manifest: target text, seed, limits, requested and produced counts. */
std::string dataset_manifest(const Tre& target, const SampleLimits& limits, const Dataset& dataset);

}  // namespace tresyn

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tresyn/rational.hpp"

namespace tresyn {

/* Event names follow identifier syntax: [A-Za-z_][A-Za-z0-9_]*. */
using Event = std::string;

bool is_valid_event(const std::string& name);

/*
 * Timed word: a finite sequence of (event, delay) pairs, where each delay is
 * the nonnegative time elapsed since the previous event (or since the start
 * for the first one).  The empty word is allowed.
 */
struct TimedWord {
    std::vector<std::pair<Event, Rat>> letters;

    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }

    /* Sum of delays of positions [begin, end), 0-based half-open. */
    Rat delay_sum(std::size_t begin, std::size_t end) const;
    /* Sum of all delays. */
    Rat total() const { return delay_sum(0, letters.size()); }

    bool operator==(const TimedWord& o) const { return letters == o.letters; }
    bool operator!=(const TimedWord& o) const { return !(*this == o); }
};

/* Event sequence of a word ("untiming"). */
std::vector<Event> untime(const TimedWord& w);

/* Delay sequence of a word. */
std::vector<Rat> delays(const TimedWord& w);

/*
 * Parse one word from its text form: whitespace-separated EVENT@DELAY tokens,
 * e.g. "a@1.5 b@2".  An empty (or all-whitespace) string is the empty word.
 * Rejects malformed tokens and negative delays.
 */
TimedWord parse_timed_word(const std::string& text);

/* Inverse of parse_timed_word; the empty word renders as "". */
std::string format_timed_word(const TimedWord& w);

/*
 * Read a word list from a file: one word per line, '#' starts a comment line,
 * a blank line denotes the empty word.  Errors carry the 1-based line number.
 */
std::vector<TimedWord> read_word_file(const std::string& path);

/* Write words in the read_word_file format, one per line. */
void write_word_file(const std::string& path, const std::vector<TimedWord>& words);

}  // namespace tresyn

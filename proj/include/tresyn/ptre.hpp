#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>

#include "tresyn/tre.hpp"

namespace tresyn {

enum class PTreKind : std::uint8_t { Hole, Atom, Concat, Or, Star };

struct PTre;
using PTrePtr = std::shared_ptr<const PTre>;

/*
 * Parametric timed regular expression: the candidate shape explored by the
 * enumerator.  Leaves are either event atoms or holes (unexpanded slots);
 * every non-hole node conceptually carries an unknown interval whose id is
 * the node's position in level-order numbering (root = 1, then children level
 * by level).  Epsilon never occurs: a candidate containing it could be
 * shortened without changing its language, so no minimal result needs it.
 */
struct PTre {
    PTreKind kind{PTreKind::Hole};
    Event event;    /* Atom only */
    PTrePtr left;   /* Concat/Or/Star */
    PTrePtr right;  /* Concat/Or */
};

PTrePtr make_hole();
PTrePtr make_patom(Event event);
PTrePtr make_pconcat(PTrePtr left, PTrePtr right);
PTrePtr make_por(PTrePtr left, PTrePtr right);
PTrePtr make_pstar(PTrePtr body);

/* Node count, holes included. */
std::size_t ptre_length(const PTre& p);

/* Number of hole leaves; 0 means the candidate is closed. */
std::size_t hole_count(const PTre& p);
bool is_closed(const PTre& p);

bool ptre_equal(const PTre& a, const PTre& b);

/*
 * Canonical text form: like format_tre but with '?' for holes and no
 * intervals (they are unknowns).  Candidate sets are ordered by this string.
 */
std::string format_ptre(const PTre& p);

/* Interval assignment for a closed candidate, keyed by node position. */
struct Assignment {
    std::map<std::uint32_t, Interval> by_id;
};

/*
 * The loosest instance: every interval set to [0, inf).  Precondition: p is
 * closed.  Useful because instances only shrink the language, so a word its
 * event sequence cannot reach is unreachable for every instance.
 */
TrePtr max_instance(const PTre& p);

/*
 * Concrete expression obtained by stamping assigned intervals onto a closed
 * candidate; ids missing from the assignment (and [0, inf) entries) leave the
 * node unrestricted.
 */
TrePtr instantiate(const PTre& p, const Assignment& a);

}  // namespace tresyn

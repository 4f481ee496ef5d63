#pragma once

#include <vector>

#include "cfsep/grammar.hh"
#include "cfsep/nfa.hh"

namespace cfsep {

/// How a recursive block of a strongly regular grammar recurses.
enum class SccClass { left, right, cyclic };

/// One-state automaton accepting every word over `alphabet`.
Nfa sigma_star(const Alphabet& alphabet);

/// Rewrites every recursive block that is not uniformly left- or
/// right-linear into a right-linear one, breaking the a^n..b^n style
/// synchronisation. Fresh variables are named "A'" (more primes on clash).
Cfg strongly_regular(const Cfg& g);

/// True if every recursive block is all left-linear or all right-linear,
/// treating variables outside the block as terminals.
bool is_strongly_regular(const Cfg& g);

/// Classification of each block of `part`; non-recursive blocks are
/// reported as cyclic. Throws InputError if some recursive block is both
/// left and right generating.
std::vector<SccClass> classify_blocks(const Cfg& g, const SccPartition& part);

/// Automaton for a strongly regular grammar. Throws InputError otherwise.
Nfa make_fa(const Cfg& g, const SccPartition& part);

/// strongly_regular followed by make_fa.
Nfa nederhof(const Cfg& g);

} // namespace cfsep

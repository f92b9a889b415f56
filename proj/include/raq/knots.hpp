#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "raq/left_quasigroup.hpp"
#include "raq/partition.hpp"

namespace raq {

struct Crossing {
  int over_arc = 0;
  int under_in_arc = 0;
  int under_out_arc = 0;
  int sign = 1; // +1 or -1
};

/*
 * An oriented link diagram at the arc level.  Arcs are the segments between
 * consecutive under-passes, numbered 0..arcs-1.  Every arc is the under_in of
 * exactly one crossing and the under_out of exactly one, except the closure
 * arc of a crossingless component, which is neither.  components partitions
 * the arcs by link component.
 */
struct LinkDiagram {
  int arcs = 0;
  std::vector<Crossing> crossings;
  Partition components;
};

/*
 * Reads a diagram from text.  Tokens are whitespace separated; '#' starts a
 * comment running to the end of the line.  Three forms:
 *
 *   unknot          the one-arc, zero-crossing diagram (must stand alone)
 *
 *   X[a,b,c,d]      oriented PD code.  Edges are numbered 1..2k consecutively
 *                   along each component; a is the incoming under-edge, c the
 *                   outgoing one, and b, d carry the over-strand.  Which of
 *                   b, d is incoming is settled by the successor rule: the
 *                   incoming over-edge is the one followed by the other along
 *                   its component, with non-adjacent pairs wrapping from the
 *                   component's highest edge to its lowest.  The crossing is
 *                   positive when d is incoming.  A component of only two
 *                   edges leaves the rule ambiguous and is rejected with a
 *                   request for the explicit form below.
 *
 *   C[o,i,u,s]      explicit crossing record: over-arc o, under-in arc i,
 *                   under-out arc u, sign s one of + -.  Arcs are numbered
 *                   1..m with no gaps.
 *
 * The two crossing syntaxes cannot be mixed.  Throws std::invalid_argument
 * on malformed records, ambiguity, or inconsistent wiring.
 */
LinkDiagram parse_pd(const std::string& text);

struct ColoringCount {
  std::uint64_t colorings = 0;
  bool nontrivial = false; // some coloring is non-constant
};

/*
 * Counts maps arc -> element of q satisfying, at each crossing,
 * color(under_out) = color(over) * color(under_in) when the sign is positive
 * and color(under_out) = color(over) \ color(under_in) when negative.  q must
 * be a quandle.  Constant colorings always exist, so colorings >= |q| and
 * nontrivial is true exactly when the count exceeds |q|.  Backtracks over
 * arcs in an order that keeps each new arc maximally constrained.
 */
ColoringCount count_colorings(const LinkDiagram& d, const LeftQuasigroup& q);

struct ColorabilityHit {
  LeftQuasigroup quandle;
  std::uint64_t colorings = 0;
  bool latin = false;
  bool connected_solvable = false;
};

struct ColorabilityReport {
  std::uint64_t checked = 0; // quandles tested
  std::vector<ColorabilityHit> hits;
};

/*
 * Runs count_colorings against every connected solvable quandle and every
 * latin quandle of order <= max_order from the enumerator (solvability taken
 * from the displacement group) and reports the quandles admitting a
 * non-constant coloring.  max_order is capped at 8.
 */
ColorabilityReport solvable_colorability_check(const LinkDiagram& d, int max_order);

} // namespace raq

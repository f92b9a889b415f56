#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "raq/left_quasigroup.hpp"

namespace raq {

enum class EnumKind { leftquasigroup, rack, quandle, classc };

EnumKind enum_kind_from_string(const std::string& s);
std::string to_string(EnumKind kind);

struct EnumFilters {
  bool latin = false;
  bool connected = false;
  bool involutory = false;
  bool medial = false;
  bool faithful = false;
  bool not_rack = false;
};

struct EnumSpec {
  int order = 1;
  EnumKind kind = EnumKind::rack;
  EnumFilters filters;
  bool count_only = false;
};

/*
 * Isomorph-free exhaustive generation.  Tables are filled cell by cell in
 * row-major order; rows are permutations, the kind's identities (left
 * self-distributivity, idempotence, the class-C law) are propagated as
 * whole-row forcings as soon as both argument rows are complete, and the
 * latin and involutory filters are enforced during the search.  A partial
 * relabeling test prunes prefixes that some permutation already makes
 * lexicographically smaller; each completed table is accepted only if it is
 * its own canonical form, so exactly one representative per isomorphism
 * class is emitted, in canonical-table lexicographic order.  connected,
 * medial, faithful and not_rack are decided on the finished table.
 *
 * Size tiers: order <= 8 for rack, quandle and classC; order <= 6 for latin
 * left quasigroups; order <= 4 for unrestricted left quasigroups.  Returns
 * the number of classes emitted; the sink is not called when count_only is
 * set.
 */
std::uint64_t enumerate(const EnumSpec& spec,
                        const std::function<void(const LeftQuasigroup&)>& sink = {});

// Counts per order, same kind and filters throughout.
std::vector<std::uint64_t> census(const std::vector<int>& orders, EnumKind kind,
                                  const EnumFilters& filters);

} // namespace raq

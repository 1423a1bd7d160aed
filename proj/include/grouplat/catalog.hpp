#pragma once

#include <string>
#include <utility>
#include <vector>

#include "grouplat/group.hpp"

namespace grouplat {

// Spec-string grammar:
//   cyclic:N            dihedral:2N (even, >= 4)
//   symmetric:N         alternating:N (N >= 3)
//   product:SPEC,SPEC   (nests)
//   semidirect:N:M:K    cyclic C_N acted on by C_M via x -> x^K
//   semidirect:a4       V4 x| C3 (3-cycle on the involutions)
//   semidirect:sl23     Q8 x| C3 (order-3 rotation of i,j,k)
//   file:PATH           generator file (whole rest of the spec)
GroupTable build_group_spec(const std::string& spec, const GroupCaps& caps = {});

GroupTable dihedral_group(int order, const GroupCaps& caps = {});
GroupTable symmetric_group(int n, const GroupCaps& caps = {});
GroupTable alternating_group(int n, const GroupCaps& caps = {});
GroupTable cyclic_semidirect(int n, int m, int k, const GroupCaps& caps = {});
GroupTable quaternion_group();  // Q8 from its regular permutation action

// Generator file format: first line "degree N"; each following line one
// permutation as N space-separated 1-based images; '#' starts a comment.
// Errors carry the offending line number.
std::pair<int, std::vector<Permutation>> parse_generator_text(const std::string& text);
std::pair<int, std::vector<Permutation>> parse_generator_file(const std::string& path);

// The built-in scan catalog: cyclic groups up to max_order, dihedral groups
// up to max_dihedral, small symmetric/alternating groups, the named
// semidirect constructions, and all pairwise direct products fitting under
// max_order. Deterministic order.
std::vector<std::string> builtin_catalog(int max_order = 60, int max_dihedral = 200);

}  // namespace grouplat

#pragma once

#include <cmath>

namespace p6mwis::bounds {

// Upper bounds on family sizes, evaluated in long double to avoid overflow.
inline long double pw(long double n, int k) { return std::pow(n, static_cast<long double>(k)); }

inline long double two_not_whole(int n) { return pw(n, 8); }
inline long double one_in_three(int n) { return 2 * pw(n, 9); }
inline long double nonmesh_sticking(int n, std::size_t x) { return n + 2 * pw(n, 4) * x; }
inline long double nonmesh_pair(int n) { return 2 * pw(n, 3); }
inline long double mesh_fuzzy_nonmesh(int n) { return pw(n, 4); }
inline long double mesh_fuzzy_sticking(int n, std::size_t x) { return pw(n, 3) * x; }
inline long double monster(int n, std::size_t x) { return 11 * pw(n, 12) * pw(x, 3); }
inline long double omplus(int n) { return 5 * pw(n, 9); }
inline long double f_complete(int n, std::size_t x) { return pw(n, 2) * x; }
inline long double recover_union(int n, std::size_t x) { return static_cast<long double>(n) * x; }
inline long double recover_components(int n, std::size_t x) { return 3 * pw(n, 6) * pw(x, 3); }
inline long double hidden_separators(int n) { return pw(n, 7); }

}  // namespace p6mwis::bounds

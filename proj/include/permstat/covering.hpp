#ifndef PERMSTAT_COVERING_HPP
#define PERMSTAT_COVERING_HPP

#include <vector>

#include "permstat/canonical.hpp"
#include "permstat/permutation.hpp"

namespace permstat {

/// f_q on canonical words: erase the letters s_1..s_{q-1} and shift the rest
/// down by q-1. The image of a run-encoded factor is again run-encoded, so
/// the result is canonical without re-normalization.
CanonicalWord map_word(const CanonicalWord& w, int q);

/// The covering map f_q : S_m -> S_{m-q+1}. Requires degree(p) >= q.
Permutation f_q(const Permutation& p, int q);

/// One fiber of f_q: all preimages of base in S_{degree(base)+q-1},
/// sorted lexicographically. Member count is q! * q^{del_1(base)}.
struct FiberIndex {
  Permutation base;
  int q = 1;
  std::vector<Permutation> members;
};

enum class FiberMethod {
  kScan,    // sweep the ambient group and keep matches
  kSplice,  // build each member word from the base word
};

FiberIndex fiber(const Permutation& base, int q, FiberMethod method = FiberMethod::kScan);

/// True iff f_{q1}(f_{q2}(p)) == f_{q1+q2-1}(p) for every p in S_m.
bool compose_maps_check(int q1, int q2, int m);

}  // namespace permstat

#endif  // PERMSTAT_COVERING_HPP

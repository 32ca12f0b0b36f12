#ifndef GSEMBED_ORACLE_HPP_
#define GSEMBED_ORACLE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "gsembed/embed.hpp"
#include "gsembed/gset.hpp"
#include "gsembed/hset.hpp"

namespace gsembed {

/// One sub-G-set of a power object: a union of orbits, with the inclusion
/// into the ambient point list.
struct SubGSet {
  GSet gset;
  std::vector<int> points;  // ambient point indices, ascending
};

/// All 2^[number of orbits] unions of orbits of Y, in ascending orbit-mask
/// order.  Guarded by the orbit count.
std::vector<SubGSet> enumerate_sub_gsets(const GSet& y, int max_orbits = 20);

struct OracleFound {
  int level = 0;
  std::vector<int> sub_points;   // point indices into P^level(M)
  std::vector<HSet> sub_values;  // the HSets those points carry
  IsoWitness witness;            // X point -> index into sub_points
};

/// Outcome of the exhaustive search at one level.
enum class LevelStatus { kExhaustive, kInconclusive };

/// Result of exhaustive subobject search in explicit power objects.  A
/// level whose enumeration was blocked by a guard is inconclusive, never a
/// "no": embeddings may first appear at higher levels than the search
/// reaches.
struct OracleReport {
  std::vector<int> searched_levels;
  std::vector<LevelStatus> status;  // aligned with searched_levels
  std::optional<OracleFound> found;

  bool exhaustive_no() const;
};

/// For each n = 1..max_level, builds P^n(M) explicitly and tests every
/// sub-G-set for isomorphism with X.  Reports the first hit in canonical
/// order (ascending level, then ascending orbit mask).
OracleReport subobject_search(const GSet& x, const GSet& m, int max_level);

/// Cross-check record for both directions of the theorem on one instance.
struct TheoremCheck {
  bool cond2 = false;
  OracleReport oracle;
  bool oracle_found = false;
  bool direction_a = false;  // oracle found  =>  cond2 (must always hold)
  bool direction_b = false;  // cond2  =>  embed certificate verifies
};

TheoremCheck theorem_check(const GSet& x, const GSet& m, int max_level);

/// Number of Sym(M-points)-orbits on the HSets of one level, counted two
/// ways that must agree: by direct enumeration and by the Burnside average
/// of fixed points.
struct SymOrbitCount {
  long long by_enumeration = 0;
  long long by_burnside = 0;
};

SymOrbitCount count_sym_orbits(const GSet& m, int level);

}  // namespace gsembed

#endif  // GSEMBED_ORACLE_HPP_

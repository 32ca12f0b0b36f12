#ifndef GSEMBED_HSET_HPP_
#define GSEMBED_HSET_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gsembed/gset.hpp"

namespace gsembed {

/// A hereditarily finite set over the atoms of M, always in canonical form:
/// members are pairwise distinct and sorted by the canonical order below, so
/// structural equality coincides with extensional equality.
///
/// Canonical member order: atoms precede sets; atoms are ordered by index;
/// sets are ordered by serialization length, then by lexicographic byte
/// order of the serialization.  The serialization is "A<i>" for atom i and
/// "{m1,m2,...}" for a set, members in canonical order.
///
/// An HSet is an element of M_n = P^n(M) whenever has_level(h, n) holds.
/// The level is a predicate rather than a stored field: the empty set
/// inhabits every level >= 1.
class HSet {
 public:
  /// Default-constructs the empty set.
  HSet() : ser_("{}") {}

  static HSet atom(int index);
  /// Canonicalizing constructor: deduplicates and sorts.  Members may be
  /// given in any order and with repetitions.
  static HSet set(std::vector<HSet> members);
  static const HSet& empty_set();

  bool is_atom() const { return atom_ >= 0; }
  int atom_index() const { return atom_; }
  const std::vector<HSet>& members() const { return members_; }

  /// Canonical text form; injective on canonical HSets.
  const std::string& serialization() const { return ser_; }

  bool contains(const HSet& member) const;

  bool operator==(const HSet& other) const { return ser_ == other.ser_; }
  bool operator!=(const HSet& other) const { return ser_ != other.ser_; }
  /// The canonical order.
  bool operator<(const HSet& other) const;

 private:
  int atom_ = -1;                // >= 0 for atoms
  std::vector<HSet> members_;   // canonical order, distinct
  std::string ser_;
};

/// True iff h is typeable as an element of M_n: atoms only at n = 0, a set
/// at n >= 1 exactly when every member is typeable at n - 1.
bool has_level(const HSet& h, int n);

/// Relabels every atom i as f[i] and renormalizes.  f must be a bijection
/// on the atoms h is built over.
HSet apply_bijection(const HSet& h, const Perm& f);

/// The G-action on hereditarily finite sets induced by M's action on atoms.
HSet act(int g, const HSet& h, const GSet& m);

/// Kuratowski pair {{a},{a,b}}; raises a common level by exactly 2.
HSet kuratowski_pair(const HSet& a, const HSet& b);

/// k-fold singleton {...{h}...}; raises the level by exactly k.
HSet wrap_singletons(const HSet& h, int k);

std::string canonical_serialize(const HSet& h);

/// Inverse of canonical_serialize; rejects malformed text.
HSet parse_hset(const std::string& text);

/// A G-set whose points carry HSet values, all at one level.
struct PowerGSet {
  GSet gset;
  std::vector<HSet> points;  // point i carries points[i]
  int level = 0;

  std::optional<int> index_of(const HSet& h) const;
};

/// M itself as the level-0 power object: point i carries atom i.
PowerGSet base_power(const GSet& m);

/// The explicit power object P(Y): one point per subset of Y's points, the
/// action elementwise.  Points are ordered by subset bitmask over Y's point
/// order.  Guarded: refuses when 2^|Y| would exceed max_points.
PowerGSet power_object(const PowerGSet& y, int max_points = 1 << 16);

constexpr int kPowerGuard = 1 << 16;

/// All HSets typeable at `level` over m atoms, in bitmask order of the
/// construction (level 0: atoms; level L: subsets of the level L-1 list).
/// Guarded by the same point limit as power_object.
std::vector<HSet> level_universe(int m, int level,
                                 int max_points = kPowerGuard);

/// Lazy stream of all HSets typeable at a fixed level over m atoms, in
/// canonical enumeration order: serialization shortlex (length, then byte
/// order).  The stream is consumed front to back and memoizes what it has
/// produced; universes too large to materialize are fine as long as only an
/// initial segment is pulled.
class LevelEnumerator {
 public:
  LevelEnumerator(int m, int level);
  ~LevelEnumerator();
  LevelEnumerator(LevelEnumerator&&) noexcept;
  LevelEnumerator& operator=(LevelEnumerator&&) noexcept;

  /// i-th element of the stream, or nullopt when the universe is exhausted.
  std::optional<HSet> at(std::size_t i);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace gsembed

#endif  // GSEMBED_HSET_HPP_

#ifndef GSEMBED_EMBED_HPP_
#define GSEMBED_EMBED_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gsembed/gset.hpp"
#include "gsembed/hset.hpp"
#include "gsembed/tower.hpp"

namespace gsembed {

// Size guards.  Exceeding one raises capacity_error, never a wrong answer.
constexpr int kMaxAtomsForBijections = 8;   // |M|! enumerations
constexpr int kMaxGroupOrder = 24;
constexpr int kMaxXPoints = 64;

/// A well-order of M's points: position gamma holds the gamma-th point.
struct WellOrder {
  std::vector<int> positions;

  static WellOrder identity(int m);
};

/// Report of the theorem's two conditions for finite instances.  The
/// cardinality condition card X < sup{card M, card P(M), ...} holds for
/// every finite X because the tower of cardinalities is unbounded, so it is
/// reported as satisfied with a note; the kernel condition G_M <= G_X is
/// computed.
struct ConditionReport {
  bool cond1 = true;
  std::string cond1_note;
  bool cond2 = false;
  Subgroup g_m;
  Subgroup g_x;
};

ConditionReport check_conditions(const GSet& m, const GSet& x);

/// z = { {m_gamma : gamma < beta} : beta <= alpha }: the set of initial
/// segments of the well-order, from the empty segment up to all of M.
/// An element of M_2 with |M| + 1 members and stabilizer exactly G_M.
HSet chain_element(const GSet& m, const WellOrder& ord);

/// {g : g h = h} under the induced action on hereditarily finite sets.
Subgroup stabilizer_of_hset(const GSet& m, const HSet& h);

/// Hz = {h z : h in H}, an element of M_3 with stabilizer exactly H.
/// Requires G_M <= H.
HSet coset_tag(const GSet& m, const Subgroup& h, const HSet& z);

/// The orbit of Hz inside M_3 with its induced action, together with the
/// isomorphism gH -> gHz from the coset space G/H.
std::pair<PowerGSet, IsoWitness> transitive_embed(const GSet& m,
                                                  const Subgroup& h);

/// The equivalence class [w] = {f w : f in Bij(M-points)} as an HSet one
/// level above w.  The class is invariant under the whole G-action.
HSet bij_orbit_class(const GSet& m, const HSet& w, int level);

/// The first k pairwise Sym(M)-inequivalent HSets of the given level, in
/// canonical enumeration order.  An element is kept exactly when it is the
/// minimum of its Sym(M)-orbit, so the result is deterministic.
std::vector<HSet> distinct_class_reps(const GSet& m, int k, int level);

/// <{...{x}...}, [w]> with n-1 singleton wraps; one tagged point of the
/// copy X_w of M_3 inside M_{n+4}.  Requires n >= 1, x at level 3 and
/// w_class at level n+2.
HSet tagged_copy(const HSet& x, const HSet& w_class, int n);

/// Per-orbit construction record kept inside a certificate.
struct OrbitPlan {
  int base = 0;             // minimal point of the orbit of X
  std::vector<int> h;       // stabilizer members of the base point
  HSet w;                   // class representative, level n+1
  HSet w_class;             // [w], level n+2
};

/// An explicit equivariant injection of X into M_{target_level}, plus the
/// parameters it was constructed from.  verify_certificate re-checks
/// everything independently of how the certificate was produced.
struct EmbeddingCertificate {
  int target_level = 1;
  int n = 0;
  HSet z;
  std::vector<OrbitPlan> orbit_plan;
  std::vector<HSet> map;  // image of each point of X
};

/// The constructive sufficiency proof: decomposes X into orbits, picks a
/// level n with c_n >= #orbits, tags each orbit's copy of M_3 with a
/// distinct bijection class, and assembles the injection into M_{n+4}.
/// Empty X yields the empty subobject of M_1.  Throws necessity_error when
/// G_M is not contained in G_X.
EmbeddingCertificate embed(const GSet& m, const GSet& x);

struct VerifyCheck {
  std::string name;
  bool pass = false;
  std::string detail;  // first counterexample when failing
};

struct VerifyReport {
  bool pass = false;
  std::vector<VerifyCheck> checks;

  std::string first_failure() const;
};

/// Independent re-validation of a certificate: image levels, injectivity,
/// equivariance, and consistency of the construction parameters
/// (Stab(z) = G_M, Stab(Hz) = H per orbit, classes pairwise distinct and
/// G-invariant).  All failures are report content.
VerifyReport verify_certificate(const GSet& m, const GSet& x,
                                const EmbeddingCertificate& cert);

}  // namespace gsembed

#endif  // GSEMBED_EMBED_HPP_

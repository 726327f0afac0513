#pragma once

// Weak factorization systems (WFS) on finite categories, plus bounded checks
// on the concrete category of finite sets.
//
// A WFS is a pair of morphism families (L, R) such that L = llp(R),
// R = rlp(L), and every morphism factors as (member of R) ∘ (member of L).
// On a finite category all three axioms are decided exactly.  On FinSet the
// closure axioms are quantified over all maps between sets of size ≤ bound
// and reported as bounded verdicts; the factorization axiom is witnessed by
// explicit factorizations whose middle object may be as large as twice the
// bound (the canonical route X → X⊔Y → Y needs |X|+|Y| elements).

#include <finhom/fincat.hpp>
#include <finhom/lifting.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace finhom {

// How a verdict was established: exact verdicts quantify over the whole
// (finite) category; bounded verdicts quantify over a size-capped fragment
// of an infinite concrete category and are never global proofs.
struct VerificationRecord {
  bool exact = true;
  int bound = -1;  // size cap used for bounded verdicts, -1 when exact
};

struct WeakFactorizationSystem {
  MorphismFamily left;
  MorphismFamily right;
  VerificationRecord record;

  bool operator==(const WeakFactorizationSystem& other) const {
    return left == other.left && right == other.right;
  }
};

// First failure found when checking the WFS axioms.
//
//   LeftClosure    left family differs from llp(right); `morphism` is the
//                  first id (ascending) on which they disagree, or a member
//                  of the left family that fails to lift against a member of
//                  the right family (retract-style check).
//   RightClosure   dually for the right family and rlp(left).
//   Factorization  `morphism` admits no factorization right ∘ left.
//   LeftRetract    left family is not closed under retracts; `retract` is
//                  (missing morphism, family member it is a retract of).
//   RightRetract   dually for the right family.
struct WfsViolation {
  enum class Kind { LeftClosure, RightClosure, Factorization, LeftRetract, RightRetract };
  Kind kind;
  int morphism = -1;
  std::pair<int, int> retract{-1, -1};
};

struct WfsCheck {
  bool ok = false;
  VerificationRecord record;
  std::optional<WfsViolation> violation;
};

// Decides whether (L, R) is a WFS on C by the defining conditions:
// L = llp(R), R = rlp(L), and every morphism factors.  Exact.
// Checks run in that order and the first failure is reported.
// Note: L ∩ R can be larger than the isomorphisms; no such condition is
// (or should be) checked.
WfsCheck verify_wfs(const FiniteCategory& C, const MorphismFamily& L,
                    const MorphismFamily& R);

// Decides the same property through the retract characterization: every
// member of L lifts against every member of R, every morphism factors, and
// both families are closed under retracts.  Always agrees with verify_wfs
// on the overall verdict; the reported violation may differ.
WfsCheck verify_wfs_via_retracts(const FiniteCategory& C, const MorphismFamily& L,
                                 const MorphismFamily& R);

// Result of generating a WFS from a set of generating morphisms.
struct GenerateWfsResult {
  std::optional<WeakFactorizationSystem> wfs;
  std::optional<WfsViolation> violation;

  bool ok() const { return wfs.has_value(); }
};

// Builds R = rlp(generators), L = llp(R) and verifies the pair.  The closure
// conditions hold by construction; factorization can genuinely fail because
// finite categories are not cocomplete, in which case the violation records
// the unfactorable morphism.  Throws std::invalid_argument on a bad
// generator id.
GenerateWfsResult generate_wfs(const FiniteCategory& C,
                               const std::vector<int>& generators);

// Enumeration refuses categories with more than this many morphisms.
inline constexpr int kMaxEnumerableMorphisms = 16;

struct SearchSpaceTooLarge : std::runtime_error {
  int morphism_count;

  explicit SearchSpaceTooLarge(int count)
      : std::runtime_error("enumeration supports at most " +
                           std::to_string(kMaxEnumerableMorphisms) +
                           " morphisms, category has " + std::to_string(count)),
        morphism_count(count) {}
};

// Raised by operations that are only meaningful on finite categories when
// invoked on a bounded concrete category.
struct Unsupported : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Enumerates every WFS on C.  Candidate left families (subsets of the
// morphism set) are pruned in stages: must contain all isomorphisms, must be
// closed under composition, must be stable under llp ∘ rlp; survivors are
// then checked for factorization and re-verified.  The result is sorted by
// a linear extension of left-family inclusion (size, then id order), so the
// minimum WFS (Iso, All) comes first and the maximum (All, Iso) last when
// they exist.  `jobs` > 1 splits the candidate space across that many
// threads; the result is identical for every job count.
// Throws SearchSpaceTooLarge when C has more than kMaxEnumerableMorphisms
// morphisms.
std::vector<WeakFactorizationSystem> enumerate_wfs(const FiniteCategory& C,
                                                   int jobs = 1);

// WFS enumeration requires a finite ambient category; on bounded FinSet the
// candidate space is not finite.  Always throws Unsupported.
[[noreturn]] void enumerate_wfs_finset(int bound);

// Order on WFSs over one category: a ≤ b iff left(a) ⊆ left(b), equivalently
// right(a) ⊇ right(b).  Both characterizations are computed; a mismatch
// means the inputs were not genuine WFSs over the same category and raises
// std::logic_error.
bool wfs_leq(const WeakFactorizationSystem& a, const WeakFactorizationSystem& b);

// Bounded FinSet counterpart of WfsCheck; witnesses are concrete maps.
struct FsWfsViolation {
  WfsViolation::Kind kind;
  std::optional<FinSetMor> morphism;
  std::optional<std::pair<FinSetMor, FinSetMor>> retract;
};

struct FsWfsCheck {
  bool ok = false;
  VerificationRecord record;  // exact = false, bound set
  std::optional<FsWfsViolation> violation;
};

// Bounded verification that (L, R) is a WFS on FinSet.  Closure is checked
// for every map between sets of size ≤ bound; factorization of each such map
// f : X → Y first tries the canonical candidates (X → X⊔Y → Y, id-then-f,
// f-then-id) and then falls back to enumerating factorizations through
// middle objects of size ≤ 2·bound.  The verdict is marked bounded.
FsWfsCheck verify_wfs_finset(const FinSetFamily& L, const FinSetFamily& R,
                             int bound);

// Whether f factors as (member of R) ∘ (member of L): the factorization
// search used by verify_wfs_finset, with the same candidate order.
bool fs_factors_through(const FinSetFamily& L, const FinSetFamily& R,
                        const FinSetMor& f, int bound);

}  // namespace finhom

#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "finhom/concrete.hpp"
#include "finhom/fincat.hpp"

namespace finhom {

// ---------------------------------------------------------------------------
// Morphism families in a finite category.
// ---------------------------------------------------------------------------

struct MorphismFamily {
  const FiniteCategory* cat = nullptr;
  std::vector<bool> member;

  bool contains(int m) const { return member[m]; }
  int size() const;
  std::vector<int> ids() const;  // sorted member list
  bool operator==(const MorphismFamily& o) const {
    return member == o.member;
  }
};

MorphismFamily family_from_ids(const FiniteCategory& C,
                               const std::vector<int>& ids);
MorphismFamily family_all(const FiniteCategory& C);
MorphismFamily family_isos(const FiniteCategory& C);
MorphismFamily family_identities(const FiniteCategory& C);

// ---------------------------------------------------------------------------
// Lifting in a finite category.
// ---------------------------------------------------------------------------

struct LiftWitness {
  int i, p, top, bottom;
  bool liftable = false;
  std::optional<int> filler;  // first filler in morphism-id order
};

// The square must commute (p ∘ top = bottom ∘ i); otherwise throws
// std::invalid_argument.
LiftWitness has_lift(const FiniteCategory& C, int i, int p, int top,
                     int bottom);
// True iff every commuting square from i to p has a filler.
bool lifts_against(const FiniteCategory& C, int i, int p);

MorphismFamily llp(const MorphismFamily& R);
MorphismFamily rlp(const MorphismFamily& L);

// Retract in the arrow category: four connecting morphisms, both horizontal
// composites identities, both squares commuting.
bool is_retract_of(const FiniteCategory& C, int f, int g);
// First (f, g) in id order with g a member, f a retract of g, f not a member;
// nullopt when the family is retract-closed.
std::optional<std::pair<int, int>> retract_closed(const MorphismFamily& F);

// First violating triple (f, g, g∘f) with exactly two members, scanning f
// then g in id order; nullopt when two-out-of-three holds.
std::optional<std::array<int, 3>> two_out_of_three(const MorphismFamily& W);
// First violating quadruple (f, g, h, culprit) where g∘f and h∘g are members
// but `culprit` (one of f, g, h, h∘g∘f) is not.
std::optional<std::array<int, 4>> two_out_of_six(const MorphismFamily& W);

bool composition_closed(const MorphismFamily& F);
bool contains_isos(const MorphismFamily& F);

// ---------------------------------------------------------------------------
// Bounded lifting in the category of finite sets.
// ---------------------------------------------------------------------------

struct FinSetFamily {
  enum class Tag { Mono, Epi, Iso, All, Explicit };
  Tag tag = Tag::Explicit;
  std::vector<FinSetMor> list;  // used when tag == Explicit
};

bool fs_member(const FinSetFamily& F, const FinSetMor& m);

struct FsLiftWitness {
  FinSetMor i, p, top, bottom;
  bool liftable = false;
  std::optional<FinSetMor> filler;  // first filler in table-lex order
};

FsLiftWitness fs_has_lift(const FinSetMor& i, const FinSetMor& p,
                          const FinSetMor& top, const FinSetMor& bottom);
// Exact for all squares between the given morphisms (closed form; no bound).
bool fs_lifts_against(const FinSetMor& i, const FinSetMor& p);

// Verdicts quantified over a morphism class carry `bounded = true` when the
// class was sampled only up to the size bound (tag families); explicit lists
// are checked exactly.
struct BoundedBool {
  bool value = false;
  bool bounded = false;
};

BoundedBool fs_in_llp(const FinSetMor& i, const FinSetFamily& R, int bound);
BoundedBool fs_in_rlp(const FinSetMor& p, const FinSetFamily& L, int bound);

bool fs_is_retract_of(const FinSetMor& f, const FinSetMor& g);
std::optional<std::pair<FinSetMor, FinSetMor>> fs_retract_closed(
    const FinSetFamily& F, int bound);

// Scans (|a|, |b|, |c|) lexicographically, then f, g tables
// lexicographically; first violation returned.
std::optional<std::array<FinSetMor, 3>> fs_two_out_of_three(
    const FinSetFamily& W, int bound);
std::optional<std::array<FinSetMor, 4>> fs_two_out_of_six(
    const FinSetFamily& W, int bound);

bool fs_composition_closed(const FinSetFamily& F, int bound);
bool fs_contains_isos(const FinSetFamily& F, int bound);

// All morphisms between sets of size <= bound, ordered by (|src|, |dst|),
// then table-lexicographically. Shared by the bounded class scans.
std::vector<FinSetMor> fs_all_morphisms(int bound);

}  // namespace finhom

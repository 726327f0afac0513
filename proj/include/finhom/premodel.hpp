#pragma once

// Premodel and model structures on finite categories, the poset of model
// structures with meet search, the no-meets counterexample pipeline,
// structure transfer along adjunctions, products, cylinder search, and the
// anodyne-composite criterion for trivial cofibrations; bounded counterparts
// on the category of finite sets.
//
// A premodel structure is a pair of weak factorization systems (C, AF) and
// (AC, F) on one category with AC ⊆ C (equivalently AF ⊆ F).  A model
// structure is a premodel structure whose weak equivalences
// W = {f : f = a∘b with b ∈ AC, a ∈ AF} satisfy two-out-of-three and cut
// out AC = C∩W and AF = F∩W.

#include <finhom/wfs.hpp>

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace finhom {

struct PremodelStructure {
  const FiniteCategory* cat = nullptr;
  MorphismFamily cof;   // C
  MorphismFamily acof;  // AC
  MorphismFamily fib;   // F
  MorphismFamily afib;  // AF

  WeakFactorizationSystem cof_afib() const {
    return {cof, afib, VerificationRecord{true, -1}};
  }
  WeakFactorizationSystem acof_fib() const {
    return {acof, fib, VerificationRecord{true, -1}};
  }
  bool operator==(const PremodelStructure& o) const {
    return cof == o.cof && acof == o.acof && fib == o.fib && afib == o.afib;
  }
};

// Which requirement failed: one of the two constituent WFS pairs (with the
// underlying WFS violation) or the nesting condition AC ⊆ C / AF ⊆ F (with
// the first morphism violating the inclusion).
struct PremodelViolation {
  enum class Part { CofAfibPair, AcofFibPair, Nesting };
  Part part;
  std::optional<WfsViolation> wfs;
  int morphism = -1;
};

struct PremodelCheck {
  std::optional<PremodelStructure> structure;
  std::optional<PremodelViolation> violation;

  bool ok() const { return structure.has_value(); }
};

// Verifies (C, AF) and (AC, F) as WFSs, then the nesting AC ⊆ C.  The
// equivalent characterization AF ⊆ F is computed as well; for verified WFS
// pairs the two must agree, and a mismatch raises std::logic_error.
PremodelCheck verify_premodel(const FiniteCategory& C, const MorphismFamily& cof,
                              const MorphismFamily& acof,
                              const MorphismFamily& fib,
                              const MorphismFamily& afib);

// W = all morphisms factoring as (anodyne fibration) ∘ (anodyne
// cofibration); exhaustive scan over middle objects.
MorphismFamily weq_class(const PremodelStructure& pm);

struct ModelStructure {
  PremodelStructure premodel;
  MorphismFamily weq;

  bool operator==(const ModelStructure& o) const {
    return premodel == o.premodel && weq == o.weq;
  }
};

// TwoOutOfThree carries (f, g, g∘f) with exactly two in W; ClassIdentity
// carries the first morphism violating AC = C∩W (cls = "acof") or
// AF = F∩W (cls = "afib").
struct ModelViolation {
  enum class Kind { TwoOutOfThree, ClassIdentity };
  Kind kind;
  std::array<int, 3> triple{-1, -1, -1};
  std::string cls;
  int morphism = -1;
};

struct ModelCheck {
  std::optional<ModelStructure> model;
  std::optional<ModelViolation> violation;

  bool ok() const { return model.has_value(); }
};

// Builds W, checks two-out-of-three, then the class identities.
ModelCheck is_model(const PremodelStructure& pm);

// All premodel structures on C: ordered pairs (w1 ≤ w2) of enumerated WFSs
// with (AC, F) = w1 and (C, AF) = w2, in lexicographic (w1, w2) index order.
// Model structures are the premodel structures accepted by is_model, in the
// same order.  Both throw SearchSpaceTooLarge via enumerate_wfs.
std::vector<PremodelStructure> enumerate_premodel(const FiniteCategory& C,
                                                  int jobs = 1);
std::vector<ModelStructure> enumerate_model(const FiniteCategory& C,
                                            int jobs = 1);

// Model structures ordered by inclusion of cofibrations and anodyne
// cofibrations: a ≤ b iff C_a ⊆ C_b and AC_a ⊆ AC_b.
struct StructurePoset {
  std::vector<ModelStructure> structures;
  std::vector<std::vector<bool>> leq;
};

// Throws std::invalid_argument when the structures do not share an ambient
// category or the order fails antisymmetry (duplicate structures).
StructurePoset model_poset(std::vector<ModelStructure> structures);

// Meet = maximum of the common lower bounds when it exists; otherwise the
// witness is the set of maximal common lower bounds (indices into the
// poset), in index order.
struct MeetResult {
  std::optional<int> meet;
  std::vector<int> maximal_lower_bounds;

  bool found() const { return meet.has_value(); }
};

MeetResult poset_meet(const StructurePoset& poset, int a, int b);

// Five-stage counterexample pipeline.  On the 2×2 Boolean lattice (detected
// up to object relabeling): (1) transcribe the four reference structures,
// (2) verify each is a model structure, (3) check the four identity functors
// from the meet candidates to the designated pair are left Quillen,
// (4) enumerate all model structures, (5) show the designated pair has no
// meet and record its maximal lower bounds.  On other categories stages 1-3
// are vacuous and stage 5 reports whether every pair of model structures has
// a meet.  The first failing stage aborts the pipeline.
struct NoMeetsReport {
  struct Stage {
    std::string name;
    bool ok = false;
    std::string detail;
  };

  std::vector<Stage> stages;
  bool ok = false;
  int failed_stage = -1;  // 1-based, -1 when every stage passed
  bool is_square = false;

  std::vector<ModelStructure> corner_structures;  // transcription (square)
  int model_count = -1;
  StructurePoset poset;
  bool all_pairs_have_meets = true;
  std::array<int, 2> designated_pair{-1, -1};  // indices into the poset
  bool designated_pair_has_meet = true;
  std::vector<int> designated_maximal_lower_bounds;
};

NoMeetsReport verify_no_meets(const FiniteCategory& C);

struct TransferResult {
  std::optional<PremodelStructure> structure;
  std::optional<PremodelViolation> violation;

  bool ok() const { return structure.has_value(); }
};

// Right-induced structure along F ⊣ G with pm on the source of F: on the
// target of F, fibrations and anodyne fibrations are the G-preimages, the
// cofibration classes are their lifting complements, and the candidate is
// re-verified.  Failure (typically factorization) is a legitimate outcome on
// finite categories.  Throws std::invalid_argument when the adjunction does
// not verify or pm lives on the wrong category.
TransferResult transfer_right_induced(const Adjunction& adj,
                                      const PremodelStructure& pm);

// Dual: pm on the target of F; cofibration classes on the source of F are
// the F-preimages, fibration classes their lifting complements.
TransferResult transfer_left_induced(const Adjunction& adj,
                                     const PremodelStructure& pm);

// Componentwise product structure.  The result owns any product categories
// it had to build; with a single factor the input is returned unchanged.
// The product is re-verified and a failure raises std::logic_error.
struct ProductStructureResult {
  std::vector<std::shared_ptr<const FiniteCategory>> owned;
  PremodelStructure structure;
};

ProductStructureResult product_structure(
    const std::vector<PremodelStructure>& factors);

// An anodyne cylinder on object a: a factorization a⊔a → c → a of the fold
// map with the inclusion a cofibration whose two composites with the
// coproduct injections are anodyne cofibrations.  Requires an initial
// object (to test cofibrancy of a) and a coproduct a⊔a; missing
// preconditions raise std::invalid_argument.  NotFound is a legitimate
// outcome.
struct CylinderResult {
  bool found = false;
  int object = -1;     // c
  int include = -1;    // i : a⊔a → c
  int project = -1;    // q : c → a
};

CylinderResult find_anodyne_cylinder(const PremodelStructure& pm, int a);

// Whether some anodyne cofibration g out of the target of f makes g∘f
// anodyne.  Preconditions (f a cofibration with cofibrant source) raise
// std::invalid_argument.
bool trivial_cof_by_criterion(const PremodelStructure& pm, int f);

// ---------------------------------------------------------------------------
// Bounded counterparts on the category of finite sets.
// ---------------------------------------------------------------------------

struct FsPremodelStructure {
  FinSetFamily cof, acof, fib, afib;
};

// The standard structure: C = Mono, AC = Iso, F = All, AF = Epi.
FsPremodelStructure finset_premodel();

struct FsPremodelViolation {
  PremodelViolation::Part part;
  std::optional<FsWfsViolation> wfs;
  std::optional<FinSetMor> morphism;  // nesting witness
};

struct FsPremodelCheck {
  bool ok = false;
  VerificationRecord record;
  std::optional<FsPremodelViolation> violation;
};

FsPremodelCheck verify_premodel_finset(const FsPremodelStructure& pm, int bound);

// Whether f factors as (member of AF) ∘ (member of AC); canonical candidates
// first, then middles of size ≤ 2·bound.
bool fs_weq_member(const FsPremodelStructure& pm, const FinSetMor& f, int bound);

struct FsModelViolation {
  ModelViolation::Kind kind;
  std::array<FinSetMor, 3> triple;
  std::string cls;
  std::optional<FinSetMor> morphism;
};

struct FsModelCheck {
  bool ok = false;
  VerificationRecord record;
  std::optional<FsModelViolation> violation;
};

// Builds the bounded weak-equivalence class and runs the model-structure
// checks on it.
FsModelCheck is_model_finset(const FsPremodelStructure& pm, int bound);

struct FsCylinderResult {
  bool found = false;
  FinSetMor include;
  FinSetMor project;
};

// Cylinder search for a set of the given size; middles up to `bound`.
FsCylinderResult find_anodyne_cylinder_finset(const FsPremodelStructure& pm,
                                              int a_size, int bound);

bool fs_trivial_cof_by_criterion(const FsPremodelStructure& pm,
                                 const FinSetMor& f, int bound);

}  // namespace finhom

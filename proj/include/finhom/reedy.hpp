#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "finhom/concrete.hpp"
#include "finhom/fincat.hpp"
#include "finhom/lifting.hpp"
#include "finhom/premodel.hpp"

namespace finhom {

// ---------------------------------------------------------------------------
// Finite Reedy categories.
// ---------------------------------------------------------------------------

// A finite category with a natural-number degree per object and two wide
// subcategory masks: non-identity `plus` morphisms strictly raise degree,
// non-identity `minus` morphisms strictly lower it, and every morphism
// factors uniquely as a minus morphism followed by a plus morphism.
struct ReedyCategory {
  const FiniteCategory* base = nullptr;
  std::vector<int> degree;  // one value per object
  MorphismFamily plus, minus;
};

struct ReedyViolation {
  enum class Kind {
    MissingIdentity,  // plus/minus lacks an identity
    NotClosed,        // plus/minus not closed under composition
    DegreeDirection,  // non-identity member fails to raise resp. lower degree
    Factorization,    // minus-then-plus factorization count != 1
  };
  Kind kind;
  std::string family;                // "plus" or "minus"; empty for Factorization
  int morphism = -1;                 // offending or factored morphism id
  std::pair<int, int> pair{-1, -1};  // (g, f) for NotClosed
  int count = -1;                    // number of factorizations found
};

// Exhaustive check of the Reedy axioms; first violation in the order:
// identity membership, composition closure, degree direction (plus before
// minus throughout), then unique factorization by morphism id.  Malformed
// sizes or negative degrees throw std::invalid_argument.
std::optional<ReedyViolation> verify_reedy(const ReedyCategory& K);

struct MakeReedyResult {
  std::optional<ReedyCategory> reedy;
  int violation = -1;  // first morphism whose degree direction fails
  bool ok() const { return reedy.has_value(); }
};

// Direct structure: plus is everything and minus only the identities, so
// every non-identity morphism must strictly raise degree.  The first
// offending morphism is reported otherwise.
MakeReedyResult make_direct(const FiniteCategory& C,
                            const std::vector<int>& degree);
// Inverse structure: minus is everything and plus only the identities; dual.
MakeReedyResult make_inverse(const FiniteCategory& C,
                             const std::vector<int>& degree);

// True when minus contains only identities.
bool is_direct(const ReedyCategory& K);

// The truncated simplex category of chains [0], ..., [n] for n <= 3.
// Morphisms are all weakly monotone maps, ordered by (src, dst) and then
// lexicographically by value table; degree of [m] is m, plus holds the
// injections and minus the surjections.
struct SimplexTruncation {
  std::shared_ptr<const FiniteCategory> category;
  ReedyCategory reedy;                 // base == category.get()
  std::vector<std::vector<int>> maps;  // underlying monotone map per morphism
};
SimplexTruncation simplex_truncation(int n);

// ---------------------------------------------------------------------------
// Morphisms of set-valued diagrams.
// ---------------------------------------------------------------------------

// Natural transformation between covariant diagrams on the same shape.
struct DiagramMor {
  FinSetDiagram src, dst;
  std::vector<FinSetMor> component;  // one per shape object
};
// Endpoint and naturality checks; first violation as text.
std::optional<std::string> check_diagram_mor(const DiagramMor& f);

// ---------------------------------------------------------------------------
// Latching and matching objects.
// ---------------------------------------------------------------------------

struct LatchingResult {
  std::vector<int> arrows;  // non-identity plus morphisms into k, ascending
  CoconeResult colimit;     // one leg per arrow
  FinSetMor to_level;       // canonical map L_k X -> X_k
};
// L_k X: colimit of X over the non-identity plus morphisms into k, where the
// index morphisms are the plus morphisms commuting over k.
LatchingResult latching(const ReedyCategory& K, const FinSetDiagram& X, int k);

struct MatchingResult {
  std::vector<int> arrows;  // indexing arrows, ascending morphism id
  ConeResult limit;         // one leg per arrow
  FinSetMor from_level;     // canonical map X_k -> M_k X
};
// M_k X: limit of X over the non-identity minus morphisms out of k, computed
// by the dual engine over the dual indexing data.
MatchingResult matching(const ReedyCategory& K, const FinSetDiagram& X, int k);

// Matching object of a presheaf on the base: the limit of X over the
// opposite of the latching index (non-identity plus morphisms into k), so
// that M_k X = Hom(boundary of y k, X).
MatchingResult ps_matching(const ReedyCategory& K, const Presheaf& X, int k);

// Relative latching map  X_k +_{L_k X} L_k Y -> Y_k  of f : X -> Y at k.
FinSetMor relative_latching_map(const ReedyCategory& K, const DiagramMor& f,
                                int k);
// Relative matching map  X_k -> Y_k x_{M_k Y} M_k X  of f at k.
FinSetMor relative_matching_map(const ReedyCategory& K, const DiagramMor& f,
                                int k);
// Relative matching map of a presheaf morphism at k, indexed as in
// ps_matching.
FinSetMor ps_relative_matching_map(const ReedyCategory& K,
                                   const PresheafMor& f, int k);

// ---------------------------------------------------------------------------
// Reedy classes over the bounded finite-set structure.
// ---------------------------------------------------------------------------

struct ReedyClassCheck {
  bool ok = false;
  int witness = -1;        // first object whose relative map leaves the class
  int relative_size = -1;  // size of the latching pushout resp. matching
                           // pullback at the witness
};

// A map of diagrams is a Reedy (anodyne) cofibration when every relative
// latching map lies in cof (acof), and a Reedy (anodyne) fibration when
// every relative matching map lies in fib (afib).  Objects are scanned in
// ascending order and the first failure is reported.
ReedyClassCheck is_reedy_cofibration(const FsPremodelStructure& pm,
                                     const ReedyCategory& K,
                                     const DiagramMor& f);
ReedyClassCheck is_reedy_anodyne_cofibration(const FsPremodelStructure& pm,
                                             const ReedyCategory& K,
                                             const DiagramMor& f);
ReedyClassCheck is_reedy_fibration(const FsPremodelStructure& pm,
                                   const ReedyCategory& K,
                                   const DiagramMor& f);
ReedyClassCheck is_reedy_anodyne_fibration(const FsPremodelStructure& pm,
                                           const ReedyCategory& K,
                                           const DiagramMor& f);

struct ReedyProjReport {
  int checked = 0;
  bool ok = true;
  int first_mismatch = -1;  // sample index where the verdicts differ
};
// On a direct base the Reedy (anodyne) fibrations must coincide with the
// componentwise ones; any mismatch on a sample is reported as a bug in the
// machinery.  Throws std::invalid_argument when the base is not direct.
ReedyProjReport check_reedy_eq_proj(const FsPremodelStructure& pm,
                                    const ReedyCategory& K,
                                    const std::vector<DiagramMor>& samples);

// ---------------------------------------------------------------------------
// Boundary generators.
// ---------------------------------------------------------------------------

// The generating set {d_k box i} in presheaves on the base: for every object
// k (ascending) and every base generator i (input order), the external-tensor
// pushout product of the boundary inclusion d_k with i.
std::vector<PresheafMor> reedy_generators(const ReedyCategory& K,
                                          const std::vector<FinSetMor>& base);

}  // namespace finhom

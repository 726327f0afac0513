#pragma once

// Quillen functors and adjunctions between finite premodel structures, the
// Quillen-bifunctor condition for the cartesian product of finite sets, and
// the lifting-style functor checks (essential surjectivity, extension up to
// isomorphism, extensibility of left Quillen functors).

#include <finhom/premodel.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace finhom {

// Left Quillen: F maps cofibrations to cofibrations and anodyne cofibrations
// to anodyne cofibrations.  On failure, `witness` is the first morphism
// (ascending id) whose image lands outside the required class and `cls`
// names the class ("cof" or "acof").
struct QuillenCheck {
  bool ok = false;
  int witness = -1;
  std::string cls;
};

QuillenCheck is_left_quillen(const Functor& F, const PremodelStructure& pmM,
                             const PremodelStructure& pmN);

// Right Quillen: G preserves fibrations and anodyne fibrations ("fib" /
// "afib" in cls).  G goes from the ambient category of pmN to that of pmM.
QuillenCheck is_right_quillen(const Functor& G, const PremodelStructure& pmN,
                              const PremodelStructure& pmM);

// For a genuine adjunction F ⊣ G the two characterizations — F left Quillen,
// G right Quillen — are equivalent.  Both are computed; the report carries
// both verdicts.  Throws std::invalid_argument when the adjunction or the
// structure endpoints do not verify, and std::logic_error if the two
// verdicts disagree (that would contradict the adjoint transposition of
// lifting problems, hence be an implementation bug).
struct QuillenAdjunctionReport {
  bool left_ok = false;
  bool right_ok = false;
  QuillenCheck left_detail;
  QuillenCheck right_detail;
};

QuillenAdjunctionReport quillen_adjunction_equivalence(
    const Adjunction& adj, const PremodelStructure& pmM,
    const PremodelStructure& pmN);

// Quillen-bifunctor condition for the cartesian product on finite sets,
// checked on generators: every i1 ▫ i2 (pushout product) must be a
// cofibration of pmN, and every mixed product j1 ▫ i2 or i1 ▫ j2 an anodyne
// cofibration.  `which` is "cof" or "acof"; the witness is the failing
// generator pair in scan order (I1×I2, then J1×I2, then I1×J2).
struct BifunctorCheck {
  bool ok = false;
  std::optional<std::pair<FinSetMor, FinSetMor>> witness;
  std::string which;
};

BifunctorCheck is_quillen_bifunctor_on_generators(
    const std::vector<FinSetMor>& I1, const std::vector<FinSetMor>& J1,
    const std::vector<FinSetMor>& I2, const std::vector<FinSetMor>& J2,
    const FsPremodelStructure& pmN);

// Monoidal requirements for (FinSet, ×) over the standard premodel
// structure: the unit {*} is cofibrant, the associator is the identity in
// the chosen product encoding (checked on all morphism triples within the
// sample bound), and the generator pushout products satisfy the bifunctor
// condition.
struct MonoidalReport {
  bool unit_cofibrant = false;
  bool associator_ok = false;
  BifunctorCheck bifunctor;
  bool ok = false;
};

MonoidalReport check_monoidal_finset();

// Whether P is essentially surjective (right lifting against the point
// inclusion into the walking isomorphism, categorically).
bool cat_rlp_essurj(const Functor& P);

// Extension property: for every object x and every g : P(x) → y′ there are
// f : x → x′ and an isomorphism ψ′ : P(x′) → y′ with ψ′ ∘ P(f) = g.
// Witness: first failing (object, morphism) pair in scan order.
struct ExtensionCheck {
  bool ok = false;
  int object = -1;
  int morphism = -1;
};

ExtensionCheck cat_rlp_extension(const Functor& P);

// Extensibility of a left Quillen functor: for every cofibrant object m and
// every cofibration g : F(m) → n′ there are a cofibration f : m → m′ and an
// isomorphism ψ′ : F(m′) → n′ with ψ′ ∘ F(f) = g.  Preconditions (F left
// Quillen, ambient categories with initial objects) raise
// std::invalid_argument.  Witness as in ExtensionCheck.
struct ExtensibleCheck {
  bool ok = false;
  int object = -1;
  int morphism = -1;
};

ExtensibleCheck is_extensible(const Functor& F, const PremodelStructure& pmM,
                              const PremodelStructure& pmN);

}  // namespace finhom

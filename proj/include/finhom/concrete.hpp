#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "finhom/fincat.hpp"

namespace finhom {

// ---------------------------------------------------------------------------
// Finite sets and functions. A set of size n has elements 0..n-1.
// ---------------------------------------------------------------------------

struct FinSetObj {
  int n = 0;
  bool operator==(const FinSetObj&) const = default;
};

struct FinSetMor {
  int src = 0;
  int dst = 0;
  std::vector<int> map;  // map[i] in [0, dst) for each i in [0, src)
  bool operator==(const FinSetMor&) const = default;
};

bool fs_valid(const FinSetMor& m);
FinSetMor fs_identity(int n);
// g after f; throws std::invalid_argument on endpoint mismatch.
FinSetMor fs_compose(const FinSetMor& g, const FinSetMor& f);
bool is_mono(const FinSetMor& m);
bool is_epi(const FinSetMor& m);
bool is_iso(const FinSetMor& m);
// All functions a -> b in lexicographic table order (map[0] most significant).
std::vector<FinSetMor> all_maps(int a, int b);

// ---------------------------------------------------------------------------
// Diagrams of finite sets and their (co)limits.
// ---------------------------------------------------------------------------

// Covariant functor shape -> FinSet: act[m] : at[src(m)] -> at[dst(m)].
struct FinSetDiagram {
  const FiniteCategory* shape = nullptr;
  std::vector<int> at;
  std::vector<FinSetMor> act;
};
// First functoriality violation, as text; nullopt when the diagram is valid.
std::optional<std::string> check_diagram(const FinSetDiagram& D);

struct CoconeResult {
  std::string kind;  // initial | coproduct | coequalizer | pushout | colimit
  FinSetObj apex;
  // Generic colimits: one leg per shape object. Wrappers: one leg per listed
  // input object (see each constructor).
  std::vector<FinSetMor> legs;
};

struct ConeResult {
  std::string kind;  // terminal | product | equalizer | pullback | limit
  FinSetObj apex;
  std::vector<FinSetMor> legs;
};

// Quotient of the disjoint union (objects in shape-object order, elements in
// ascending order) by the relation generated by the diagram's morphisms;
// classes are numbered by first occurrence, so results are deterministic.
CoconeResult fs_colimit(const FinSetDiagram& D);
// Compatible families, enumerated in lexicographic order of the underlying
// tuples (first shape object most significant); legs are the projections.
ConeResult fs_limit(const FinSetDiagram& D);

CoconeResult fs_initial();
CoconeResult fs_coproduct(int a, int b);  // legs: a -> a+b, b -> a+b
// f, g : X ⇉ Y; single leg Y -> Q.
CoconeResult fs_coequalizer(const FinSetMor& f, const FinSetMor& g);
// f : X -> A, g : X -> B; legs: A -> P, B -> P.
CoconeResult fs_pushout(const FinSetMor& f, const FinSetMor& g);
ConeResult fs_terminal();
ConeResult fs_product(int a, int b);  // legs: a*b -> a, a*b -> b
// f, g : X ⇉ Y; single leg E -> X.
ConeResult fs_equalizer(const FinSetMor& f, const FinSetMor& g);
// f : A -> Y, g : B -> Y; legs: P -> A, P -> B.
ConeResult fs_pullback(const FinSetMor& f, const FinSetMor& g);

// ---------------------------------------------------------------------------
// Pushout products.
// ---------------------------------------------------------------------------

// Cartesian pushout product: for f1 : A1 -> B1 and f2 : A2 -> B2, the induced
// map  B1×A2 ⊔_{A1×A2} A1×B2  ->  B1×B2. Pairs (u, v) are encoded as
// u*|second factor| + v.
FinSetMor pushout_product(const FinSetMor& f1, const FinSetMor& f2);

// ---------------------------------------------------------------------------
// Finite-set-valued presheaves on a finite index category.
// ---------------------------------------------------------------------------

// Contravariant: for m : x -> y in *index, act[m] : at[y] -> at[x].
struct Presheaf {
  const FiniteCategory* index = nullptr;
  std::vector<int> at;
  std::vector<FinSetMor> act;
  bool operator==(const Presheaf& o) const {
    return *index == *o.index && at == o.at && act == o.act;
  }
};
std::optional<std::string> check_presheaf(const Presheaf& P);

struct PresheafMor {
  Presheaf src, dst;
  std::vector<FinSetMor> component;  // one per index object
  bool operator==(const PresheafMor&) const = default;
};
// Naturality and endpoint checks; first violation as text.
std::optional<std::string> check_presheaf_mor(const PresheafMor& f);

PresheafMor ps_identity(const Presheaf& X);
PresheafMor ps_compose(const PresheafMor& g, const PresheafMor& f);
bool is_mono(const PresheafMor& f);  // componentwise
bool is_epi(const PresheafMor& f);
bool is_iso(const PresheafMor& f);

Presheaf ps_initial(const FiniteCategory& C);
Presheaf ps_terminal(const FiniteCategory& C);

struct PsPushoutResult {
  Presheaf apex;
  PresheafMor leg_a, leg_b;  // from f's target resp. g's target
};
// f : X -> A, g : X -> B, computed pointwise.
PsPushoutResult ps_pushout(const PresheafMor& f, const PresheafMor& g);

// External tensor S ⊗ A: pointwise product (S ⊗ A)(x) = S(x) × A with pairs
// encoded as s*|A| + a.
Presheaf external_tensor(const Presheaf& S, int a);
// External-tensor pushout product of s : S -> T and f : A -> B:
//   T⊗A ⊔_{S⊗A} S⊗B  ->  T⊗B.
PresheafMor pushout_product(const PresheafMor& s, const FinSetMor& f);

// ---------------------------------------------------------------------------
// Representables and boundaries.
// ---------------------------------------------------------------------------

// y k: (y k)(x) = Hom(x, k), elements indexed by position in the ascending
// hom list; action is precomposition.
Presheaf yoneda(const FiniteCategory& C, int k);

struct BoundaryResult {
  Presheaf boundary;  // ∂(y k) = colim over non-identity plus-maps into k
  PresheafMor d;      // the induced comparison ∂(y k) -> y k
};
// `plus` is a wide-subcategory mask (all identities, composition-closed),
// typically the plus part of a Reedy structure on C.
BoundaryResult boundary(const FiniteCategory& C, const std::vector<bool>& plus,
                        int k);

// ---------------------------------------------------------------------------
// Factorizations.
// ---------------------------------------------------------------------------

// All pairs (h : X -> M, g : M -> Y) with g ∘ h = f and |M| <= bound, in
// ascending order of |M| then lexicographic order of (h, g) tables. The
// callback returns false to stop early. Requires bound >= max(|X|, |Y|)
// (throws std::invalid_argument otherwise).
void enumerate_factorizations(
    const FinSetMor& f, int bound,
    const std::function<bool(const FinSetMor&, const FinSetMor&)>& yield);
std::vector<std::pair<FinSetMor, FinSetMor>> factorizations(const FinSetMor& f,
                                                            int bound);

}  // namespace finhom

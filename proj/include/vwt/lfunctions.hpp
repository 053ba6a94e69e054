#pragma once

#include <map>
#include <optional>
#include <vector>

#include "vwt/cyclo.hpp"
#include "vwt/group.hpp"
#include "vwt/laurent.hpp"
#include "vwt/matrix.hpp"
#include "vwt/voltage.hpp"

namespace vwt {

using RGraph = VertexWeightedGraph<PiRingElement>;
using RMatrix = LabeledMatrix<PiRingElement>;
using CMatrix = LabeledMatrix<CycloElement>;
using CPoly = MPoly<CycloElement>;
using CLaurent = LaurentPoly<CycloElement>;

/// The cyclotomic ring holding all character values of `g`; its exponent
/// must be a power of p.
CycloRing character_ring(const PiField& f, const FiniteAbelianGroup& g);

/// psi(s) = zeta^{sum_i c_i s_i (p^n / m_i)} for the dual vector c.
struct Character {
  FiniteAbelianGroup group;
  GroupElement dual;
  CycloRing ring;

  Character(const PiField& f, FiniteAbelianGroup g, GroupElement c);

  /// Exponent k with psi(s) = zeta^k, 0 <= k < p^n.
  long exponent_at(const GroupElement& s) const;
  CycloElement operator()(const GroupElement& s) const;
  bool is_trivial() const;
  /// psi^j.
  Character power(long j) const;
};

/// All characters, in lexicographic order of dual vectors.
std::vector<Character> all_characters(const PiField& f, const FiniteAbelianGroup& g);

/// Partition of character indices into orbits under psi -> psi^j,
/// gcd(j, p) = 1. Orbits and their members are in index order.
std::vector<std::vector<std::size_t>> galois_orbits(const std::vector<Character>& chars);

/// A representation defined on `domain` (the group or one of its subgroups).
struct MatrixRep {
  FiniteAbelianGroup group;
  CycloRing ring;
  std::vector<GroupElement> domain;
  std::map<GroupElement, CMatrix> images;
  std::size_t degree = 1;

  const CMatrix& operator()(const GroupElement& s) const;
  /// rho(s + t) = rho(s) rho(t) on the domain and rho(0) = I.
  bool is_homomorphism() const;

  static MatrixRep from_character(const Character& chi, std::optional<std::vector<GroupElement>> domain = std::nullopt);
};

MatrixRep direct_sum(const MatrixRep& a, const MatrixRep& b);

/// Ind_H^G chi as a monomial representation: block (i, j) of Ind(s) is
/// chi(r_i + s - r_j) when that lies in H and 0 otherwise.
MatrixRep induced(const Character& chi, const std::vector<GroupElement>& subgroup, const std::vector<GroupElement>& reps);

/// det(I - t * sum_s W^s (x) rho(s) + t^2 (D - I) (x) I), vertex-major.
CPoly h_function(const RGraph& g, const FiniteAbelianGroup& group, const std::vector<GroupElement>& alpha,
                 const MatrixRep& rho);

/// h(rho, 1) = det(D (x) I - sum_s W^s (x) rho(s)).
CycloElement h_at_one(const RGraph& g, const FiniteAbelianGroup& group, const std::vector<GroupElement>& alpha,
                      const MatrixRep& rho);

CycloElement h_at_one(const RGraph& g, const FiniteAbelianGroup& group, const std::vector<GroupElement>& alpha,
                      const Character& psi);

struct DecompositionReport {
  PiRingElement kappa_base;
  PiRingElement kappa_derived;
  /// Product of h(psi, 1) over nontrivial psi, descended orbit by orbit.
  PiRingElement character_product;
  /// kappa_{(v,s)}(X(alpha)) for every derived vertex, in derived order.
  std::vector<PiRingElement> rooted_derived;
  bool total_holds = false;
  bool rooted_holds = false;
};

/// Checks kappa_{(v,s)}(X(alpha)) = kappa_v(X)/|G| prod_{psi != 1} h(psi,1)
/// for every derived vertex and the summed identity for kappa. A disconnected
/// cover is allowed: both sides then vanish.
DecompositionReport decomposition_check(const RGraph& g, const FiniteAbelianGroup& group,
                                        const std::vector<GroupElement>& alpha);

/// h(rho1 (+) rho2, t) == h(rho1, t) h(rho2, t).
bool direct_sum_check(const RGraph& g, const FiniteAbelianGroup& group, const std::vector<GroupElement>& alpha,
                      const MatrixRep& rho1, const MatrixRep& rho2);

struct InductionReport {
  /// h_Z^beta(chi, t) == h_X^alpha(Ind chi, t).
  bool induction = false;
  /// h_X^alpha(Ind chi, t) == prod over psi with psi|_H = chi|_H of h_X^alpha(psi, t).
  bool frobenius = false;
};

InductionReport induction_check(const RGraph& g, const FiniteAbelianGroup& group, const std::vector<GroupElement>& alpha,
                                const std::vector<GroupElement>& subgroup, const std::vector<GroupElement>& reps,
                                const Character& chi);

/// det(D - WW(T)) with WW(T)(u,v) = sum over e: u -> v of s_u s_v (1+T)^{alpha(e)}.
RLaurent q_series(const RGraph& g, const VoltageAssignment& alpha);

/// Q at T_i = zeta^{c_i} - 1 where zeta^{c_i} = psi(e_i). The character's
/// group must be (Z/p^n)^d with d = number of variables.
CycloElement q_eval(const RLaurent& q, const Character& psi);

/// Q^{alpha,beta}(phi, T): entries carry the extra factor phi(beta(e)), with
/// phi(k) = zeta_p^{c k}. Coefficients live in the level-1 ring.
CLaurent q_twisted(const RGraph& g, const VoltageAssignment& alpha, const std::vector<long>& beta, long c);

/// Descends every coefficient to R; throws NonRationalDescent otherwise.
RLaurent descend(const CLaurent& q);

struct TwistReport {
  RLaurent q_lifted;           ///< Q of Y = X(beta) with voltage alpha o pi
  RLaurent twisted_product;    ///< prod over phi of Q^{alpha,beta}(phi, T)
  RLaurent nontrivial_product; ///< prod over phi != 1, one Galois orbit
  bool factorization = false;
};

TwistReport twisted_factorization(const RGraph& g, const VoltageAssignment& alpha, const std::vector<long>& beta);

/// For p = 2: every coefficient of Q^{alpha,beta}(sign) - Q^alpha has positive
/// valuation.
bool twisted_reduction_check(const RGraph& g, const VoltageAssignment& alpha, const std::vector<long>& beta);

/// The derived graph X(beta) over Z/p for a Z/p voltage given as integers.
DerivedGraph<PiRingElement> derive_mod_p(const RGraph& g, const std::vector<long>& beta);

}  // namespace vwt

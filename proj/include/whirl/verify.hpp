#pragma once

#include <string>
#include <vector>

#include "whirl/poset.hpp"

namespace whirl {

enum class Verdict { verified, refuted, skipped, exploratory };

std::string verdict_name(Verdict v);

// Machine-readable pass/fail record for one named claim. A refutation
// always carries witnesses that reproduce it; a skip names the exhausted
// resource. "exploratory" marks checks whose general statement is open:
// the sweep ran and its findings are reported, but nothing is asserted.
struct VerificationReport {
    std::string claim;
    std::string params;
    Verdict verdict = Verdict::skipped;
    std::vector<std::string> witnesses;
    std::string detail;

    bool ok() const { return verdict == Verdict::verified || verdict == Verdict::exploratory; }
};

// |J(V x [k])| equals (k+1)(k+2)(2k+3)/6.
VerificationReport verify_v_counting(int k);

// |J(C_n x [k])| equals sum_{i=1}^{k+1} i^n.
VerificationReport verify_claw_counting(int n, int k);

// The order of rowmotion on J(V x [k]) is exactly 2(k+2). Witnesses list
// the orbit-size multiset.
VerificationReport verify_v_order(int k);

// whirl^{k+2}(x,y,z) = (z,y,x) on every k-bounded V-partition.
VerificationReport verify_halfway(int k);

// V homomesies: chi(l,i) - chi(r,i) is 0-mesic; chi(l,1)+chi(r,1)-chi(c,k)
// is 2(k-1)/(k+2)-mesic; F_i - F_{i+1} is 3/(k+2)-mesic on one-tailed
// orbits (and the two-tailed failure of that claim is re-derived when one
// exists); F_i - F_{k+2-i} is 3(k+2-2i)/(k+2)-mesic on all orbits.
VerificationReport verify_v_homomesies(int k);

// Just the antipodal flux differences: F_i - F_{k+2-i} across all orbits.
VerificationReport verify_flux(int k);

// whirl^{k+2} f = whirl_bar_A f on every k-bounded claw partition, hence
// whirl^{alpha(k+2)} f = f.
VerificationReport verify_worder(int n, int k);

// The order of rowmotion on J(C_n x [k]) is exactly (k+2) LCM(1..m) with
// m = min(k+1, n); also checks the seed partitions f_p whose orbit lengths
// realize each factor (p(k+2), collapsing to k+1 when p = k+1).
VerificationReport verify_claw_period(int n, int k);

// Claw homomesies: chi(b_i,a) - chi(b_j,a) is 0-mesic; each orbit's average
// of sum_i chi(b_i,1) - chi(0,k) equals
// (n alpha (k+2) - (n+alpha)(alpha+1)) / (alpha (k+2)); the successive
// B-difference is NOT homomesic (reproduced on C_4 x [6]).
VerificationReport verify_claw_homomesies(int n, int k);

// phi transports whirl to rowmotion: phi(whirl f) = rowmotion(phi f) for
// every f, on the given base poset.
VerificationReport verify_equivariance(const Poset& P, int k);

// eta_j is n/k-mesic under function whirling on Inj_m(n,k) and Sur_1(n,k);
// Sur_m with m > 1 runs as exploratory (the general claim is open).
// family is "inj" or "sur".
VerificationReport verify_jpr(int n, int k, int m, const std::string& family);

}  // namespace whirl

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symdehn/dehn.hpp"
#include "symdehn/exactnum.hpp"

namespace symdehn {

// Right pyramid over a regular n-gon with all 2n edges of length c = 2 sin(pi/n).
struct RegularPyramid {
  int n;                             // 3, 4 or 5
  QuadElem h_squared;                // in Q(sqrt 5)
  QuadElem edge_squared;             // c^2 = 4 sin^2(pi/n)
  std::optional<SurdLength> edge;    // n = 3, 4
  std::string name;

  // 1 + h^2 = c^2
  bool edges_agree() const;
};

std::vector<RegularPyramid> regular_pyramids();

struct GluingRecord {
  QuadElem exp_phi3;
  QuadElem exp_phi4;
  QuadElem exp_theta3;
  QuadElem alpha4;
  bool phi_sum_is_pi;       // exp(i phi3) exp(i phi4) = -1
  bool coincidence_n4;      // exp(2 i theta4) = exp(i phi4)
  bool coincidence_n3;      // exp(i theta3) = exp(i phi3)
  DehnTensor dehn_p4;       // Dehn(P_4(1))
  DehnTensor dehn_p3;       // Dehn(P_3(sqrt 2))
  bool p4_matches;          // = -6 sqrt 2 (x) phi3
  bool p3_matches;          // = 6 sqrt 3 (x) phi3
  DehnTensor prism;         // sqrt3 Dehn(P4) + sqrt2 Dehn(P3)
  DehnTensor scaled;        // 3 sqrt2 Dehn(P4) + 2 sqrt3 Dehn(P3)
  DehnTensor crystal;       // 3 Dehn(sqrt2 * P4) + 2 Dehn(sqrt3 * P3)
  Rational prism_edge_squared;   // both pieces, 6
  SurdLength crystal_edge_k;     // 2
  SurdLength crystal_edge_t;     // 3
  std::vector<std::string> log;

  bool all_pass() const;
};

// Throws InternalConsistencyError when any identity fails.
GluingRecord verify_gluing_relations();

struct P5Check {
  TowerElem exp_phi;
  TowerElem alpha;            // exp(2 i theta)
  TowerElem w;                // exp(2 i (phi + theta))
  TowerElem w_displayed;      // squared closed form of exp(i (phi + theta))
  QuadElem w_norm;
  TowerElem w60;
  bool w60_is_one;
  bool i4_is_one;
  std::vector<std::string> log;
};

// w60_is_one = false means exp(i (phi + theta)) is not a root of unity.
P5Check p5_check();

}  // namespace symdehn

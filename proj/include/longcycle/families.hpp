#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "longcycle/graph.hpp"

namespace longcycle {

// Exact fraction in lowest terms with a positive denominator.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d);

  std::string str() const;  // "1/3", or "2" when the denominator is 1
  bool operator==(const Rational&) const = default;
};

// "p/q" or "p"; throws Parse on anything else.
Rational parse_rational(std::string_view text);

enum class Family { Sharpness, HjG1, HjG2, Ln };

const char* to_string(Family f);

// Copies are laid out one after another, each clique side first; the two
// path ends x and y (when present) are the last two vertices.
struct LabeledFamily {
  Family family = Family::Sharpness;
  Graph graph;
  std::optional<Vertex> x;
  std::optional<Vertex> y;
  int k = 0;
  int t = 0;  // copies, or the size of the independent side of G1
  std::optional<Rational> alpha;

  // "sharpness k=5 t=1 x=4 y=5" and the like.
  std::string describe() const;
};

// t copies of K_h v complement(K_h), h = (k-1)/2, with x and y joined to
// every clique-side vertex. k odd >= 5, t >= 1.
LabeledFamily gen_sharpness(int k, int t);

// K_2 v (K_{2k-4} + complement(K_t)), the K_2 first. k >= 3, t >= 1.
LabeledFamily gen_hj_g1(int k, int t);

// K_{k+1} on 0..k, then `copies` copies of K_h v complement(K_h) whose
// clique sides are joined to vertices 0 and 1. k odd >= 5.
LabeledFamily gen_hj_g2(int k, int copies);

// t copies of K_a v complement(K_b) with a = alpha(k-1), b = k-1-a, and x, y
// joined to every clique side. 0 < alpha <= 1/2 and a an integer >= 2.
LabeledFamily gen_ln_family(Rational alpha, int k, int t);

// The statistics the constructions are said to have.
struct FamilyClaims {
  int high_degree = 0;                 // vertices of degree >= k, x and y excluded
  std::optional<int> longest_xy;       // path families
  std::optional<int> circumference;    // cycle families
};

FamilyClaims claimed(const LabeledFamily& f);

}  // namespace longcycle

#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "core/brace.hpp"

namespace sbrace {

void for_each_brace_isomorphism(const SkewBrace& a, const SkewBrace& b,
                                const std::function<bool(const Bijection&)>& visit);
std::optional<Bijection> brace_isomorphism(const SkewBrace& a, const SkewBrace& b);
std::vector<Bijection> brace_automorphisms(const SkewBrace& a);

// n-isoclinism (xi, theta). xi acts on quotient indices of A/Ann_n(A) and
// B/Ann_n(B) (classes numbered by least representative); theta maps the
// sorted elements of A_(n) to elements of B.
struct Isoclinism {
  std::size_t n = 1;
  Bijection xi;
  std::vector<Elem> theta_domain;
  std::vector<Elem> theta;
};

// xi ranges over brace isomorphisms of the quotients, theta is propagated
// along word values and checked. For n >= 2 both braces must lie in I_n.
std::optional<Isoclinism> find_isoclinism(const SkewBrace& a, const SkewBrace& b, std::size_t n);
// Throws WitnessInvalid naming the first failing condition.
void verify_isoclinism(const SkewBrace& a, const SkewBrace& b, const Isoclinism& w);

// Data relative to ideals L <= Ann_n(A), N <= Ann_n(B): xi: A/L -> B/N and
// theta: A_(n) -> B_(n). Checks the diagram and promotes xi to the
// annihilator quotients.
struct IdealData {
  std::size_t n = 1;
  Subset l, nn;
  Bijection xi;                    // on quotient indices of A/L, B/N
  std::vector<Elem> theta_domain;  // sorted elements of A_(n)
  std::vector<Elem> theta;
};
Isoclinism isoclinic_via_ideals(const SkewBrace& a, const SkewBrace& b, const IdealData& d);

struct FiberProduct {
  SkewBrace c;
  std::vector<std::pair<Elem, Elem>> pairs;  // element of C -> (a, b)
  Subset n1, n2;                             // Ann_n(A) x 1 and 1 x Ann_n(B)
};

// C = {(a, b) : xi(Ann_n(A) a) = Ann_n(B) b} with its checked properties.
FiberProduct fiber_product(const SkewBrace& a, const SkewBrace& b, const Isoclinism& w);

struct Embedding {
  SkewBrace w;
  std::vector<Elem> rho_a, rho_b;
  Subset k;  // image of 1 x C/Gamma_2(C)
};

// For n = 1: W = (C/N2 x C/Gamma_2(C)) / N containing copies of A and B.
Embedding embed_W(const SkewBrace& a, const SkewBrace& b, const Isoclinism& w);

}  // namespace sbrace

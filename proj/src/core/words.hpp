#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "core/brace.hpp"

namespace sbrace {

// Letters in degree-lex order: * < *bar < gamma < gammabar.
// Serialised as s, S, g, G.
enum class Letter : std::uint8_t { Star = 0, BarStar = 1, Gamma = 2, BarGamma = 3 };
inline constexpr Letter kLetters[] = {Letter::Star, Letter::BarStar, Letter::Gamma, Letter::BarGamma};

using Word = std::vector<Letter>;

Word parse_word(std::string_view text);
std::string format_word(const Word& w);
// Words of degree r in degree-lex order.
std::vector<Word> words_of_degree(std::size_t r);

// gamma(a,b) = [a,b], gammabar(a,b) = [b,a], *(a,b) = a*b, *bar(a,b) = b*a.
Elem apply_letter(const SkewBrace& a, Letter e, Elem x, Elem y);
// Right-nested: e1(a1, e2(a2, ... e_s(a_s, a_{s+1}))).
Elem eval_word(const SkewBrace& a, const Word& w, std::span<const Elem> args);

// Budget for the enumerations whose cost grows like |X|^r |A|^(r+1).
struct Budget {
  std::uint64_t max_evals = 200'000'000;
  std::size_t max_degree = 8;
  std::size_t max_order = 4096;  // largest brace or group read from text
  static Budget from_env();
  void charge(std::uint64_t evals, const char* what) const;
};

// S_r: all degree-r word values, S_0 = A (computed level by level).
Subset value_set(const SkewBrace& a, std::size_t r, const Budget& budget = Budget::from_env());
// Same set by enumerating every word and every argument tuple.
Subset value_set_direct(const SkewBrace& a, std::size_t r, const Budget& budget = Budget::from_env());

// A_(t): dot-subgroup generated by all values of degree >= t; A_(0) = A.
Subset skeleton_ideal(const SkewBrace& a, std::size_t t, const Budget& budget = Budget::from_env());
// The same from direct value sets of degree t..t+extra (oracle for tests).
Subset skeleton_ideal_direct(const SkewBrace& a, std::size_t t, std::size_t extra,
                             const Budget& budget = Budget::from_env());

// u in Ann_t iff every degree-t word with last argument u vanishes.
bool ann_membership_words(const SkewBrace& a, Elem u, std::size_t t);
// Ann_t from the word characterisation, built level by level.
Subset ann_by_words(const SkewBrace& a, std::size_t t);
// Ann_t by evaluating all degree-t words directly (oracle for tests).
Subset ann_by_words_direct(const SkewBrace& a, std::size_t t, const Budget& budget = Budget::from_env());

struct ClassInWitness {
  std::size_t r = 0, s = 0;
  Letter letter = Letter::Star;
  Elem u = 0, v = 0;
};

struct ClassInResult {
  bool member = true;
  std::optional<ClassInWitness> witness;
};

// Membership in I_n: e(u, v) in Ann_{s-r} for all letters e, u in Ann_s,
// v in S_{r-1}, 1 <= r <= s <= n. For n = 2 the *bar test is run as well
// and must agree.
ClassInResult in_class_In(const SkewBrace& a, std::size_t n, const Budget& budget = Budget::from_env());
// I_r for every r <= n.
bool in_class_In_bar(const SkewBrace& a, std::size_t n, const Budget& budget = Budget::from_env());

struct FastI2Result {
  bool member = true;
  std::optional<std::pair<Elem, Elem>> witness;  // (u, v), u in Ann_2, v in Gamma_2, v*u != 1
};
FastI2Result fast_I2(const SkewBrace& a);

// Every degree-n word map is constant on Ann_n cosets in each argument.
bool phi_well_defined_bruteforce(const SkewBrace& a, std::size_t n, const Budget& budget = Budget::from_env());

}  // namespace sbrace

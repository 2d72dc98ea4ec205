#include "core/subset.hpp"

#include "core/error.hpp"

namespace sbrace {

Subset Subset::full(std::size_t universe) {
  Subset s(universe);
  for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<Elem>(i));
  return s;
}

Subset Subset::singleton(std::size_t universe, Elem x) {
  Subset s(universe);
  s.insert(x);
  return s;
}

Subset Subset::of(std::size_t universe, std::span<const Elem> elems) {
  Subset s(universe);
  for (Elem x : elems) {
    if (x >= universe) fail(ErrorCode::InvalidArgument, "subset element out of range");
    s.insert(x);
  }
  return s;
}

std::size_t Subset::size() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool Subset::is_subset_of(const Subset& other) const {
  if (n_ != other.n_) return false;
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

std::vector<Elem> Subset::elements() const {
  std::vector<Elem> out;
  out.reserve(size());
  for_each([&](Elem x) { out.push_back(x); });
  return out;
}

Subset Subset::operator&(const Subset& o) const {
  if (n_ != o.n_) fail(ErrorCode::InvalidArgument, "subset universes differ");
  Subset r(n_);
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
  return r;
}

Subset Subset::operator|(const Subset& o) const {
  if (n_ != o.n_) fail(ErrorCode::InvalidArgument, "subset universes differ");
  Subset r(n_);
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | o.words_[i];
  return r;
}

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Io: return "Io";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NoIdentityAtZero: return "NoIdentityAtZero";
    case ErrorCode::NotLatinSquare: return "NotLatinSquare";
    case ErrorCode::DotNotGroup: return "DotNotGroup";
    case ErrorCode::CircNotGroup: return "CircNotGroup";
    case ErrorCode::BraceAxiomFails: return "BraceAxiomFails";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NotIdeal: return "NotIdeal";
    case ErrorCode::NotBraceHom: return "NotBraceHom";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::NotInClassIn: return "NotInClassIn";
    case ErrorCode::BadIdeals: return "BadIdeals";
    case ErrorCode::DiagramFails: return "DiagramFails";
    case ErrorCode::WitnessInvalid: return "WitnessInvalid";
    case ErrorCode::NotAbelianCoefficients: return "NotAbelianCoefficients";
    case ErrorCode::IdentityFails: return "IdentityFails";
    case ErrorCode::NotInsideAnnihilator: return "NotInsideAnnihilator";
    case ErrorCode::ModulusTooSmall: return "ModulusTooSmall";
    case ErrorCode::QuotientMismatch: return "QuotientMismatch";
    case ErrorCode::HypothesisUnmet: return "HypothesisUnmet";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InternalDisagreement: return "InternalDisagreement";
  }
  return "Unknown";
}

}  // namespace sbrace

#pragma once

#include <map>
#include <string>

#include "spinsec/weyl.hpp"

namespace spinsec {

// W-compressed character: each stored dominant weight stands for its full
// Weyl orbit with the given multiplicity.
struct DominantCharacter {
  RootDatum datum;
  std::map<Weight, long long> mults;

  explicit DominantCharacter(RootDatum d) : datum(d) {}

  void add(const Weight& w, long long m);
  long long value_at(const Weight& any) const;  // multiplicity of any weight
  Int dim() const;
  bool operator==(const DominantCharacter& o) const {
    return datum == o.datum && mults == o.mults;
  }
};

// Multiset of highest weights with multiplicities.
struct Decomposition {
  RootDatum datum;
  std::map<Weight, long long> components;
  std::string label;

  explicit Decomposition(RootDatum d, std::string lab = "")
      : datum(d), label(std::move(lab)) {}

  void add(const Weight& w, long long m);
  long long mult_of(const Weight& w) const;
  Int dim() const;
  bool same_components(const Decomposition& o) const {
    return components == o.components;
  }
};

// Weyl dimension formula, exact.
Int dim_irrep(const RootDatum& datum, const Weight& lambda);

// Full dominant weight multiplicity table of the irreducible with highest
// weight lambda (Freudenthal recursion); results are cached per datum.
DominantCharacter freudenthal_char(const RootDatum& datum, const Weight& lambda);

DominantCharacter char_mul(const DominantCharacter& a,
                           const DominantCharacter& b);
// Adams operation: scales every weight by k.
DominantCharacter adams(const DominantCharacter& c, int k);

enum class PowerKind { Sym, Ext };
// Character of S^k or /\^k of the module with character c, k = 2..4.
DominantCharacter power_op(const DominantCharacter& c, int k, PowerKind kind);

// Leading-weight peeling; throws if a negative multiplicity appears.
Decomposition decompose(const DominantCharacter& c, const std::string& label = "");

// Half-spin character of D_n: the single dominant weight w_n (plus) or
// w_{n-1} (minus).
DominantCharacter spin_char(const RootDatum& datum, bool plus);

// Tensor with a half-spin representation by the minuscule rule:
// sum over spin weights mu with lambda + mu dominant.
Decomposition tensor_minuscule(const RootDatum& datum, const Weight& lambda,
                               bool plus);

// height-then-lex key used to pick the leading dominant weight
bool weight_peel_less(const Weight& a, const Weight& b);

}  // namespace spinsec

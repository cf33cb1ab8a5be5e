#pragma once

#include <optional>
#include <vector>

#include "mealy/experts.hpp"
#include "mealy/machine.hpp"
#include "mealy/rng.hpp"
#include "mealy/testsuite.hpp"

namespace mealy {

// Distribution over infix lengths. The default is the hybrid used for
// randomised suite generation: mass 7/8 on length 3 and a mean-2
// geometric tail, mu(x) = 2^-x for x >= 4.
class LengthDistribution {
 public:
  static LengthDistribution point_mass(int length);
  static LengthDistribution hybrid_geometric();

  double pmf(int length) const;
  int sample(Rng& rng) const;

 private:
  enum class Kind { Point, HybridGeometric };
  LengthDistribution(Kind kind, int point) : kind_(kind), point_(point) {}
  Kind kind_;
  int point_;
};

LengthDistribution mu_default();

// All words over the given symbols with length <= max_len, shortlex order.
std::vector<Word> words_up_to(const std::vector<int>& symbols, int max_len);

// The k-complete suite P . I^{<=k+1} . W.
TestSuite w_method(const MealyMachine& h, int k);

// Same shape with the whole infix layer restricted to a subalphabet:
// P . J^{<=k+1} . W.
TestSuite restricted_w_method(const MealyMachine& h, int k, const std::vector<int>& infix_alphabet);

// Expert test suite: union over v in P of
//   v . (union of J^{<=k-1} over J in E(h, v)) . I^{<=2} . W,  k >= 1.
TestSuite ets(const MealyMachine& h, const Expert& expert, int k);

// Reach language: union over v in P of v . (union of J^{<=k-1}) . I^{<=1}.
TestSuite reach_language(const MealyMachine& h, const Expert& expert, int k);

// Whether every non-sink state of s is reached by the expert-specific
// reach set: ActiveInputs -> P.(I')^{<=k}; Future -> union of v.I_{v,l}^{<=k};
// Components -> union of P.I_X^{<=k}; Trivial -> true.
bool class_membership(const MealyMachine& s, const MealyMachine& h, const Expert& expert, int k);

// One draw from the randomised expert suite: access word, infix whose
// first max(l-2,0) symbols come from a uniformly chosen subalphabet and
// whose last min(l,2) symbols come from the full alphabet, then a suffix
// from W.
struct SampledTest {
  Word access;
  Word infix;
  Word suffix;
  Word full;
  std::string expert;
  int drawn_length;
};

// Holds the per-hypothesis data (state cover, characterization set,
// expert precomputation) so draws are cheap.
class TestSampler {
 public:
  TestSampler(const MealyMachine& h, Expert expert);

  SampledTest sample(const LengthDistribution& mu, Rng& rng) const;

  const std::vector<Word>& cover() const { return cover_; }
  const std::vector<Word>& suffixes() const { return suffixes_; }

 private:
  const MealyMachine* h_;
  ExpertEvaluator evaluator_;
  std::vector<Word> cover_;
  std::vector<Word> suffixes_;
};

SampledTest sample_test(const MealyMachine& h, const Expert& expert, const LengthDistribution& mu,
                        Rng& rng);

}  // namespace mealy

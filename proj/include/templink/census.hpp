#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "templink/crossing.hpp"
#include "templink/kneading.hpp"
#include "templink/linking.hpp"
#include "templink/symbolic.hpp"

namespace templink {

/// Longest cyclic run of consecutive a^{p-1}b syllables (maximal a-runs
/// followed by exactly one b) or b^{q-1}a syllables (maximal b-runs followed
/// by exactly one a). Words made only of such syllables report SIZE_MAX.
std::size_t max_block_repeat(std::span<const Letter> word, int p, int q);

/// Run lengths and block repeats within max_block_constraints(t).
bool satisfies_block_constraints(std::span<const Letter> word, const Triple& t);

/// All primitive admissible orbits with both letters and length <= max_len,
/// in shortlex order. Throws DomainError outside the kneading table domain
/// and std::invalid_argument for max_len < 1.
std::vector<CyclicWord> enumerate_admissible(const Triple& t, std::size_t max_len);

enum class FamilyTag { rot_p, rot_q, mixed };

std::string to_string(FamilyTag tag);

/// One parameterised extremal code:
///   rot_p: (a^{p-1}b)^k a^i b^j
///   rot_q: (ab^{q-1})^k a^i b^j
///   mixed: (a^{p-1}b)^k (ab^{q-1})^l
/// For p = 2 the forms ab^j(ab)^k and ab^j(ab^{q-1})^k are rot_p and rot_q
/// with i = 1.
struct ExtremalFamily {
  FamilyTag tag;
  int i = 0, j = 0, k = 0, l = 0;

  Word word(const Triple& t) const;
  std::string str() const;
};

/// True for p >= 3, and for p = 2 with q and r odd (and in the table domain).
bool has_extremal_census(const Triple& t);

/// Every parameter tuple of the extremal families of t. k ranges use
/// floor((r-2)/2) for p >= 3 and (r-3)/2 for p = 2.
std::vector<ExtremalFamily> extremal_families(const Triple& t);

/// Deduplicated canonical words of extremal_families(t), shortlex order. These
/// are formal codes: not all of them are admissible.
/// Throws DomainError when has_extremal_census(t) is false.
std::vector<CyclicWord> extremal_orbits(const Triple& t);

/// True when some cut of w is admissible for k. Extremal orbits are the
/// admissible ones for which this is false.
bool has_admissible_cut(const CyclicWord& w, const KneadingData& k);

struct PairReport {
  CyclicWord word1;
  CyclicWord word2;
  long long cr = 0;
  LetterCounts counts1;
  LetterCounts counts2;
  Rational lk;
  bool negative = false;
};

/// Linking numbers of all unordered pairs of distinct words (and self-pairs
/// when include_self). Duplicate cyclic words in the input are dropped.
std::vector<PairReport> verify_pairs(const Triple& t, const std::vector<CyclicWord>& words,
                                     bool include_self);

struct TripleSummary {
  Triple triple;
  std::size_t words = 0;
  std::size_t pairs = 0;
  std::size_t violations = 0;
  std::optional<PairReport> worst;  // largest lk
  std::vector<PairReport> violating;
  double seconds = 0;
};

struct RangeSummary {
  std::vector<TripleSummary> triples;
  std::size_t pairs = 0;
  std::size_t violations = 0;
  std::optional<PairReport> worst;
  std::optional<Triple> worst_triple;
  double seconds = 0;
};

/// Triples checked by a range run: all hyperbolic p <= q <= r within the
/// bounds with p >= 3, plus p = 2 with q and r odd inside the table domain.
std::vector<Triple> verification_triples(int p_max, int q_max, int r_max);

/// Default worker count: hardware concurrency, at least 1.
unsigned default_jobs();

/// verify_pairs(t, extremal_orbits(t), true) for each triple, spread over
/// `jobs` workers. Results do not depend on scheduling.
RangeSummary verify_triples(const std::vector<Triple>& triples, unsigned jobs);

RangeSummary verify_range(int p_max, int q_max, int r_max, unsigned jobs);

/// Outcome of comparing the extremal formulas with the cut characterisation.
struct ExtremalCrossCheck {
  Triple triple;
  std::size_t max_len = 0;
  std::vector<CyclicWord> formula;         // formula words with length <= max_len
  std::vector<CyclicWord> census;          // admissible, no admissible cut
  std::vector<CyclicWord> formula_only;    // in formula, not in census
  std::vector<CyclicWord> census_only;     // in census, not in formula
  std::vector<CyclicWord> non_admissible;  // formula words failing admissibility
  bool consistent() const { return formula_only.empty() && census_only.empty(); }
};

ExtremalCrossCheck cross_check_extremal(const Triple& t, std::size_t max_len);

// ---- lemma checks ---------------------------------------------------------

struct IdentityResult {
  std::string name;        // e.g. "case 2.5 (printed expanded form)"
  std::string parameters;  // description of (i,j,i',j') or word pair
  std::size_t checked = 0;
  std::size_t matched = 0;
  std::string first_discrepancy;  // empty when all matched
};

struct InequalityResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t violations = 0;
  long long min_slack = 0;
  std::string first_violation;
};

struct LemmaReport {
  Triple triple;
  std::vector<InequalityResult> inequalities;  // crossing closed forms and bounds
  std::vector<IdentityResult> identities;      // printed Δ·lk closed forms
  bool inequalities_hold() const;
};

struct LemmaGrid {
  int max_exponent = 0;       // 0: use p-1 / q-1
  int max_blocks = -1;        // -1: floor((r-2)/2)
  std::size_t superadditivity_samples = 200;
  unsigned seed = 1;
};

/// Exhaustive crossing closed forms, the refined block lower bound (proper
/// powers skipped), printed Δ·lk identities, and sampled superadditivity.
LemmaReport check_lemma_inequalities(const Triple& t, const LemmaGrid& grid = {});

}  // namespace templink

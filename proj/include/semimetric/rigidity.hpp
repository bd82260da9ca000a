#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semimetric/order_digraph.hpp"
#include "semimetric/proximity.hpp"
#include "semimetric/space.hpp"
#include "semimetric/weak_similarity.hpp"

namespace semimetric {

/// Ceiling for the definition-level enumerations (3^n splits).
inline constexpr std::size_t kBruteForceCap = 12;

struct SrResult {
  bool holds = true;
  /// Two distinct pairs at the same distance.
  std::optional<std::pair<PairVertex, PairVertex>> witness;
};

/// (x1, x2, x3) with d(x2, x1) = d(x2, x3).
using Triple = std::array<std::string, 3>;

struct WrResult {
  bool holds = true;
  std::optional<Triple> witness;
};

/// Disjoint A, B with more than one best proximity pair.
struct SplitWitness {
  LabelSet a;
  LabelSet b;
  std::vector<LabelPair> pairs;
};

struct UbppResult {
  bool holds = true;
  std::optional<SplitWitness> witness;
};

enum class FourPointCondition {
  NotWeaklyRigid,      // (a)
  ForbiddenSignature,  // (b) some Di_Y is none of Di1..Di4
  SimilarToXStar,      // (c)
};

std::string_view to_string(FourPointCondition c);

struct FourPointWitness {
  FourPointCondition failed;
  /// The offending 4-point subset; for NotWeaklyRigid, the isosceles triple.
  LabelSet subset;
  std::optional<LevelSignature> signature;
  std::optional<Bijection> similarity;
};

struct FourPointResult {
  bool holds = true;
  std::optional<FourPointWitness> witness;
};

enum class Method { Oracle, FourPoint, Both };

std::string_view to_string(Method m);
/// "oracle" | "fourpoint" | "both"; throws Error{InvalidArgument}.
Method parse_method(std::string_view text);

struct ClassificationReport {
  bool sr = true;
  bool wr = true;
  bool ubpp = true;
  std::optional<std::pair<PairVertex, PairVertex>> sr_witness;
  std::optional<Triple> wr_witness;
  /// Split witness from the brute-force decider (oracle / both).
  std::optional<SplitWitness> ubpp_witness;
  /// Failing condition from the four-point decider (fourpoint / both).
  std::optional<FourPointWitness> fourpoint_witness;
  Method method = Method::Both;
};

SrResult is_strongly_rigid(const SemimetricSpace& space);

/// No point sees two others at the same distance.
WrResult is_weakly_rigid(const SemimetricSpace& space);

/// Definition-level UBPP check over all unordered disjoint nonempty (A, B).
/// Splits are visited as ternary assignments (out < A < B) with point 0 the
/// most significant digit, so the witness is the lexicographically least
/// offending split. Throws Error{TooLarge} above `cap` points.
UbppResult is_ubpp_bruteforce(const SemimetricSpace& space, std::size_t cap = kBruteForceCap);

/// Four-point criterion: weakly rigid, every four-point Di_Y isomorphic to
/// one of Di1..Di4, and no four-point subspace weakly similar to X*.
FourPointResult is_ubpp_fourpoint(const SemimetricSpace& space);

/// Throws TooLarge, or InconsistencyDetected when the two UBPP deciders
/// disagree (method Both) or the SR => UBPP => WR chain breaks.
ClassificationReport classify(const SemimetricSpace& space, Method method,
                              std::size_t cap = kBruteForceCap);

/// For n <= 3: {SR, WR, UBPP, every proximinal graph has exactly one edge},
/// each evaluated on its own. Throws WrongSize for n > 3 and
/// InconsistencyDetected if the four values differ.
std::array<bool, 4> small_space_equivalences(const SemimetricSpace& space);

/// Five independently evaluated statements:
///   [0] every proximinal graph has max degree <= 1
///   [1] |A0| = |B0| for all disjoint nonempty A, B
///   [2] each x has a unique best approximation in each nonempty A
///   [3] each x has at most one best approximation in each Y (Y may be empty)
///   [4] weakly rigid
/// Throws TooLarge, or InconsistencyDetected if they disagree.
std::array<bool, 5> best_approx_equivalence_report(const SemimetricSpace& space,
                                                   std::size_t cap = kBruteForceCap);

/// Deterministic instance generator. Squared distances are drawn from a
/// small pool of rationals; with probability tie_bias a pair reuses a value
/// already present. Labels are x1..xn.
/// Throws TooSmall (n = 0) or InvalidArgument (tie_bias outside [0, 1]).
SemimetricSpace random_space(std::size_t n, std::uint64_t seed, const Rational& tie_bias);

/// Calls visit(A, B) for every unordered pair of disjoint nonempty index sets
/// (each unordered pair once, with the first used point in A), in the same
/// order as is_ubpp_bruteforce. Stops early when visit returns false.
void for_each_disjoint_split(
    std::size_t n,
    const std::function<bool(std::span<const std::size_t>, std::span<const std::size_t>)>& visit);

}  // namespace semimetric

#pragma once

#include "braidvar/loci.hpp"
#include "braidvar/weave.hpp"

namespace braidvar {

// One replayable action on a decorated word: a weave move or a cyclic
// rotation with its coordinate transport.
struct StageStep {
  bool rotation = false;
  WeaveMove move{MoveKind::Commute, 0};  // unused for rotations
  BraidWord word_after;
  RatPoint point_after;
};

// One descent stage: exactly one trivalent vertex (plus braid moves and
// rotations), anchored at a nonzero coordinate of the incoming point.
struct StageRecord {
  BraidWord start_word;
  RatPoint start_point;
  int anchor = 0;  // 1-indexed coordinate carrying the s-variable; 0 if generic
  std::vector<StageStep> steps;
};

struct ChartCertificate {
  BraidWord input_word;
  RatPoint input_point;
  std::vector<StageRecord> stages;
  BraidWord final_word;
  RatPoint final_point;
  std::string to_json() const;
};

struct FreeActionWitness {
  std::optional<ChartCertificate> chart;
  std::optional<SubtorusWitness> stabilizer;
};

// Constructive chart search on X(a,b): returns a stabilizer witness when the
// torus action on p is not free, and otherwise a certificate that replays p
// into the unique point of a reduced word through a chain of localizations.
FreeActionWitness find_chart(int a, int b, const RatPoint& p);

// Two-strand base case on X(sigma^ell).
FreeActionWitness find_chart_two_strand(int ell, const RatPoint& p);

// Replays every stage exactly and checks the terminal membership.
bool verify_certificate(const ChartCertificate& cert);

// Cyclic rotation with coordinate transport, re-derived through the
// flag-chain model; requires delta(b) = w0 and p in X(b).
std::pair<BraidWord, RatPoint> rotate_point(const BraidWord& b, const RatPoint& p);

// Deterministic samplers.
RatPoint sample_chart_point(const BraidWord& b, uint64_t seed);
RatPoint sample_deep_point(int a, int b, uint64_t seed);

// The unique completion of a Bott-Samelson point of beta_bs(a,b) to a point
// of X(a,b) = X(beta_bs . sigma1 sigma2 sigma1).
RatPoint complete_bs_point(int a, int b, const RatPoint& bs_point);

}  // namespace braidvar

#pragma once

#include "su2cyc/pillowcase.hpp"
#include "su2cyc/rational_angle.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace su2cyc {

/// Straight arc c_theta*theta + eta ≡ offset (mod 2pi) over an open theta interval.
struct ExactArc {
  std::int64_t c_theta = 0;
  std::int64_t c_eta = 1;
  RationalAngle offset;  // in [0, 2pi)
  RationalAngle theta_lo;
  RationalAngle theta_hi;

  RationalAngle eta_at(const RationalAngle& theta) const;  // in [0, 2pi)
  double eta_at(double theta) const;                        // in [0, 2pi)

  friend bool operator==(const ExactArc&, const ExactArc&) = default;
};

struct SamplePoint {
  double theta = 0.0;
  double eta = 0.0;
  friend bool operator==(const SamplePoint&, const SamplePoint&) = default;
};

enum class Provenance { Exact, Sampled };
const char* to_string(Provenance p);

/// Image of the representation variety in the pillowcase torus.
struct PillowArcSet {
  Provenance provenance = Provenance::Exact;
  std::vector<ExactArc> exact_arcs;
  std::vector<SamplePoint> samples;  // theta, eta in [0, 2pi)
  double tolerance = 0.0;            // for sampled clouds
  double resolution = 0.0;           // seed spacing of a sampled cloud

  bool empty() const { return exact_arcs.empty() && samples.empty(); }
  friend bool operator==(const PillowArcSet&, const PillowArcSet&) = default;
};

/// Irreducible arcs of the (p, q) torus knot. Empty when p or q is 1.
/// `mirror` flips the sign of the longitude angle.
PillowArcSet torus_knot_arcs(std::int64_t p, std::int64_t q, bool mirror = false);

/// A word in x = 1, y = 2; negative letters are inverses.
using Word = std::vector<int>;

struct GroupPresentation {
  int generator_count = 2;
  std::vector<Word> relators;
  Word meridian;
  Word longitude;

  /// Throws SchemaError on letters other than +-1, +-2 or unreduced words.
  void validate() const;
  friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;
};

Word reduce_word(const Word& w);

/// <x, y | x^p = y^q> with meridian x^a y^b (a q + b p = 1) and
/// longitude x^p m^(-pq).
GroupPresentation torus_knot_presentation(std::int64_t p, std::int64_t q);

struct SampleOptions {
  int grid = 64;
  double tol = 1e-9;        // bound on the sum of squared matrix-entry deviations
  double reducible = 1e-7;  // commutator norm below which images are abelian
  bool mirror = false;
  unsigned threads = 0;     // 0: hardware concurrency
};

/// Numeric SU(2) representations of a two-generator presentation, projected to (theta, eta).
PillowArcSet sample_reps(const GroupPresentation& pres, const SampleOptions& options = {});

struct ObstructionWitness {
  std::optional<std::size_t> arc;  // index into exact_arcs
  bool entire_arc = false;
  std::optional<PlanePoint> exact;
  double theta = 0.0;
  double eta = 0.0;
};

struct ObstructionResult {
  bool empty = true;
  std::vector<ObstructionWitness> witnesses;
};

/// Points of the arcs off eta ∈ 2piZ that lie in the line family.
ObstructionResult obstruct(const PillowArcSet& arcs, const ObstructionSet& set, double tol = 1e-6);

struct AxiomCheck {
  bool pass = true;
  bool vacuous = false;
  std::string details;
};

struct AxiomsReport {
  AxiomCheck closed;       // bounded, finite data
  AxiomCheck translation;  // invariant under (pi, 0)
  AxiomCheck axis;         // meets theta ∈ piZ only at eta ∈ 2piZ
  AxiomCheck collar;       // positive collar around theta ∈ piZ
  std::optional<RationalAngle> collar_exact;
  double collar_width = 0.0;
  bool collar_is_estimate = false;

  bool all_pass() const { return closed.pass && translation.pass && axis.pass && collar.pass; }
};

AxiomsReport pillowcase_axioms_check(const PillowArcSet& arcs);

/// Euclidean torus distance from a point to the closure of an exact arc.
double distance_to_arc(double theta, double eta, const ExactArc& arc);

struct CloudComparison {
  double max_distance = 0.0;      // sup over samples of the distance to the arcs
  double max_coverage_gap = 0.0;  // widest theta gap left uncovered on any arc
};

CloudComparison compare_cloud(const PillowArcSet& sampled, const PillowArcSet& exact,
                              double match_tol = 1e-6);

}  // namespace su2cyc

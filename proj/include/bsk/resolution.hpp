#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bsk/groebner.hpp"
#include "bsk/invariants.hpp"

namespace bsk {

/// Free module sum_i S(-twist_i).
struct GradedFreeModule {
  std::vector<long> twists;
  std::size_t rank() const noexcept { return twists.size(); }
};

/// Map source -> target given by a matrix with entry (i, j) homogeneous of
/// degree source.twists[j] - target.twists[i] (or zero).
struct ResolutionStep {
  GradedFreeModule target;
  GradedFreeModule source;
  std::vector<std::vector<Poly>> matrix;  // matrix[i][j], i < target rank

  std::vector<Poly> column(std::size_t j) const;
};

struct FreeResolution {
  RingPtr ring;
  Ideal ideal;
  /// steps[k - 1] is the map F_k -> F_{k-1}; F_0 = S.
  std::vector<ResolutionStep> steps;
  bool minimal = false;

  std::size_t length() const noexcept { return steps.size(); }
};

/// Multiplicities beta_{k,d} of S(-d) in F_k (beta_{0,0} = 1).
class BettiTable {
 public:
  explicit BettiTable(std::map<std::pair<std::size_t, long>, long> entries) : entries_(std::move(entries)) {}

  long at(std::size_t k, long d) const;
  const std::map<std::pair<std::size_t, long>, long>& entries() const noexcept { return entries_; }
  /// Columns are homological degrees, rows are the strata d - k.
  std::string format() const;

 private:
  std::map<std::pair<std::size_t, long>, long> entries_;
};

/// Generators of the syzygy module of the columns of `step`: a step whose
/// target is `step.source`. Columns must be homogeneous.
ResolutionStep syzygies(const ResolutionStep& step, const Budget& budget = {});

/// Minimal homogeneous generators of the submodule of S^rank spanned by
/// `vectors`, chosen degree by degree.
std::vector<std::vector<Poly>> minimal_generators(const RingPtr& ring, const std::vector<long>& twists,
                                                  std::vector<std::vector<Poly>> vectors, const Budget& budget = {});

/// Minimal graded free resolution of S/J for homogeneous J.
FreeResolution minimal_resolution(const Ideal& ideal, const Budget& budget = {});

BettiTable betti(const FreeResolution& resolution);

/// max over k >= 1 and i of (d_k^i - k), plus 1; 1 for the zero ideal.
long regularity(const FreeResolution& resolution);

/// Generic rank of step k (1-based), from a random specialization checked
/// against the alternating rank sum of the exact complex.
std::size_t generic_rank(const FreeResolution& resolution, std::size_t k, std::uint64_t seed = 1);

/// Ideal of r_k x r_k minors of step k, r_k the generic rank.
Ideal fitting_ideal(const FreeResolution& resolution, std::size_t k, std::size_t minor_cap = 6);

/// Per-step codimension of the Fitting-ideal zero locus (infinite for the unit ideal).
std::vector<std::pair<std::size_t, Codimension>> bef_codims(const FreeResolution& resolution,
                                                            std::size_t minor_cap = 6, const Budget& budget = {});

using PolyMatrix = std::vector<std::vector<Poly>>;
PolyMatrix matrix_product(const PolyMatrix& a, const PolyMatrix& b, const RingPtr& ring);
Poly determinant(const PolyMatrix& square, const RingPtr& ring);

}  // namespace bsk

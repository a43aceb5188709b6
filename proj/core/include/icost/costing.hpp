#pragma once

#include <map>
#include <string>
#include <vector>

#include "icost/complexity.hpp"
#include "icost/matrix.hpp"

namespace icost {

enum class CostMode { original, neighborhood, mst };
enum class CostScheme { ins, gen };

const char* cost_mode_name(CostMode m);
const char* cost_scheme_name(CostScheme s);
CostMode parse_cost_mode(const std::string& name);
CostScheme parse_cost_scheme(const std::string& name);

/// Cost-factor input. At most one of scalar/list/named may be provided;
/// none means the IR-based defaults.
struct CostSpec {
  CostMode mode = CostMode::neighborhood;
  CostScheme scheme = CostScheme::ins;  // neighborhood only
  bool has_scalar = false;
  double scalar = 0.0;
  std::vector<double> list;
  std::map<std::string, double> named;
  int n_neighbors = 5;
  // Optional down-weighting of majority instances that sit on a cross-class
  // MST edge. 1.0 (default) leaves every majority weight at 1.
  double linked_majority_weight = 1.0;

  bool operator==(const CostSpec&) const = default;
};

struct InsCosts {
  double cfb = 1.0;  // border
  double cfs = 1.0;  // safe
  double cfp = 1.0;  // pure

  bool operator==(const InsCosts&) const = default;
};

struct MstCosts {
  double cfl = 1.0;  // linked
  double cfn = 1.0;  // normal

  bool operator==(const MstCosts&) const = default;
};

/// Scalar c -> (c, c/2, c/4); default -> (ir, ir/2, ir/4); explicit values must
/// satisfy cfb >= cfs >= cfp > 0. All three are floored at 1 afterwards.
InsCosts resolve_ins(const CostSpec& spec, double ir);

/// Scalar c -> (c, c/2); default -> (ir, ir/2); explicit values must satisfy
/// cfl >= cfn > 0. Floored at 1 afterwards.
MstCosts resolve_mst(const CostSpec& spec, double ir);

/// Grade weights g0..gk. Explicit list of k+1 positives passes through
/// (no monotonicity requirement); scalar c or default c = ir interpolates
/// w(g_j) = 1 + j*(c-1)/k. Floored at 1 afterwards.
std::vector<double> resolve_gen(const CostSpec& spec, double ir, int k);

/// Scalar c or default ir, floored at 1.
double resolve_original(const CostSpec& spec, double ir);

/// Profiles for one binary training partition. neighborhood/mst each list one
/// entry per minority instance; linked_majority lists majority instances on a
/// cross-class MST edge (mst mode only).
struct ComplexityProfiles {
  std::vector<NeighborhoodProfile> neighborhood;
  std::vector<MstProfile> mst;
  std::vector<int> linked_majority;
};

/// Runs whichever complexity analysis spec.mode requires. Original mode needs
/// none and returns empty profiles.
ComplexityProfiles compute_profiles(const CostSpec& spec, const Matrix& features,
                                    const std::vector<int>& y);

using WeightVector = std::vector<double>;

/// Per-instance misclassification weights in training-partition order.
/// Majority weights are 1 (unless the linked-majority option lowers some);
/// minority weights come from the resolved costs and are always >= 1.
WeightVector assign_weights(const CostSpec& spec, const ComplexityProfiles& profiles,
                            const std::vector<int>& y, double ir);

}  // namespace icost

#include "icost/costing.hpp"

#include <algorithm>
#include <cstddef>

#include "icost/error.hpp"

namespace icost {

const char* cost_mode_name(CostMode m) {
  switch (m) {
    case CostMode::original: return "original";
    case CostMode::neighborhood: return "neighborhood";
    case CostMode::mst: return "mst";
  }
  return "?";
}

const char* cost_scheme_name(CostScheme s) {
  return s == CostScheme::ins ? "ins" : "gen";
}

CostMode parse_cost_mode(const std::string& name) {
  if (name == "original") return CostMode::original;
  if (name == "neighborhood") return CostMode::neighborhood;
  if (name == "mst") return CostMode::mst;
  fail(errc::bad_params, "unknown algorithm '" + name + "' (original|neighborhood|mst)");
}

CostScheme parse_cost_scheme(const std::string& name) {
  if (name == "ins") return CostScheme::ins;
  if (name == "gen") return CostScheme::gen;
  fail(errc::bad_params, "unknown type '" + name + "' (ins|gen)");
}

namespace {

enum class ValueForm { none, scalar, list, named };

ValueForm value_form(const CostSpec& spec) {
  int provided = (spec.has_scalar ? 1 : 0) + (spec.list.empty() ? 0 : 1) +
                 (spec.named.empty() ? 0 : 1);
  if (provided > 1) fail(errc::bad_params, "cost-factor given in more than one form");
  if (spec.has_scalar) return ValueForm::scalar;
  if (!spec.list.empty()) return ValueForm::list;
  if (!spec.named.empty()) return ValueForm::named;
  return ValueForm::none;
}

void check_positive(double v, const char* what) {
  if (!(v > 0.0)) fail(errc::non_positive_cost, std::string(what) + " must be > 0");
}

void check_ir(double ir) {
  if (!(ir > 0.0)) fail(errc::bad_params, "imbalance ratio must be > 0");
}

std::vector<double> named_values(const CostSpec& spec, const std::vector<std::string>& keys) {
  std::string want;
  for (const auto& k : keys) want += (want.empty() ? "" : ", ") + k;
  if (spec.named.size() != keys.size())
    fail(errc::bad_arity, "cost-factor map must have exactly the keys " + want);
  std::vector<double> out;
  for (const auto& key : keys) {
    auto it = spec.named.find(key);
    if (it == spec.named.end()) fail(errc::bad_arity, "cost-factor map is missing key '" + key + "'");
    out.push_back(it->second);
  }
  return out;
}

double floored(double v) { return std::max(v, 1.0); }

}  // namespace

InsCosts resolve_ins(const CostSpec& spec, double ir) {
  if (spec.mode != CostMode::neighborhood || spec.scheme != CostScheme::ins)
    fail(errc::bad_params, "resolve_ins requires algorithm=neighborhood, type=ins");
  check_ir(ir);
  double cfb = 0, cfs = 0, cfp = 0;
  switch (value_form(spec)) {
    case ValueForm::scalar:
      check_positive(spec.scalar, "cost-factor");
      cfb = spec.scalar;
      cfs = 0.5 * spec.scalar;
      cfp = 0.25 * spec.scalar;
      break;
    case ValueForm::none:
      cfb = ir;
      cfs = 0.5 * ir;
      cfp = 0.25 * ir;
      break;
    case ValueForm::list:
    case ValueForm::named: {
      std::vector<double> v = spec.list;
      if (v.empty()) v = named_values(spec, {"cfb", "cfs", "cfp"});
      if (v.size() != 3) fail(errc::bad_arity, "ins cost-factor needs exactly 3 values (cfb, cfs, cfp)");
      for (double x : v) check_positive(x, "cost-factor entry");
      if (v[0] < v[1] || v[1] < v[2])
        fail(errc::order_violation, "ins cost-factor must satisfy cfb >= cfs >= cfp");
      cfb = v[0];
      cfs = v[1];
      cfp = v[2];
      break;
    }
  }
  return {floored(cfb), floored(cfs), floored(cfp)};
}

MstCosts resolve_mst(const CostSpec& spec, double ir) {
  if (spec.mode != CostMode::mst) fail(errc::bad_params, "resolve_mst requires algorithm=mst");
  check_ir(ir);
  double cfl = 0, cfn = 0;
  switch (value_form(spec)) {
    case ValueForm::scalar:
      check_positive(spec.scalar, "cost-factor");
      cfl = spec.scalar;
      cfn = 0.5 * spec.scalar;
      break;
    case ValueForm::none:
      cfl = ir;
      cfn = 0.5 * ir;
      break;
    case ValueForm::list:
    case ValueForm::named: {
      std::vector<double> v = spec.list;
      if (v.empty()) v = named_values(spec, {"cfl", "cfn"});
      if (v.size() != 2) fail(errc::bad_arity, "mst cost-factor needs exactly 2 values (cfl, cfn)");
      for (double x : v) check_positive(x, "cost-factor entry");
      if (v[0] < v[1]) fail(errc::order_violation, "mst cost-factor must satisfy cfl >= cfn");
      cfl = v[0];
      cfn = v[1];
      break;
    }
  }
  return {floored(cfl), floored(cfn)};
}

std::vector<double> resolve_gen(const CostSpec& spec, double ir, int k) {
  if (spec.mode != CostMode::neighborhood || spec.scheme != CostScheme::gen)
    fail(errc::bad_params, "resolve_gen requires algorithm=neighborhood, type=gen");
  check_ir(ir);
  if (k < 1) fail(errc::bad_params, "n_neighbors must be >= 1");
  std::vector<double> grades;
  switch (value_form(spec)) {
    case ValueForm::list:
      if (spec.list.size() != static_cast<std::size_t>(k) + 1)
        fail(errc::bad_arity, "gen cost-factor needs exactly k+1 values");
      grades = spec.list;
      for (double x : grades) check_positive(x, "cost-factor entry");
      break;
    case ValueForm::named:
      fail(errc::bad_arity, "gen cost-factor takes a list of k+1 values, not a map");
    case ValueForm::scalar:
      check_positive(spec.scalar, "cost-factor");
      [[fallthrough]];
    case ValueForm::none: {
      double c = spec.has_scalar ? spec.scalar : ir;
      grades.resize(static_cast<std::size_t>(k) + 1);
      for (int j = 0; j <= k; ++j)
        grades[static_cast<std::size_t>(j)] = 1.0 + j * (c - 1.0) / k;
      break;
    }
  }
  for (double& g : grades) g = floored(g);
  return grades;
}

double resolve_original(const CostSpec& spec, double ir) {
  if (spec.mode != CostMode::original) fail(errc::bad_params, "resolve_original requires algorithm=original");
  check_ir(ir);
  switch (value_form(spec)) {
    case ValueForm::scalar:
      check_positive(spec.scalar, "cost-factor");
      return floored(spec.scalar);
    case ValueForm::none:
      return floored(ir);
    default:
      fail(errc::bad_arity, "original cost-factor is a single scalar");
  }
}

ComplexityProfiles compute_profiles(const CostSpec& spec, const Matrix& features,
                                    const std::vector<int>& y) {
  ComplexityProfiles p;
  switch (spec.mode) {
    case CostMode::original:
      break;
    case CostMode::neighborhood:
      p.neighborhood = knn_profiles(features, y, spec.n_neighbors);
      break;
    case CostMode::mst: {
      MstEdgeList mst = build_mst(features);
      p.mst = mst_profiles(mst, y);
      p.linked_majority = linked_majority_indices(mst, y);
      break;
    }
  }
  return p;
}

namespace {

// Validates that the profile indices are exactly the minority instances.
template <typename Profile>
void check_coverage(const std::vector<Profile>& profiles, const std::vector<int>& y) {
  std::vector<char> seen(y.size(), 0);
  for (const Profile& p : profiles) {
    if (p.instance_index < 0 || static_cast<std::size_t>(p.instance_index) >= y.size())
      fail(errc::profile_mismatch, "profile index out of range");
    const auto i = static_cast<std::size_t>(p.instance_index);
    if (y[i] != 1) fail(errc::profile_mismatch, "profile points at a majority instance");
    if (seen[i]) fail(errc::profile_mismatch, "duplicate profile for one instance");
    seen[i] = 1;
  }
  for (std::size_t i = 0; i < y.size(); ++i)
    if (y[i] == 1 && !seen[i]) fail(errc::profile_mismatch, "minority instance has no profile");
}

}  // namespace

WeightVector assign_weights(const CostSpec& spec, const ComplexityProfiles& profiles,
                            const std::vector<int>& y, double ir) {
  for (int label : y)
    if (label != 0 && label != 1) fail(errc::not_binary, "labels must be 0/1");
  if (!(spec.linked_majority_weight > 0.0 && spec.linked_majority_weight <= 1.0))
    fail(errc::bad_params, "linked-majority weight must be in (0, 1]");

  WeightVector w(y.size(), 1.0);
  switch (spec.mode) {
    case CostMode::original: {
      double c = resolve_original(spec, ir);
      for (std::size_t i = 0; i < y.size(); ++i)
        if (y[i] == 1) w[i] = c;
      break;
    }
    case CostMode::neighborhood: {
      check_coverage(profiles.neighborhood, y);
      if (spec.scheme == CostScheme::ins) {
        InsCosts c = resolve_ins(spec, ir);
        for (const NeighborhoodProfile& p : profiles.neighborhood) {
          double v = p.category == Category::border ? c.cfb
                   : p.category == Category::safe   ? c.cfs
                                                    : c.cfp;
          w[static_cast<std::size_t>(p.instance_index)] = v;
        }
      } else {
        std::vector<double> grades = resolve_gen(spec, ir, spec.n_neighbors);
        for (const NeighborhoodProfile& p : profiles.neighborhood) {
          if (p.grade < 0 || static_cast<std::size_t>(p.grade) >= grades.size())
            fail(errc::profile_mismatch, "grade outside 0..k");
          w[static_cast<std::size_t>(p.instance_index)] = grades[static_cast<std::size_t>(p.grade)];
        }
      }
      break;
    }
    case CostMode::mst: {
      check_coverage(profiles.mst, y);
      MstCosts c = resolve_mst(spec, ir);
      for (const MstProfile& p : profiles.mst)
        w[static_cast<std::size_t>(p.instance_index)] = p.linked ? c.cfl : c.cfn;
      if (spec.linked_majority_weight < 1.0) {
        for (int i : profiles.linked_majority) {
          if (i < 0 || static_cast<std::size_t>(i) >= y.size() || y[static_cast<std::size_t>(i)] != 0)
            fail(errc::profile_mismatch, "linked-majority index does not point at a majority instance");
          w[static_cast<std::size_t>(i)] = spec.linked_majority_weight;
        }
      }
      break;
    }
  }
  return w;
}

}  // namespace icost

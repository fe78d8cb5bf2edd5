#pragma once

// Brute-force ground truth over F_q: classify (flag, flag, vector) triples
// into decorated matrices, tabulate the orbits, and compute convolution
// counts directly from the definition.

#include "mirabolic/gfq.hpp"
#include "mirabolic/module_element.hpp"
#include "mirabolic/schur_action.hpp"

#include <array>

namespace mirabolic {

// (A, Delta) for one triple; w is a vector code into F_q^d
DecoratedMatrix classify_triple(const SubspaceTable& table, const FlagRep& f,
                                const FlagRep& fp, int wcode);

// exhaustive classification of X_{n,d} x X_{m,d} x V at one q
struct OrbitTable {
  Context ctx{};
  int q = 2;
  FlagGeometry left;   // n-step flags
  FlagGeometry right;  // m-step flags (same subspace table)
  std::vector<int> cls;  // flattened [fx][fy][w] -> orbit id
  std::vector<DecoratedMatrix> keys;
  std::map<DecoratedMatrix, int> id_of;
  std::vector<Int> sizes;
  struct Rep {
    int fx = 0, fy = 0, w = 0;
  };
  std::vector<Rep> reps;  // first triple met in enumeration order

  int orbit_count() const { return static_cast<int>(keys.size()); }
  int codes() const { return left.table->codes(); }
  int at(int fx, int fy, int w) const {
    return cls[(static_cast<size_t>(fx) * right.flags.size() +
                static_cast<size_t>(fy)) *
                   static_cast<size_t>(codes()) +
               static_cast<size_t>(w)];
  }
  Int total_triples() const {
    return Int(left.flags.size()) * Int(right.flags.size()) * codes();
  }
};

OrbitTable build_orbit_table(Context ctx, int q, WorkBudget& budget,
                             std::shared_ptr<SubspaceTable> table = nullptr);

// e-basis structure constant: the number of (middle flag, vector split)
// pairs landing in orbits x and y, evaluated at one representative of z
Int oracle_convolution_constant(const DecoratedMatrix& x,
                                const DecoratedMatrix& y,
                                const DecoratedMatrix& z, int q,
                                WorkBudget& budget);

// all pair counts for one output orbit at once: key (algebra orbit id,
// module orbit id) -> count of (middle flag, vector split) pairs hitting
// that combination at the representative of target_orbit
std::map<std::pair<int, int>, Int> convolution_profile(const OrbitTable& alg,
                                                       const OrbitTable& mod,
                                                       int target_orbit,
                                                       bool left_side,
                                                       WorkBudget& budget);

// the generator element expanded over characteristic functions: algebra
// orbit id -> Laurent coefficient (normalization weight included)
std::map<int, Laurent> generator_e_coefficients(const OrbitTable& alg,
                                                const GeneratorToken& t,
                                                WeightConvention conv);

// full e-basis expansion of (generator) * e_z (left) or e_z * (generator):
// exact values in Q + Q*sqrt(q)
std::map<DecoratedMatrix, SpecializedValue> oracle_generator_action(
    const OrbitTable& alg, const OrbitTable& mod, const GeneratorToken& t,
    const DecoratedMatrix& z, bool left_side, WeightConvention conv,
    WorkBudget& budget);

// convenience form that builds the tables itself
std::map<DecoratedMatrix, SpecializedValue> oracle_generator_action(
    const GeneratorToken& t, const DecoratedMatrix& z, int q, bool left_side,
    WeightConvention conv, WorkBudget& budget);

}  // namespace mirabolic

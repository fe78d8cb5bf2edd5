#pragma once

// Exact linear algebra over the prime fields F_q (q in {2, 3, 5}) at desk
// scale: canonical subspaces in reduced row echelon form, partial flags, and
// the work budget that keeps brute-force enumeration bounded.

#include "mirabolic/laurent.hpp"

#include <bitset>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace mirabolic {

struct ScaleExceeded : std::runtime_error {
  ScaleExceeded(const std::string& what) : std::runtime_error(what) {}
};

// hard caps for the brute-force engine: q^d member codes must fit the mask
constexpr int kMaxAmbientDim = 4;
constexpr size_t kMaxVectorCodes = 1024;
using MemberMask = std::bitset<kMaxVectorCodes>;

bool is_supported_prime(int q);  // {2, 3, 5}

// vectors in F_q^d are encoded as base-q integers, digit i = coordinate i
int vec_code(const std::vector<int>& x, int q);
std::vector<int> vec_decode(int code, int d, int q);
int code_add(int a, int b, int d, int q);
int code_sub(int a, int b, int d, int q);
int code_scale(int a, int s, int d, int q);

// gaussian elimination to the canonical reduced row echelon form; zero rows
// are removed, pivot columns strictly increase, pivots are 1 with zeros above
std::vector<std::vector<int>> rref(std::vector<std::vector<int>> rows, int q);

// one subspace of F_q^d: canonical basis plus the bitmask of member codes
struct SubspaceRref {
  int d = 0;
  int q = 2;
  int dim = 0;
  std::vector<std::vector<int>> basis;
  MemberMask members;

  bool operator==(const SubspaceRref& o) const {
    return d == o.d && q == o.q && basis == o.basis;
  }
  std::string str() const;
};

SubspaceRref make_subspace(int d, int q,
                           const std::vector<std::vector<int>>& span_rows);
SubspaceRref subspace_intersect(const SubspaceRref& a, const SubspaceRref& b);
SubspaceRref subspace_sum(const SubspaceRref& a, const SubspaceRref& b);
bool subspace_contains(const SubspaceRref& outer, const SubspaceRref& inner);

// all subspaces of F_q^d in deterministic order (by dimension, then pivot
// pattern, then filling), with id-level lattice operations memoized
class SubspaceTable {
 public:
  SubspaceTable(int d, int q);

  int d() const { return d_; }
  int q() const { return q_; }
  int codes() const { return codes_; }  // q^d
  int size() const { return static_cast<int>(subs_.size()); }
  const SubspaceRref& operator[](int id) const {
    return subs_[static_cast<size_t>(id)];
  }
  int zero_id() const { return zero_id_; }
  int full_id() const { return full_id_; }

  int id_of_rref(const std::vector<std::vector<int>>& rows) const;
  int id_of_span(const std::vector<std::vector<int>>& rows) const;

  int intersect(int a, int b) const;
  int sum(int a, int b) const;
  bool contains(int outer, int inner) const;
  bool member(int id, int code) const {
    return subs_[static_cast<size_t>(id)].members[static_cast<size_t>(code)];
  }
  int dim(int id) const { return subs_[static_cast<size_t>(id)].dim; }

 private:
  int d_, q_, codes_;
  std::vector<SubspaceRref> subs_;
  std::map<std::vector<int>, int> index_;  // flattened RREF -> id
  int zero_id_ = -1, full_id_ = -1;
  mutable std::map<std::pair<int, int>, int> meet_cache_, join_cache_;
};

// ascending chain of subspace ids of length n, last = full space
struct FlagRep {
  std::vector<int> steps;
};

struct FlagGeometry {
  int n = 1, d = 0, q = 2;
  std::shared_ptr<SubspaceTable> table;
  std::vector<FlagRep> flags;
};

// work accounting in elementary enumeration units (triples visited);
// limit <= 0 means unlimited
struct WorkBudget {
  Int limit = 0;
  Int used = 0;
  void charge(const Int& amount);
};
Int default_work_limit();  // MIRABOLIC_MAX_WORK env override, else built-in

FlagGeometry enumerate_flags(int d, int q, int n, WorkBudget& budget,
                             std::shared_ptr<SubspaceTable> table = nullptr);

}  // namespace mirabolic

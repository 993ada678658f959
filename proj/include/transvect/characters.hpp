#pragma once

#include "transvect/rational.hpp"

#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace transvect {

/// Weight k -> multiplicity for a torus of SL2.
using WeightVector = std::map<int, Integer>;

/// m -> multiplicity of the irreducible S_m.
using IrrDecomp = std::map<int, Integer>;

class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  int size() const;
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Character of S_r(S_d): multisets of size r from the weights {d, d-2, ..., -d}.
WeightVector plethysm_weights(int r, int d);

/// Multiplicity of S_m is w(m) - w(m+2). Throws std::domain_error if that
/// ever goes negative or w is not symmetric.
IrrDecomp decompose(const WeightVector& w);

WeightVector character_of(const IrrDecomp& irr);
Integer dimension(const IrrDecomp& irr);

/// Restriction of S_2(S_{re}) to two variables: S_{rd-4p} for p = 0 .. floor(re/2).
IrrDecomp ox_char(int r, int e);

/// [S_r(S_d)] - [ox_char(r, d/2)]; d even. Throws std::domain_error if a
/// multiplicity goes negative.
IrrDecomp ideal_char(int r, int d);

/// Hook content formula; 0 when lambda has more than n parts.
Integer schur_dim(const Partition& lambda, int n);

struct TernaryDimReport {
  Integer plethysm;   // dim S_3(S_4) over three variables
  Integer ox_part;    // sum over p of dim S_(12-2p, 2p)
  Integer ideal_part; // the five generator modules
  bool pass() const { return plethysm == ox_part + ideal_part; }
};

TernaryDimReport ternary_dim_report();
bool ternary_dim_check();

/// "S18 S14 ..." in decreasing m, with a multiplicity prefix when above one ("2S12").
std::string to_string(const IrrDecomp& irr);

} // namespace transvect

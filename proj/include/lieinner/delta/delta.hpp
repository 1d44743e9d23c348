#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lieinner/exact/matrix.hpp"

namespace lieinner {

enum class Family { A, B, C, D, E6, E7, E8, F4, G2 };

std::string to_string(Family f);
Family parse_family(const std::string& name);

struct RootType {
  Family family;
  std::size_t rank;

  // Validates the rank: A >= 1, B >= 3, C >= 2, D >= 4, exceptional fixed.
  static RootType make(Family family, std::size_t rank);
  // Exceptional families may omit the rank (pass 0).
  static RootType parse(const std::string& family, std::size_t rank);

  bool is_classical() const;
  friend bool operator==(const RootType&, const RootType&) = default;
};

std::string to_string(const RootType& t);

// Coefficients in the fundamental-weight basis.
struct Weight {
  RootType type;
  std::vector<std::int64_t> coords;

  Weight(RootType type, std::vector<std::int64_t> coords);
  static Weight zero(RootType type);
  static Weight fundamental(RootType type, std::size_t i);  // omega_{i+1}
  bool is_dominant() const;
  Weight operator+(const Weight& other) const;
};

struct DeltaVector {
  RootType type;
  std::vector<Scalar> values;  // delta(omega_i)
};

// Cartan matrix C_ij = <alpha_i, alpha_j^vee>, Bourbaki numbering, so that
// alpha_i = sum_j C_ij omega_j.
Matrix cartan_matrix(const RootType& t);

// Simple root alpha_{j+1} in fundamental-weight coordinates.
Weight simple_root(const RootType& t, std::size_t j);

DeltaVector delta_table(const RootType& t);

Scalar delta_of_weight(const Weight& w);
Scalar delta_of_simple_root(const RootType& t, std::size_t j);
std::vector<Scalar> delta_of_simple_roots(const RootType& t);

enum class ModuleClass { Trivial, Diagonal, NonDiagonal };
std::string to_string(ModuleClass c);

struct ModuleClassification {
  Scalar delta;
  ModuleClass kind;
  bool valid;  // the classification is only asserted for rank > 10
};

// delta of the module with the given dominant highest weight. Throws
// std::invalid_argument for a non-dominant weight.
Scalar delta_of_module(const Weight& highest);
ModuleClassification classify_module(const Weight& highest);

}  // namespace lieinner

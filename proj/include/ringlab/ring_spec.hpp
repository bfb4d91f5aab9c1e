#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ringlab/finite_ring.hpp"

namespace ringlab {

// Declarative ring description. Constructors:
//   zmod(n)                      residues 0..n-1
//   matrix(k, base)              k x k matrices over base
//   upper_triangular(k, base)    k x k upper triangular matrices over base
//   product(factors...)          direct product
//   quotient(base, generators)   base modulo the two-sided ideal the
//                                generators produce
//   table(n, add, mul, one)      raw tables, fully validated
struct RingSpec {
  enum class Kind { zmod, matrix, upper_triangular, product, quotient, table };

  Kind kind = Kind::zmod;
  int n = 0;                        // zmod modulus or table size
  int k = 0;                        // matrix dimension
  std::vector<RingSpec> children;   // base (matrix/upper_triangular/quotient)
                                    // or factors (product)
  std::vector<int> ideal_generators;  // quotient
  std::vector<int32_t> add, mul;      // table, row-major n*n
  int one = 0;                        // table

  static RingSpec zmod(int n);
  static RingSpec matrix(int k, RingSpec base);
  static RingSpec upper_triangular(int k, RingSpec base);
  static RingSpec product(std::vector<RingSpec> factors);
  static RingSpec quotient(RingSpec base, std::vector<int> gens);
};

struct BuildCaps {
  // Refuse rings larger than this in full-analysis contexts.
  int full_analysis = 512;
  // Hard arithmetic ceiling: build() refuses anything larger.
  int arithmetic_only = 65536;
};

// Materializes the spec into tables. Element enumeration orders:
//   zmod             residues ascending
//   matrix           row-major lexicographic over base element indices
//   upper_triangular row-major lexicographic over the on-or-above-diagonal
//                    entries (most significant first)
//   product          lexicographic over the factors (first factor most
//                    significant)
//   quotient         cosets sorted by minimal representative
// Zero is index 0 in every ordering. Composed results and raw tables within
// the full-analysis cap are validated against all ring axioms; throws
// SizeCapExceeded / InvalidTable.
FiniteRing build(const RingSpec& spec, const BuildCaps& caps = {});

// JSON round trip. Field names: type, n, k, base, factors, ideal_generators,
// add, mul, one. `add`/`mul` accept either row-major flat lists of n*n
// integers or nested n lists of n; serialization emits nested rows.
RingSpec parse_ring_spec(const nlohmann::json& j);
RingSpec load_ring_spec(const std::string& path);
nlohmann::ordered_json to_json(const RingSpec& spec);

}  // namespace ringlab

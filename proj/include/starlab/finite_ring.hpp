#pragma once

// Exhaustive oracle over M_n(Z_p) for tiny n, p. Everything here is decided
// from the definitions by enumeration, using index-based operation tables;
// nothing calls the solver or the orders module.

#include <cstdint>
#include <string>
#include <vector>

#include "starlab/inverses.hpp"
#include "starlab/matrix.hpp"
#include "starlab/orders.hpp"

namespace starlab {

inline constexpr std::uint64_t kDefaultLabCap = 81;

/// kDefaultLabCap, or the value of STAR_ORDER_LAB_CAP when set.
/// Throws ParseError on a malformed value.
std::uint64_t lab_cap();

using Index = std::uint32_t;

class FiniteRingUniverse {
 public:
  /// All n x n matrices over a prime field, lexicographically enumerated.
  /// Throws PreconditionError for infinite rings or more than `cap` elements.
  FiniteRingUniverse(const RingSpec& ring, std::size_t n, std::uint64_t cap = lab_cap());

  const RingSpec& ring() const { return ring_; }
  std::size_t n() const { return n_; }
  std::size_t size() const { return elements_.size(); }
  const Mat& element(Index i) const { return elements_[i]; }
  Index index(const Mat& x) const;

  Index mul(Index x, Index y) const { return mul_[x * size() + y]; }
  Index adj(Index x) const { return adj_[x]; }
  Index zero() const { return 0; }

 private:
  RingSpec ring_;
  std::size_t n_;
  std::vector<Mat> elements_;
  std::vector<Index> mul_;
  std::vector<Index> adj_;
};

/// {x : x satisfies the equations of spec for a}, sorted by index.
std::vector<Index> brute_class(const FiniteRingUniverse& u, Index a, const ClassSpec& spec);
std::vector<Index> brute_class(const FiniteRingUniverse& u, const Mat& a, const ClassSpec& spec);

/// a in the relation's existence set, by enumeration. For star this is R-dagger.
bool brute_in_domain(const FiniteRingUniverse& u, OrderRelation rel, Index a);

struct OrderTable {
  OrderRelation relation;
  std::size_t size = 0;
  std::vector<std::uint8_t> bits;      // bits[a * size + b]
  std::vector<std::uint8_t> in_domain; // existence set membership of a

  bool at(Index a, Index b) const { return bits[a * size + b] != 0; }
};

/// Definition-level table: existential witnesses and one-sided ideals are
/// enumerated over the whole universe; star uses the two-Gram form. Rows are
/// filled in parallel stripes.
OrderTable order_table(OrderRelation rel, const FiniteRingUniverse& u);

/// "a_index,b_index,rel,holds" header plus one line per pair.
std::string to_csv(const OrderTable& t);

struct AxiomsReport {
  std::size_t domain_size = 0;
  bool reflexive = true;
  bool antisymmetric = true;
  bool transitive = true;
  std::vector<std::string> counterexamples;  // first few, with indices and matrices
  bool ok() const { return reflexive && antisymmetric && transitive; }
};

/// Reflexivity, antisymmetry and transitivity on the existence set.
AxiomsReport axioms_report(const OrderTable& t, const FiniteRingUniverse& u);
AxiomsReport axioms_report(OrderRelation rel, const FiniteRingUniverse& u);

/// DOT digraph of the covering relation on the existence set; nodes are
/// named by enumeration index. Throws InvariantViolation if the axioms fail.
std::string hasse(OrderRelation rel, const FiniteRingUniverse& u);
/// Number of covering edges (the "->" lines of hasse()).
std::size_t hasse_edge_count(OrderRelation rel, const FiniteRingUniverse& u);

}  // namespace starlab

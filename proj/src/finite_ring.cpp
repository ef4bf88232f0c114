#include "starlab/finite_ring.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "starlab/errors.hpp"

namespace starlab {

namespace {

using Bits = std::vector<std::uint8_t>;

bool subset(const Bits& x, const Bits& y) {
  for (std::size_t k = 0; k < x.size(); ++k)
    if (x[k] && !y[k]) return false;
  return true;
}

// {x y : y} (right ideal) or {y x : y} (left ideal) as a bitset.
std::vector<Bits> ideals(const FiniteRingUniverse& u, bool right) {
  const std::size_t n = u.size();
  std::vector<Bits> out(n, Bits(n, 0));
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) out[x][right ? u.mul(x, y) : u.mul(y, x)] = 1;
  return out;
}

bool in_class(const FiniteRingUniverse& u, Index a, Index x, const ClassSpec& spec) {
  const Index ax = u.mul(a, x);
  const Index xa = u.mul(x, a);
  if (spec.has(1) && u.mul(ax, a) != a) return false;
  if (spec.has(2) && u.mul(xa, x) != x) return false;
  if (spec.has(3) && u.adj(ax) != ax) return false;
  if (spec.has(4) && u.adj(xa) != xa) return false;
  return true;
}

ClassSpec witness_class(OrderRelation rel) {
  switch (rel) {
    case OrderRelation::minus: return {1};
    case OrderRelation::one_mp: return {1, 2, 3};
    case OrderRelation::mp_one: return {1, 2, 4};
    default: return {1};
  }
}

ClassSpec domain_class(OrderRelation rel) {
  return rel == OrderRelation::star ? ClassSpec{1, 2, 3, 4} : existence_class(rel);
}

std::string describe(const FiniteRingUniverse& u, Index i) {
  return std::to_string(i) + " " + to_string(u.element(i));
}

}  // namespace

std::uint64_t lab_cap() {
  const char* env = std::getenv("STAR_ORDER_LAB_CAP");
  if (env == nullptr || *env == '\0') return kDefaultLabCap;
  const std::string s(env);
  if (!std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }) || s.size() > 18)
    throw ParseError("STAR_ORDER_LAB_CAP must be a positive integer, got '" + s + "'");
  const std::uint64_t cap = std::stoull(s);
  if (cap == 0) throw ParseError("STAR_ORDER_LAB_CAP must be positive");
  return cap;
}

FiniteRingUniverse::FiniteRingUniverse(const RingSpec& ring, std::size_t n, std::uint64_t cap)
    : ring_(ring), n_(n) {
  if (!ring.is_finite()) throw PreconditionError("finite ring lab needs a prime field");
  if (n == 0) throw ShapeError("finite ring lab: matrix size must be positive");
  const std::uint64_t size = universe_size(ring, n, n, cap);
  if (size == 0)
    throw PreconditionError("M_" + std::to_string(n) + "(" + to_string(ring) +
                            ") exceeds the finite ring cap of " + std::to_string(cap) +
                            " elements (STAR_ORDER_LAB_CAP)");
  elements_.reserve(size);
  for (std::uint64_t k = 0; k < size; ++k) elements_.push_back(matrix_from_index(ring, n, n, k));
  mul_.resize(size * size);
  adj_.resize(size);
  for (Index x = 0; x < size; ++x) {
    adj_[x] = static_cast<Index>(index_of(adjoint(elements_[x])));
    for (Index y = 0; y < size; ++y) {
      mul_[x * size + y] = static_cast<Index>(index_of(elements_[x] * elements_[y]));
    }
  }
}

Index FiniteRingUniverse::index(const Mat& x) const {
  if (!(x.ring() == ring_) || x.rows() != n_ || x.cols() != n_)
    throw ShapeError("matrix is not an element of this universe");
  return static_cast<Index>(index_of(x));
}

std::vector<Index> brute_class(const FiniteRingUniverse& u, Index a, const ClassSpec& spec) {
  std::vector<Index> out;
  for (Index x = 0; x < u.size(); ++x)
    if (in_class(u, a, x, spec)) out.push_back(x);
  return out;
}

std::vector<Index> brute_class(const FiniteRingUniverse& u, const Mat& a, const ClassSpec& spec) {
  return brute_class(u, u.index(a), spec);
}

bool brute_in_domain(const FiniteRingUniverse& u, OrderRelation rel, Index a) {
  const ClassSpec spec = domain_class(rel);
  for (Index x = 0; x < u.size(); ++x)
    if (in_class(u, a, x, spec)) return true;
  return false;
}

OrderTable order_table(OrderRelation rel, const FiniteRingUniverse& u) {
  const std::size_t n = u.size();
  OrderTable t{rel, n, Bits(n * n, 0), Bits(n, 0)};
  const bool gram_rel = rel == OrderRelation::left_star || rel == OrderRelation::right_star ||
                        rel == OrderRelation::star;
  std::vector<Bits> right_ideal, left_ideal;
  if (rel == OrderRelation::left_star) right_ideal = ideals(u, true);
  if (rel == OrderRelation::right_star) left_ideal = ideals(u, false);

  auto fill_row = [&](Index a) {
    t.in_domain[a] = brute_in_domain(u, rel, a);
    const Index as = u.adj(a);
    if (gram_rel) {
      const Index gram_l = u.mul(as, a);
      const Index gram_r = u.mul(a, as);
      for (Index b = 0; b < n; ++b) {
        bool ok = true;
        if (rel != OrderRelation::right_star) ok = ok && u.mul(as, b) == gram_l;
        if (rel != OrderRelation::left_star) ok = ok && u.mul(b, as) == gram_r;
        if (rel == OrderRelation::left_star) ok = ok && subset(right_ideal[a], right_ideal[b]);
        if (rel == OrderRelation::right_star) ok = ok && subset(left_ideal[a], left_ideal[b]);
        t.bits[a * n + b] = ok;
      }
      return;
    }
    const auto gs = brute_class(u, a, witness_class(rel));
    for (Index b = 0; b < n; ++b)
      t.bits[a * n + b] = std::any_of(gs.begin(), gs.end(), [&](Index g) {
        return u.mul(a, g) == u.mul(b, g) && u.mul(g, a) == u.mul(g, b);
      });
  };

  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), 8));
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t a = w; a < n; a += workers) fill_row(static_cast<Index>(a));
    });
  for (auto& th : pool) th.join();
  return t;
}

std::string to_csv(const OrderTable& t) {
  std::ostringstream os;
  os << "a_index,b_index,rel,holds\n";
  const std::string rel = to_string(t.relation);
  for (std::size_t a = 0; a < t.size; ++a)
    for (std::size_t b = 0; b < t.size; ++b)
      os << a << ',' << b << ',' << rel << ',' << (t.bits[a * t.size + b] ? "true" : "false") << '\n';
  return os.str();
}

AxiomsReport axioms_report(const OrderTable& t, const FiniteRingUniverse& u) {
  AxiomsReport r;
  std::vector<Index> dom;
  for (Index a = 0; a < t.size; ++a)
    if (t.in_domain[a]) dom.push_back(a);
  r.domain_size = dom.size();
  auto note = [&](std::string s) {
    if (r.counterexamples.size() < 5) r.counterexamples.push_back(std::move(s));
  };
  for (Index a : dom)
    if (!t.at(a, a)) {
      r.reflexive = false;
      note("reflexivity fails at " + describe(u, a));
    }
  for (Index a : dom)
    for (Index b : dom)
      if (a < b && t.at(a, b) && t.at(b, a)) {
        r.antisymmetric = false;
        note("antisymmetry fails at " + describe(u, a) + " / " + describe(u, b));
      }
  for (Index a : dom)
    for (Index b : dom) {
      if (!t.at(a, b)) continue;
      for (Index c : dom)
        if (t.at(b, c) && !t.at(a, c)) {
          r.transitive = false;
          note("transitivity fails at " + describe(u, a) + " / " + describe(u, b) + " / " +
               describe(u, c));
        }
    }
  return r;
}

AxiomsReport axioms_report(OrderRelation rel, const FiniteRingUniverse& u) {
  return axioms_report(order_table(rel, u), u);
}

namespace {

std::vector<std::pair<Index, Index>> covering_edges(const OrderTable& t) {
  std::vector<Index> dom;
  for (Index a = 0; a < t.size; ++a)
    if (t.in_domain[a]) dom.push_back(a);
  std::vector<std::pair<Index, Index>> edges;
  for (Index a : dom)
    for (Index b : dom) {
      if (a == b || !t.at(a, b)) continue;
      const bool covered = std::none_of(dom.begin(), dom.end(), [&](Index c) {
        return c != a && c != b && t.at(a, c) && t.at(c, b);
      });
      if (covered) edges.emplace_back(a, b);
    }
  return edges;
}

OrderTable checked_table(OrderRelation rel, const FiniteRingUniverse& u) {
  OrderTable t = order_table(rel, u);
  const AxiomsReport r = axioms_report(t, u);
  if (!r.ok()) {
    std::string msg = to_string(rel) + " is not a partial order on its existence set";
    for (const auto& c : r.counterexamples) msg += "; " + c;
    throw InvariantViolation(msg);
  }
  return t;
}

}  // namespace

std::string hasse(OrderRelation rel, const FiniteRingUniverse& u) {
  const OrderTable t = checked_table(rel, u);
  std::ostringstream os;
  os << "digraph \"" << to_string(rel) << " M_" << u.n() << "(" << to_string(u.ring()) << ")\" {\n";
  for (Index a = 0; a < t.size; ++a)
    if (t.in_domain[a]) os << "  n" << a << " [label=\"" << to_string(u.element(a)) << "\"];\n";
  for (const auto& [a, b] : covering_edges(t)) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::size_t hasse_edge_count(OrderRelation rel, const FiniteRingUniverse& u) {
  return covering_edges(checked_table(rel, u)).size();
}

}  // namespace starlab

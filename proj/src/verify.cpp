#include "starlab/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <sstream>

#include "starlab/blocks.hpp"
#include "starlab/errors.hpp"
#include "starlab/finite_ring.hpp"
#include "starlab/inverses.hpp"
#include "starlab/orders.hpp"
#include "starlab/random.hpp"

namespace starlab {

namespace {

using R = OrderRelation;

struct Outcome {
  enum Kind { pass, fail, skip } kind;
  std::string detail;
};

Outcome passed() { return {Outcome::pass, ""}; }
Outcome skipped() { return {Outcome::skip, ""}; }
Outcome failed(std::string what) { return {Outcome::fail, std::move(what)}; }

std::string show(const char* name, const Mat& x) { return std::string(name) + " = " + to_string(x); }

struct Ctx {
  Rng& rng;
  const RingSpec& ring;
  std::size_t max_dim;

  std::size_t dim() {
    const std::size_t hi = ring.is_finite() ? std::min<std::size_t>(max_dim, 3) : max_dim;
    return static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(hi)));
  }
  Mat matrix(std::size_t m, std::size_t n) { return random_mixed_rank(m, n, ring, rng, 3); }
  std::pair<std::size_t, std::size_t> shape() {
    const std::size_t m = dim();
    const std::size_t n = dim();
    return {m, n};
  }
  Mat matrix() {
    const auto [m, n] = shape();
    return matrix(m, n);
  }
};

// A pair related by the chosen star order (through upper_sample), or none
// when the drawn a has no suitable inverse.
std::optional<std::pair<Mat, Mat>> related_pair(Ctx& c, std::size_t m, std::size_t n, Side side) {
  const Mat a = c.matrix(m, n);
  const auto gs = sample_class(a, side == Side::left ? ClassSpec{1, 2, 3} : ClassSpec{1, 2, 4}, 1, c.rng);
  if (gs.empty()) return std::nullopt;
  return std::pair{a, upper_sample(a, gs.front(), random_matrix(m, n, c.ring, c.rng, 3), side)};
}

std::optional<std::pair<Mat, Mat>> related_pair(Ctx& c, std::pair<std::size_t, std::size_t> mn,
                                                Side side) {
  return related_pair(c, mn.first, mn.second, side);
}

std::pair<Mat, Mat> mixed_pair(Ctx& c, std::size_t m, std::size_t n) {
  if (c.rng.coin()) {
    const Side side = c.rng.coin() ? Side::left : Side::right;
    if (auto p = related_pair(c, m, n, side)) return *p;
  }
  return {c.matrix(m, n), c.matrix(m, n)};
}

std::pair<Mat, Mat> mixed_pair(Ctx& c, std::pair<std::size_t, std::size_t> mn) {
  return mixed_pair(c, mn.first, mn.second);
}

IdempotentDecomposition random_decomposition(Ctx& c, std::size_t n) {
  Mat s = random_matrix(n, n, c.ring, c.rng, 3);
  while (rank(s) != n) s = random_matrix(n, n, c.ring, c.rng, 3);
  const Mat si = *solve_class(s, {1});
  const auto k = static_cast<std::size_t>(c.rng.uniform(1, static_cast<std::int64_t>(n)));
  IdempotentDecomposition d;
  for (std::size_t part = 0; part < k; ++part) {
    Mat dk = Mat::zero(c.ring, n, n);
    for (std::size_t i = 0; i < n; ++i)
      if (i % k == part) dk(i, i) = Scalar::one(c.ring);
    d.parts.push_back(s * dk * si);
  }
  return d;
}

// --- inverses ---------------------------------------------------------------

Outcome prop_penrose(Ctx& c) {
  const Mat a = c.matrix();
  const auto mp = moore_penrose(a);
  if (!mp) return class_exists(a, {1, 3, 4}) ? failed("MP missing although a{1,3,4} is nonempty; " + show("a", a)) : skipped();
  if (!(a * *mp * a == a && *mp * a * *mp == *mp && is_self_adjoint(a * *mp) &&
        is_self_adjoint(*mp * a)))
    return failed("Penrose equations fail; " + show("a", a) + ", " + show("x", *mp));
  if (!(solve_class(a, {1, 2, 3, 4}) == mp)) return failed("solve_class disagrees with MP; " + show("a", a));
  return passed();
}

Outcome prop_one_mp(Ctx& c) {
  const Mat a = c.matrix();
  const auto ad = moore_penrose(a);
  if (!ad) return skipped();
  const Mat am = sample_class(a, {1}, 1, c.rng).front();
  const Mat g = one_mp(a, am);
  if (!(g * a * g == g && a * g == a * *ad && satisfies(a, g, {1, 2, 3})))
    return failed("1MP output outside a{1,2,3}; " + show("a", a) + ", " + show("a-", am));
  const Mat h = *solve_class(a, {1, 2, 3});
  if (!(h == h * a * *ad)) return failed("g != g a a^dagger; " + show("a", a) + ", " + show("g", h));
  return passed();
}

Outcome prop_123_characterizations(Ctx& c) {
  const std::size_t m = c.dim();
  const std::size_t n = c.dim();
  const Mat a = c.matrix(m, n);
  if (!class_exists(a, {1, 3})) return skipped();
  const Mat am = sample_class(a, {1}, 1, c.rng).front();
  const Mat a13 = sample_class(a, {1, 3}, 1, c.rng).front();
  if (!satisfies(a, am * a * a13, {1, 2, 3}))
    return failed("a{1} a a{1,3} not inside a{1,2,3}; " + show("a", a));
  const Mat h = *solve_class(a, {1, 2, 3});
  const Mat g = sample_class(a, {1, 2, 3}, 1, c.rng).front();
  const auto w = solve_construct_123(a, h, g);
  if (!w || !(construct_123(a, h, *w) == g))
    return failed("construct_123 misses a member; " + show("a", a) + ", " + show("g", g));
  if (!(from_gram_left(a, g * adjoint(g)) == g))
    return failed("g != (g g*) a*; " + show("a", a) + ", " + show("g", g));
  const Mat gram = adjoint(a) * a;
  const Mat gi = sample_class(gram, {1}, 1, c.rng).front();
  if (!satisfies(a, from_gram_left(a, gi), {1, 2, 3}))
    return failed("G a* outside a{1,2,3}; " + show("a", a) + ", " + show("G", gi));
  return passed();
}

Outcome prop_least_squares(Ctx& c) {
  if (c.ring.is_finite()) return skipped();
  const std::size_t m = c.dim();
  const std::size_t n = c.dim();
  const Mat a = c.matrix(m, n);
  const Mat g = sample_class(a, {1, 3}, 1, c.rng).front();
  const Mat b = random_matrix(m, 1, c.ring, c.rng, 3);
  const Rational best = norm2(a * (g * b) - b);
  for (int k = 0; k < 20; ++k) {
    const Mat x = random_matrix(n, 1, c.ring, c.rng, 3);
    if (norm2(a * x - b) < best)
      return failed("residual beaten; " + show("a", a) + ", " + show("b", b) + ", " + show("x", x));
  }
  const Mat gm = sample_class(a, {1, 4}, 1, c.rng).front();
  const Mat rhs = a * random_matrix(n, 1, c.ring, c.rng, 3);
  const Mat x0 = gm * rhs;
  if (!(a * x0 == rhs)) return failed("{1,4} solution does not solve; " + show("a", a));
  const auto kernel = null_space(a);
  for (int k = 0; k < 20; ++k) {
    Mat x = x0;
    for (const auto& v : kernel) x += random_scalar(c.rng, c.ring, 3) * v;
    if (norm2(x) < norm2(x0))
      return failed("norm beaten; " + show("a", a) + ", " + show("x", x));
  }
  return passed();
}

Outcome prop_dual_transport(Ctx& c) {
  const Mat a = c.matrix();
  const auto gs = sample_class(a, {1, 2, 3}, 1, c.rng);
  if (gs.empty()) return skipped();
  if (!satisfies(adjoint(a), dual_transport(gs.front()), {1, 2, 4}))
    return failed("g* outside a*{1,2,4}; " + show("a", a) + ", " + show("g", gs.front()));
  return passed();
}

// --- orders -----------------------------------------------------------------

Outcome prop_route_agreement(Ctx& c) {
  const auto [a, b] = mixed_pair(c, c.shape());
  for (R rel : kAllRelations)
    if (holds(rel, a, b, Route::characterization) != holds(rel, a, b, Route::feasibility))
      return failed(to_string(rel) + " routes disagree; " + show("a", a) + ", " + show("b", b));
  return passed();
}

Outcome prop_one_mp_left_star(Ctx& c) {
  const auto [a, b] = mixed_pair(c, c.shape());
  bool any = false;
  if (in_existence_set(R::left_star, a)) {
    any = true;
    if (holds(R::one_mp, a, b) != holds(R::left_star, a, b))
      return failed("one-mp != left-star; " + show("a", a) + ", " + show("b", b));
  }
  if (in_existence_set(R::right_star, a)) {
    any = true;
    if (holds(R::mp_one, a, b) != holds(R::right_star, a, b))
      return failed("mp-one != right-star; " + show("a", a) + ", " + show("b", b));
  }
  return any ? passed() : skipped();
}

Outcome prop_order_laws(Ctx& c) {
  const auto [a, b] = mixed_pair(c, c.shape());
  const bool ls = holds(R::left_star, a, b);
  const bool rs = holds(R::right_star, a, b);
  const std::string ab = show("a", a) + ", " + show("b", b);
  // Outside the existence set (e.g. a*a = 0 over Z_2) the implication can fail.
  const bool dom = (ls && in_existence_set(R::left_star, a)) || (rs && in_existence_set(R::right_star, a));
  if (dom && !holds(R::minus, a, b)) return failed("one-sided star without minus; " + ab);
  if (ls != holds(R::left_star, b - a, b)) return failed("difference law fails; " + ab);
  if (ls != holds(R::right_star, adjoint(a), adjoint(b))) return failed("involution duality fails; " + ab);
  return passed();
}

Outcome prop_star_conjunction(Ctx& c) {
  const auto [a, b] = mixed_pair(c, c.shape());
  const auto ad = moore_penrose(a);
  if (!ad) return skipped();
  const bool both = holds(R::left_star, a, b) && holds(R::right_star, a, b);
  const std::string ab = show("a", a) + ", " + show("b", b);
  if (holds(R::star, a, b) != both) return failed("star != left-star and right-star; " + ab);
  if (star_drazin(a, b) != both) return failed("two-Gram form != conjunction; " + ab);
  if ((adjoint(a) * a == adjoint(a) * b) != (*ad * a == *ad * b)) return failed("Gram/MP equivalence fails; " + ab);
  return passed();
}

Outcome prop_witnesses(Ctx& c) {
  const std::size_t m = c.dim();
  const std::size_t n = c.dim();
  const Side side = c.rng.coin() ? Side::left : Side::right;
  const auto pr = related_pair(c, m, n, side);
  if (!pr) return skipped();
  const auto& [a, b] = *pr;
  const Witness w = side == Side::left ? left_star_witness(a, b) : right_star_witness(a, b);
  const Checks cs = witness_checks(a, b, w, side);
  const std::string ab = show("a", a) + ", " + show("b", b);
  if (!all_ok(cs)) return failed("witness fails [" + failures(cs) + "]; " + ab);
  if (!(upper_sample(a, w.g, b - a, side) == b)) return failed("upper set form misses b; " + ab);
  const Mat h = *solve_class(a, side == Side::left ? ClassSpec{1, 2, 3} : ClassSpec{1, 2, 4});
  upper_structure(a, b, h, side);
  return passed();
}

Outcome prop_inclusion(Ctx& c) {
  const std::size_t m = c.dim();
  const std::size_t n = c.dim();
  const auto [a, b] = mixed_pair(c, m, n);
  if (!class_exists(a, {1, 3}) || !class_exists(b, {1, 3})) return skipped();
  const bool t = inclusion_13(a, b, InclusionMode::theorem).included;
  const std::string ab = show("a", a) + ", " + show("b", b);
  if (inclusion_13(a, b, InclusionMode::critical).included != t)
    return failed("critical inclusion disagrees with left-star; " + ab);
  if (t && !inclusion_13(a, b, InclusionMode::randomized, {8, c.rng.next()}).included)
    return failed("sampled member of b{1,3} outside a{1,3}; " + ab);
  if (t && !t_condition(a, b, 4, c.rng.next())) return failed("(T)-condition fails; " + ab);
  return passed();
}

// --- decompositions ---------------------------------------------------------

Outcome prop_triple(Ctx& c) {
  const Side side = c.rng.coin() ? Side::left : Side::right;
  const auto pr = related_pair(c, c.shape(), side);
  if (!pr) return skipped();
  const auto& [a, b] = *pr;
  const auto hs = sample_class(b, side == Side::left ? ClassSpec{1, 2, 3} : ClassSpec{1, 2, 4}, 1, c.rng);
  if (hs.empty()) return skipped();
  const auto d = simultaneous_decomposition(a, b, hs.front(), side);
  const Checks cs = decomposition_checks(a, b, d, side);
  if (!all_ok(cs))
    return failed("decomposition fails [" + failures(cs) + "]; " + show("a", a) + ", " + show("b", b));
  return passed();
}

Outcome prop_block_laws(Ctx& c) {
  const std::size_t m = c.dim();
  const std::size_t n = c.dim();
  const std::size_t k = c.dim();
  const auto e = random_decomposition(c, m);
  const auto f = random_decomposition(c, n);
  const auto g = random_decomposition(c, k);
  const Mat x = random_matrix(m, n, c.ring, c.rng, 3);
  const Mat z = random_matrix(n, k, c.ring, c.rng, 3);
  const BlockView bx = blocks(x, e, f);
  if (!(assemble(bx) == x)) return failed("reassembly fails; " + show("x", x));
  if (!(block_product(bx, blocks(z, f, g)).blocks == blocks(x * z, e, g).blocks))
    return failed("product law fails; " + show("x", x) + ", " + show("z", z));
  const BlockView adj = block_adjoint(bx);
  if (!(adj.blocks == blocks(adjoint(x), adj.row_decomp, adj.col_decomp).blocks))
    return failed("adjoint law fails; " + show("x", x));
  return passed();
}

Outcome prop_pq_inverse(Ctx& c) {
  const Mat a = c.matrix();
  const Mat h = sample_class(a, {1, 2}, 1, c.rng).front();
  const auto x = pq_inverse(a, a * h, h * a);
  if (!x || !(*x == h)) return failed("(p,q)-inverse differs from h; " + show("a", a) + ", " + show("h", h));
  return passed();
}

// --- finite oracle ----------------------------------------------------------

struct Lab {
  std::unique_ptr<FiniteRingUniverse> u;
  std::map<R, OrderTable> tables;
  std::vector<std::vector<Index>> c13;
};

std::unique_ptr<FiniteRingUniverse> make_universe(const RingSpec& ring) {
  const std::uint64_t cap = lab_cap();
  for (std::size_t n : {2U, 1U})
    if (universe_size(ring, n, n, cap) != 0) return std::make_unique<FiniteRingUniverse>(ring, n, cap);
  return nullptr;
}

Outcome prop_oracle(Ctx& c, Lab& lab) {
  if (!lab.u) return skipped();
  const auto& u = *lab.u;
  const auto a = static_cast<Index>(c.rng.uniform(0, static_cast<std::int64_t>(u.size() - 1)));
  const auto b = static_cast<Index>(c.rng.uniform(0, static_cast<std::int64_t>(u.size() - 1)));
  for (R rel : kAllRelations) {
    const OrderTable& t = lab.tables.at(rel);
    if (!t.in_domain[a]) continue;
    for (Route route : {Route::characterization, Route::feasibility})
      if (t.at(a, b) != holds(rel, u.element(a), u.element(b), route))
        return failed(to_string(rel) + " " + to_string(route) + " disagrees with the oracle; " +
                      show("a", u.element(a)) + ", " + show("b", u.element(b)));
  }
  return passed();
}

Outcome prop_inclusion_oracle(Ctx& c, Lab& lab) {
  if (!lab.u) return skipped();
  const auto& u = *lab.u;
  const auto a = static_cast<Index>(c.rng.uniform(0, static_cast<std::int64_t>(u.size() - 1)));
  const auto b = static_cast<Index>(c.rng.uniform(0, static_cast<std::int64_t>(u.size() - 1)));
  if (lab.c13[a].empty() || lab.c13[b].empty()) return skipped();
  const bool inc = std::includes(lab.c13[a].begin(), lab.c13[a].end(), lab.c13[b].begin(), lab.c13[b].end());
  if (inc != lab.tables.at(R::left_star).at(a, b))
    return failed("left-star != {1,3}-inclusion; " + show("a", u.element(a)) + ", " + show("b", u.element(b)));
  return passed();
}

Outcome prop_axioms(Lab& lab) {
  if (!lab.u) return skipped();
  for (R rel : {R::left_star, R::right_star, R::minus}) {
    const AxiomsReport r = axioms_report(lab.tables.at(rel), *lab.u);
    if (!r.ok()) return failed(to_string(rel) + ": " + r.counterexamples.front());
  }
  return passed();
}

using Property = std::function<Outcome(Ctx&)>;

struct Entry {
  std::string name;
  Property run;
  bool once = false;  // a single exhaustive check rather than per-trial samples
};

std::vector<Entry> suite_properties(const std::string& suite, Lab& lab) {
  if (suite == "inverses")
    return {{"penrose", prop_penrose},
            {"one-mp-is-123", prop_one_mp},
            {"123-characterizations", prop_123_characterizations},
            {"least-squares", prop_least_squares},
            {"dual-transport", prop_dual_transport}};
  if (suite == "orders")
    return {{"route-agreement", prop_route_agreement},
            {"one-mp-equals-left-star", prop_one_mp_left_star},
            {"order-laws", prop_order_laws},
            {"star-conjunction", prop_star_conjunction},
            {"witnesses", prop_witnesses},
            {"inclusion", prop_inclusion}};
  if (suite == "decompositions")
    return {{"triple-decomposition", prop_triple},
            {"block-laws", prop_block_laws},
            {"pq-inverse", prop_pq_inverse}};
  return {{"oracle-agreement", [&lab](Ctx& c) { return prop_oracle(c, lab); }},
          {"inclusion-oracle", [&lab](Ctx& c) { return prop_inclusion_oracle(c, lab); }},
          {"axioms", [&lab](Ctx&) { return prop_axioms(lab); }, true}};
}

void prepare_lab(Lab& lab, const RingSpec& ring) {
  lab.u = make_universe(ring);
  if (!lab.u) return;
  for (R rel : kAllRelations) lab.tables.emplace(rel, order_table(rel, *lab.u));
  lab.c13.resize(lab.u->size());
  for (Index a = 0; a < lab.u->size(); ++a) lab.c13[a] = brute_class(*lab.u, a, {1, 3});
}

}  // namespace

const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> s{"inverses", "orders", "decompositions", "finite-oracle"};
  return s;
}

void validate(const VerifyConfig& config) {
  if (config.trials == 0) throw ParseError("verify: trials must be positive");
  if (config.max_dim == 0 || config.max_dim > 6) throw ParseError("verify: max_dim must be in 1..6");
  if (config.rings.empty()) throw ParseError("verify: no rings selected");
  for (const auto& s : config.suites)
    if (std::find(known_suites().begin(), known_suites().end(), s) == known_suites().end())
      throw ParseError("verify: unknown suite '" + s + "'");
}

std::size_t VerifyReport::failures() const {
  std::size_t n = 0;
  for (const auto& r : results) n += r.failures;
  return n;
}

std::string VerifyReport::transcript() const {
  std::ostringstream os;
  os << "verify seed=" << config.seed << " trials=" << config.trials << " max_dim=" << config.max_dim
     << "\n";
  os << "rings:";
  for (const auto& r : config.rings) os << ' ' << to_string(r);
  os << "\nsuites:";
  for (const auto& s : config.suites) os << ' ' << s;
  os << "\n";
  std::size_t checks = 0;
  for (const auto& r : results) {
    checks += r.applicable;
    os << (r.failures == 0 ? "PASS" : "FAIL") << " [" << r.suite << "] " << r.property << " "
       << r.ring << ": " << (r.applicable - r.failures) << "/" << r.applicable << " passed ("
       << (r.trials - r.applicable) << " not applicable)\n";
    if (r.failures != 0) os << "  first failure: " << r.first_failure << "\n";
  }
  os << "total: " << (checks - failures()) << "/" << checks << " passed, " << failures()
     << " failed\n";
  return os.str();
}

VerifyReport run_verify(const VerifyConfig& config) {
  validate(config);
  VerifyReport report{config, {}};
  const Rng root(config.seed);
  for (const auto& suite : config.suites) {
    const Rng suite_rng = root.split(suite);
    for (const auto& ring : config.rings) {
      Lab lab;
      if (suite == "finite-oracle") {
        if (!ring.is_finite()) continue;
        prepare_lab(lab, ring);
      }
      const Rng ring_rng = suite_rng.split(to_string(ring));
      for (const auto& entry : suite_properties(suite, lab)) {
        PropertyResult pr;
        pr.suite = suite;
        pr.property = entry.name;
        pr.ring = to_string(ring);
        const Rng prop_rng = ring_rng.split(entry.name);
        const std::size_t trials = entry.once ? 1 : config.trials;
        for (std::size_t t = 0; t < trials; ++t) {
          Rng rng = prop_rng.split(static_cast<std::uint64_t>(t));
          Ctx ctx{rng, ring, config.max_dim};
          Outcome o = skipped();
          try {
            o = entry.run(ctx);
          } catch (const std::exception& e) {
            o = failed(std::string("exception: ") + e.what());
          }
          ++pr.trials;
          if (o.kind == Outcome::skip) continue;
          ++pr.applicable;
          if (o.kind == Outcome::fail) {
            if (pr.failures++ == 0) pr.first_failure = "trial " + std::to_string(t) + ": " + o.detail;
          }
        }
        report.results.push_back(std::move(pr));
      }
    }
  }
  return report;
}

}  // namespace starlab

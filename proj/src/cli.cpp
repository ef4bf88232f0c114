#include "starlab/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "starlab/errors.hpp"
#include "starlab/finite_ring.hpp"
#include "starlab/inverses.hpp"
#include "starlab/json_io.hpp"
#include "starlab/orders.hpp"
#include "starlab/verify.hpp"

namespace starlab {

namespace {

struct Io {
  std::ostream& out;
  std::ostream& err;
};

void emit(Io io, const std::string& text, const std::string& path) {
  if (path.empty()) io.out << text;
  else write_file(path, text);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json checks_json(const Checks& cs) {
  Json j = Json::object();
  for (const auto& c : cs) j[c.name] = c.ok;
  return j;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

Side parse_side(const std::string& text) {
  if (text == "left") return Side::left;
  if (text == "right") return Side::right;
  throw ParseError("side must be 'left' or 'right', got '" + text + "'");
}

// mp -------------------------------------------------------------------------

struct MpArgs {
  std::string in, out;
};

int cmd_mp(const MpArgs& o, Io io) {
  const Mat a = load_matrix(o.in);
  const auto x = moore_penrose(a);
  if (!x) {
    io.out << "none\n";
    return kExitFails;
  }
  emit(io, dump(matrix_to_json(*x)), o.out);
  return kExitOk;
}

// class ----------------------------------------------------------------------

struct ClassArgs {
  std::string spec, in, out;
  std::size_t sample = 1;
  std::uint64_t seed = 0;
};

int cmd_class(const ClassArgs& o, Io io) {
  const ClassSpec spec = ClassSpec::parse(o.spec);
  const Mat a = load_matrix(o.in);
  if (o.sample == 0) throw ParseError("--sample must be positive");
  if (!class_exists(a, spec)) {
    io.out << "none\n";
    return kExitFails;
  }
  Rng rng(o.seed);
  Json members = Json::array();
  for (const Mat& x : sample_class(a, spec, o.sample, rng)) members.push_back(matrix_to_json(x));
  emit(io, dump(Json{{"spec", spec.to_string()}, {"members", std::move(members)}}), o.out);
  return kExitOk;
}

// witnesses --------------------------------------------------------------------

Json witness_json(const Witness& w, const Checks& cs) {
  return Json{{"g", matrix_to_json(w.g)},
              {"p", matrix_to_json(w.p)},
              {"q", matrix_to_json(w.q)},
              {"checks", checks_json(cs)}};
}

// Witness JSON for a relation known to hold.
Json build_witness(OrderRelation rel, const Mat& a, const Mat& b) {
  Json j{{"relation", to_string(rel)}};
  auto side_json = [&](Side side) {
    const Witness w = side == Side::left ? left_star_witness(a, b) : right_star_witness(a, b);
    return witness_json(w, witness_checks(a, b, w, side));
  };
  switch (rel) {
    case OrderRelation::left_star: j.update(side_json(Side::left)); break;
    case OrderRelation::right_star: j.update(side_json(Side::right)); break;
    case OrderRelation::star:
      j["left"] = side_json(Side::left);
      j["right"] = side_json(Side::right);
      break;
    default: {
      const auto w = relation_witness(rel, a, b);
      if (!w)
        throw InvariantViolation("no witness although " + to_string(rel) + " holds; a = " +
                                 to_string(a) + ", b = " + to_string(b));
      j.update(witness_json(*w, relation_witness_checks(rel, a, b, *w)));
    }
  }
  return j;
}

// order / witness ----------------------------------------------------------------

struct OrderArgs {
  std::string rel, a, b, route = "characterization", out;
  bool witness = false;
};

void require_same_shape(const Mat& a, const Mat& b) {
  if (!(a.ring() == b.ring())) throw ParseError("a and b are over different rings");
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError("a is " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                     " but b is " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
}

// Verdict under the requested route; "both" cross-checks the two routes.
Verdict order_verdict(OrderRelation rel, const Mat& a, const Mat& b, const std::string& route) {
  if (route != "both") return decide(rel, a, b, parse_route(route));
  const Verdict c = decide(rel, a, b, Route::characterization);
  const Verdict f = decide(rel, a, b, Route::feasibility);
  if (c.holds != f.holds)
    throw InvariantViolation(to_string(rel) + ": characterization says " +
                             (c.holds ? "holds" : "fails (" + c.failed + ")") +
                             ", feasibility says " + (f.holds ? "holds" : "fails (" + f.failed + ")") +
                             "; a = " + to_string(a) + ", b = " + to_string(b));
  return c;
}

int cmd_order(const OrderArgs& o, Io io) {
  const OrderRelation rel = parse_relation(o.rel);
  const Mat a = load_matrix(o.a);
  const Mat b = load_matrix(o.b);
  require_same_shape(a, b);
  const Verdict v = order_verdict(rel, a, b, o.route);
  if (!v) {
    io.out << "fails: " << v.failed << "\n";
    return kExitFails;
  }
  io.out << "holds\n";
  if (o.witness) emit(io, dump(build_witness(rel, a, b)), o.out);
  return kExitOk;
}

int cmd_witness(const OrderArgs& o, Io io) {
  const OrderRelation rel = parse_relation(o.rel);
  const Mat a = load_matrix(o.a);
  const Mat b = load_matrix(o.b);
  require_same_shape(a, b);
  const Verdict v = decide(rel, a, b);
  if (!v) {
    io.out << "none\n";
    io.err << to_string(rel) << " fails: " << v.failed << "\n";
    return kExitFails;
  }
  emit(io, dump(build_witness(rel, a, b)), o.out);
  return kExitOk;
}

// decompose ----------------------------------------------------------------------

struct DecomposeArgs {
  std::string a, b, h, side = "left", out;
};

int cmd_decompose(const DecomposeArgs& o, Io io) {
  const Side side = parse_side(o.side);
  const Mat a = load_matrix(o.a);
  const Mat b = load_matrix(o.b);
  require_same_shape(a, b);
  const OrderRelation rel = side == Side::left ? OrderRelation::left_star : OrderRelation::right_star;
  const ClassSpec spec = side == Side::left ? ClassSpec{1, 2, 3} : ClassSpec{1, 2, 4};
  const Verdict v = decide(rel, a, b);
  if (!v) {
    io.out << "fails: " << v.failed << "\n";
    return kExitFails;
  }
  std::optional<Mat> h;
  if (!o.h.empty()) h = load_matrix(o.h);
  else h = solve_class(b, spec);
  if (!h) {
    io.out << "none\n";
    io.err << "b has no {" << spec.to_string() << "}-inverse\n";
    return kExitFails;
  }
  const TripleDecomposition d = simultaneous_decomposition(a, b, *h, side);
  Json j{{"side", to_string(side)}, {"h", matrix_to_json(*h)}};
  const std::pair<const char*, const Mat*> parts[] = {
      {"p1", &d.p1}, {"p2", &d.p2}, {"p3", &d.p3}, {"q1", &d.q1},
      {"q2", &d.q2}, {"q3", &d.q3}, {"a_inv", &d.a_inv}, {"bma_inv", &d.bma_inv}};
  for (const auto& [name, m] : parts) j[name] = matrix_to_json(*m);
  j["checks"] = checks_json(decomposition_checks(a, b, d, side));
  emit(io, dump(j), o.out);
  return kExitOk;
}

// inclusion ----------------------------------------------------------------------

struct InclusionArgs {
  std::string a, b, mode = "critical", set = "13";
  std::size_t samples = 64;
  std::uint64_t seed = 0;
};

int cmd_inclusion(const InclusionArgs& o, Io io) {
  const InclusionMode mode = parse_inclusion_mode(o.mode);
  if (o.set != "13" && o.set != "14") throw ParseError("--set must be 13 or 14");
  const Mat a = load_matrix(o.a);
  const Mat b = load_matrix(o.b);
  require_same_shape(a, b);
  const ClassSpec spec = o.set == "13" ? ClassSpec{1, 3} : ClassSpec{1, 4};
  for (const auto& [name, m] : {std::pair{"a", &a}, std::pair{"b", &b}})
    if (!class_exists(*m, spec)) {
      io.out << "none\n";
      io.err << name << " has no {" << spec.to_string() << "}-inverse\n";
      return kExitFails;
    }
  InclusionOptions opts;
  opts.samples = o.samples;
  opts.seed = o.seed;
  const InclusionResult r = o.set == "13" ? inclusion_13(a, b, mode, opts) : inclusion_14(a, b, mode, opts);
  const std::string set = o.set == "13" ? "{1,3}" : "{1,4}";
  if (r.included) {
    io.out << "included: b" << set << " in a" << set << "\n";
    return kExitOk;
  }
  io.out << "not included: b" << set << " not in a" << set << "\n";
  if (r.counterexample) io.out << dump(Json{{"counterexample", matrix_to_json(*r.counterexample)}});
  return kExitFails;
}

// hasse --------------------------------------------------------------------------

struct HasseArgs {
  std::uint32_t p = 2;
  std::size_t n = 2;
  std::string rel = "left-star", out, csv;
};

int cmd_hasse(const HasseArgs& o, Io io) {
  const OrderRelation rel = parse_relation(o.rel);
  const FiniteRingUniverse u(RingSpec::prime(o.p), o.n);
  emit(io, hasse(rel, u), o.out);
  if (!o.csv.empty()) write_file(o.csv, to_csv(order_table(rel, u)));
  return kExitOk;
}

// verify -------------------------------------------------------------------------

struct VerifyArgs {
  VerifyConfig config;
  std::string rings, suites, out;
};

int cmd_verify(VerifyArgs o, Io io) {
  if (!o.rings.empty()) {
    o.config.rings.clear();
    for (const auto& r : split_list(o.rings)) o.config.rings.push_back(parse_ring_name(r));
  }
  if (!o.suites.empty()) o.config.suites = split_list(o.suites);
  validate(o.config);
  const VerifyReport report = run_verify(o.config);
  emit(io, report.transcript(), o.out);
  return report.ok() ? kExitOk : kExitInvariant;
}

int dispatch(std::vector<std::string> args, Io io) {
  CLI::App app{"Exact generalized inverses and one-sided star orders", "starlab"};
  app.require_subcommand(1);

  MpArgs mp;
  auto* mp_cmd = app.add_subcommand("mp", "Moore-Penrose inverse, or \"none\"");
  mp_cmd->add_option("--in", mp.in, "matrix JSON file or inline JSON")->required();
  mp_cmd->add_option("--out", mp.out, "write the result here instead of stdout");

  ClassArgs cl;
  auto* class_cmd = app.add_subcommand("class", "Sample members of a{spec}");
  class_cmd->add_option("--spec", cl.spec, "equations, e.g. 13 or 1,2,4")->required();
  class_cmd->add_option("--in", cl.in, "matrix JSON")->required();
  class_cmd->add_option("--sample", cl.sample, "number of members")->capture_default_str();
  class_cmd->add_option("--seed", cl.seed)->capture_default_str();
  class_cmd->add_option("--out", cl.out);

  OrderArgs ord;
  auto* order_cmd = app.add_subcommand("order", "Decide a relation between a and b");
  order_cmd->add_option("--rel", ord.rel, "minus, left-star, right-star, star, one-mp, mp-one")
      ->required();
  order_cmd->add_option("--a", ord.a)->required();
  order_cmd->add_option("--b", ord.b)->required();
  order_cmd->add_option("--route", ord.route, "characterization, feasibility or both")
      ->capture_default_str();
  order_cmd->add_flag("--witness", ord.witness, "print a witness when the relation holds");
  order_cmd->add_option("--out", ord.out, "write the witness here");

  OrderArgs wit;
  auto* witness_cmd = app.add_subcommand("witness", "Witness {g, p, q} for a relation");
  witness_cmd->add_option("--rel", wit.rel)->required();
  witness_cmd->add_option("--a", wit.a)->required();
  witness_cmd->add_option("--b", wit.b)->required();
  witness_cmd->add_option("--out", wit.out);

  DecomposeArgs dec;
  auto* decompose_cmd = app.add_subcommand("decompose", "Simultaneous triple decomposition");
  decompose_cmd->set_help_flag("--help", "Print this help message and exit");  // frees -h for --h
  decompose_cmd->add_option("--a", dec.a)->required();
  decompose_cmd->add_option("--b", dec.b)->required();
  decompose_cmd->add_option("--h", dec.h, "member of b{1,2,3} (left) or b{1,2,4} (right)");
  decompose_cmd->add_option("--side", dec.side)->capture_default_str();
  decompose_cmd->add_option("--out", dec.out);

  InclusionArgs inc;
  auto* inclusion_cmd = app.add_subcommand("inclusion", "Decide b{1,3} in a{1,3} (or {1,4})");
  inclusion_cmd->add_option("--a", inc.a)->required();
  inclusion_cmd->add_option("--b", inc.b)->required();
  inclusion_cmd->add_option("--mode", inc.mode, "randomized, critical, theorem, exhaustive")
      ->capture_default_str();
  inclusion_cmd->add_option("--set", inc.set, "13 or 14")->capture_default_str();
  inclusion_cmd->add_option("--samples", inc.samples)->capture_default_str();
  inclusion_cmd->add_option("--seed", inc.seed)->capture_default_str();

  HasseArgs has;
  auto* hasse_cmd = app.add_subcommand("hasse", "Hasse diagram over M_n(Z_p) as DOT");
  hasse_cmd->add_option("--p", has.p)->capture_default_str();
  hasse_cmd->add_option("--n", has.n)->capture_default_str();
  hasse_cmd->add_option("--rel", has.rel)->capture_default_str();
  hasse_cmd->add_option("--out", has.out, "DOT file");
  hasse_cmd->add_option("--csv", has.csv, "also write the full relation table as CSV");

  VerifyArgs ver;
  auto* verify_cmd = app.add_subcommand("verify", "Seeded invariant suites");
  verify_cmd->add_option("--seed", ver.config.seed)->capture_default_str();
  verify_cmd->add_option("--trials", ver.config.trials)->capture_default_str();
  verify_cmd->add_option("--max-dim", ver.config.max_dim)->capture_default_str();
  verify_cmd->add_option("--rings", ver.rings, "comma list, e.g. Q(i),Z_2,Z_3");
  verify_cmd->add_option("--suites", ver.suites, "comma list of suites");
  verify_cmd->add_option("--out", ver.out, "write the transcript here");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, io.out, io.err);
    return code == 0 ? kExitOk : kExitInput;
  }

  if (*mp_cmd) return cmd_mp(mp, io);
  if (*class_cmd) return cmd_class(cl, io);
  if (*order_cmd) return cmd_order(ord, io);
  if (*witness_cmd) return cmd_witness(wit, io);
  if (*decompose_cmd) return cmd_decompose(dec, io);
  if (*inclusion_cmd) return cmd_inclusion(inc, io);
  if (*hasse_cmd) return cmd_hasse(has, io);
  return cmd_verify(ver, io);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Io io{out, err};
  try {
    return dispatch(args, io);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const ShapeError& e) {
    err << "shape error: " << e.what() << "\n";
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  }
  return kExitInput;
}

}  // namespace starlab

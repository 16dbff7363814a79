#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>

#include "tangent_poset/coloring.hpp"
#include "tangent_poset/error.hpp"
#include "tangent_poset/generators.hpp"
#include "tangent_poset/hocolim.hpp"
#include "tangent_poset/io.hpp"
#include "tangent_poset/tangent.hpp"
#include "tangent_poset/verify.hpp"

namespace tp::cli {
namespace {

struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::Verified: return kOk;
    case Verdict::Refuted: return kRefuted;
    case Verdict::Unknown: break;
  }
  return kUnknown;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw BadInput("cannot write " + path);
  f << text;
}

std::string dump(const io::Json& j) { return j.dump(2) + "\n"; }

int positive(const std::vector<std::string>& params, std::size_t i, const std::string& family) {
  if (params.size() != i + 1) throw BadInput(family + " takes exactly one integer parameter");
  try {
    std::size_t used = 0;
    const int v = std::stoi(params[i], &used);
    if (used != params[i].size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw BadInput("not an integer: " + params[i]);
  }
}

io::Json generate(const std::string& family, const std::vector<std::string>& params) {
  auto none = [&] {
    if (!params.empty()) throw BadInput(family + " takes no parameters");
  };
  auto ranged = [&](int lo, int hi) {
    const int v = positive(params, 0, family);
    if (v < lo || v > hi)
      throw BadInput(family + " parameter must lie in " + std::to_string(lo) + ".." + std::to_string(hi));
    return v;
  };
  if (family == "simplex") return io::to_json(gen::simplex_boundary(ranged(1, 12)));
  if (family == "cross") return io::to_json(gen::cross_polytope_boundary(ranged(1, 8)));
  if (family == "cube") return io::to_json(gen::cube_boundary(ranged(1, 7)));
  if (family == "polygon") return io::to_json(gen::polygon(ranged(3, 4096)));
  if (family == "torus7") return none(), io::to_json(gen::torus_7());
  if (family == "rp2_6") return none(), io::to_json(gen::rp2_6());
  if (family == "icosahedron") return none(), io::to_json(gen::icosahedron_boundary());
  throw BadInput("unknown family " + family + " (simplex, cross, cube, polygon, torus7, rp2_6, icosahedron)");
}

// Posets are taken as they are; complexes through their face posets.
Poset poset_input(const io::Json& j) {
  switch (io::detect(j)) {
    case io::Document::Poset:
    case io::Document::Bundle: return io::poset_from_json(j);
    case io::Document::Complex: return face_poset(io::complex_from_json(j));
    case io::Document::Coloring: break;
  }
  throw BadInput("expected a poset or complex document");
}

struct Options {
  std::vector<std::string> params;
  std::string input;
  std::string output;
  std::string fiber;
  bool hocolim_check = false;
  std::string as;
  std::optional<int> n;
  std::uint64_t seed = 0;
  std::size_t flip_budget = 10000;
  std::size_t restarts = 20;
  bool json = false;
  std::string format;
};

int cmd_gen(const Options& o, std::ostream& out) {
  if (o.params.empty()) throw BadInput("gen needs a family");
  const std::vector<std::string> rest(o.params.begin() + 1, o.params.end());
  emit(dump(generate(o.params.front(), rest)), o.output, out);
  return kOk;
}

int cmd_tangent(const Options& o, std::ostream& out, std::ostream& err) {
  const Poset p = poset_input(io::read_file(o.input));
  const TangentBundle b = tangent_bundle(p);
  if (!o.fiber.empty()) {
    if (!p.find(o.fiber)) throw BadInput("no element " + o.fiber);
    emit(dump(io::to_json(fiber(b, o.fiber).poset)), o.output, out);
  } else {
    emit(dump(io::to_json(b)), o.output, out);
  }
  if (!o.hocolim_check) return kOk;
  const Certainty c = tangent_identity_check(p);
  err << to_string(c.verdict) << ": " << c.summary() << "\n";
  return exit_code(c.verdict);
}

int cmd_verify(const Options& o, std::ostream& out) {
  const io::Json j = io::read_file(o.input);
  const OracleBudget budget{o.seed, o.flip_budget, o.restarts};
  VerificationReport rep;
  if (o.as == "coloring") {
    if (io::detect(j) != io::Document::Coloring) throw BadInput("--as coloring needs a coloring document");
    Coloring c = io::coloring_from_json(j);
    if (o.n) c.n = *o.n;
    rep = validate_coloring(c, budget);
  } else {
    const Poset p = poset_input(j);
    const int n = o.n ? *o.n : rank_info(p).height;
    if (o.as == "ballcomplex")
      rep = is_abstract_ball_complex(p, budget);
    else if (o.as == "manifold")
      rep = is_abstract_manifold(p, budget);
    else if (o.as == "strict")
      rep = is_strict(p, n, budget);
    else if (o.as == "sphere")
      rep = is_abstract_sphere(p, n, budget);
    else if (o.as == "rn")
      rep = is_rn_object(p, n, budget);
    else if (o.as == "theorem1")
      rep = verify_theorem1(p, n, budget);
    else
      throw BadInput("unknown --as " + o.as);
  }
  out << (o.json ? dump(io::to_json(rep)) : rep.to_text());
  return exit_code(rep.verdict());
}

int cmd_export(const Options& o, std::ostream& out) {
  const io::Json j = io::read_file(o.input);
  const io::Document kind = io::detect(j);
  if (o.format == "json") {
    switch (kind) {
      case io::Document::Poset: emit(dump(io::to_json(io::poset_from_json(j))), o.output, out); break;
      case io::Document::Bundle: emit(dump(io::to_json(tangent_bundle(io::poset_from_json(j["bundle"]["base"])))), o.output, out); break;
      case io::Document::Complex: emit(dump(io::to_json(io::complex_from_json(j))), o.output, out); break;
      case io::Document::Coloring: emit(dump(io::to_json(io::coloring_from_json(j))), o.output, out); break;
    }
    return kOk;
  }
  if (o.format == "dot") {
    if (kind == io::Document::Complex)
      emit(io::to_dot(io::complex_from_json(j)), o.output, out);
    else if (kind == io::Document::Coloring)
      emit(io::to_dot(io::coloring_from_json(j).base), o.output, out);
    else
      emit(io::to_dot(io::poset_from_json(j)), o.output, out);
    return kOk;
  }
  if (o.format == "off") {
    if (kind == io::Document::Coloring) throw BadInput("OFF export needs a poset or complex");
    const SimplicialComplex k =
        kind == io::Document::Complex ? io::complex_from_json(j) : order_complex(io::poset_from_json(j));
    if (k.dimension() > 3)
      throw BadInput("OFF export supports dimension <= 3, this complex has dimension " + std::to_string(k.dimension()));
    emit(io::to_off(k, o.seed), o.output, out);
    return kOk;
  }
  throw BadInput("unknown format " + o.format + " (dot, off, json)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tangent bundles of finite posets: construction and verification", "tangent-poset"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "Write a generated poset or complex as JSON");
  gen->add_option("params", o.params, "family and parameters: simplex N | cross N | cube N | polygon M | torus7 | rp2_6 | icosahedron")
      ->required();
  gen->add_option("-o,--output", o.output, "output file (default stdout)");

  auto* tan = app.add_subcommand("tangent", "Build the tangent bundle of a poset");
  tan->add_option("input", o.input, "poset JSON (a complex is replaced by its face poset)")->required();
  tan->add_option("-o,--output", o.output, "output file (default stdout)");
  tan->add_option("--fiber", o.fiber, "write the labelled fiber over this element instead");
  tan->add_flag("--hocolim-check", o.hocolim_check, "exit 0 iff the hocolim identity verifies");

  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  ver->add_option("input", o.input, "poset, complex or coloring JSON")->required();
  ver->add_option("--as", o.as, "ballcomplex | manifold | strict | sphere | rn | theorem1 | coloring")
      ->required()
      ->check(CLI::IsMember({"ballcomplex", "manifold", "strict", "sphere", "rn", "theorem1", "coloring"}));
  ver->add_option("-n", o.n, "dimension (default: height of the poset)");
  ver->add_option("--seed", o.seed, "oracle seed")->capture_default_str();
  ver->add_option("--flip-budget,--budget", o.flip_budget, "bistellar moves per oracle call")->capture_default_str();
  ver->add_option("--restarts", o.restarts, "oracle restarts")->capture_default_str();
  ver->add_flag("--json", o.json, "print the report as JSON");

  auto* exp = app.add_subcommand("export", "Export a document as DOT, OFF or normalized JSON");
  exp->add_option("input", o.input, "poset, bundle, complex or coloring JSON")->required();
  exp->add_option("--format", o.format, "dot | off | json")->required();
  exp->add_option("-o,--output", o.output, "output file (default stdout)");
  exp->add_option("--seed", o.seed, "seed for OFF coordinates")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kBadInput;
  }

  try {
    if (*gen) return cmd_gen(o, out);
    if (*tan) return cmd_tangent(o, out, err);
    if (*ver) return cmd_verify(o, out);
    if (*exp) return cmd_export(o, out);
  } catch (const BadInput& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::FunctorLawViolation || e.kind() == ErrorKind::FunctorialityFailure ? kRefuted
                                                                                                     : kBadInput;
  }
  return kBadInput;
}

}  // namespace tp::cli

#include "polycell/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polycell/blocks.hpp"
#include "polycell/complex_products.hpp"
#include "polycell/corpus.hpp"
#include "polycell/document.hpp"
#include "polycell/error.hpp"
#include "polycell/factorization.hpp"
#include "polycell/graph_products.hpp"
#include "polycell/symmetry.hpp"
#include "polycell/verify.hpp"

namespace polycell {
namespace {

constexpr std::uint64_t kDefaultBudget = 50'000'000;

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(Errc::BadParameter, "cannot write '" + path + "'");
  out << text;
}

std::string yesno(bool b) { return b ? "true" : "false"; }

std::string permutation_line(const Permutation& p, const Complex& x) {
  return cycle_notation(p, x.skeleton().vertex_ids(), dart_labels(x.skeleton()),
                        face_id_labels(x));
}

int cmd_product(const std::vector<std::string>& files, const std::string& out_path) {
  std::vector<std::shared_ptr<const Complex>> factors;
  for (const std::string& f : files) factors.push_back(load_complex(f));
  NaryComplexProduct p = nary_complex_tensor_product(factors);
  write_output(out_path, emit_complex(*p.product));
  return 0;
}

int cmd_link(const std::string& file, const std::string& vertex, bool dot,
             const std::string& out_path) {
  auto x = load_complex(file);
  int v = x->skeleton().vertex_index(vertex);
  if (v < 0) raise(Errc::UnknownVertex, "no vertex '" + vertex + "' in '" + file + "'");
  LinkGraph l = link(*x, v);
  write_output(out_path, dot ? dot_graph(l.graph) : emit_complex(Complex(l.graph, {})));
  return 0;
}

int cmd_euler(const std::string& file, const std::string& out_path) {
  auto x = load_complex(file);
  write_output(out_path, std::to_string(euler_characteristic(*x)) + "\n");
  return 0;
}

int cmd_aut(const std::string& file, std::uint64_t budget, const std::string& out_path) {
  auto x = load_complex(file);
  PermGroup g = complex_automorphism_group(x, budget);
  std::string text = "order " + std::to_string(g.order()) + "\n";
  text += "generators " + std::to_string(g.generators.size()) + "\n";
  for (const Permutation& p : g.generators) text += "generator " + permutation_line(p, *x) + "\n";
  write_output(out_path, text);
  return 0;
}

int cmd_flags(const std::string& file, std::uint64_t budget, const std::string& out_path) {
  auto x = load_complex(file);
  std::string text = "flags " + std::to_string(flags(*x).size()) + "\n";
  text += "flag-transitive " + yesno(is_flag_transitive(x, budget)) + "\n";
  write_output(out_path, text);
  return 0;
}

int cmd_check(const std::string& file, const std::string& out_path) {
  auto x = load_complex(file);
  const MultiGraph& g = x->skeleton();
  std::ostringstream text;
  text << "vertices " << g.vertex_count() << "\n";
  text << "edges " << g.edge_count() << "\n";
  text << "faces " << x->face_count() << "\n";
  text << "euler " << euler_characteristic(*x) << "\n";
  text << "connected " << yesno(is_connected(g)) << "\n";
  text << "bipartite " << yesno(is_bipartite(g)) << "\n";
  text << "simple-skeleton " << yesno(is_simple(g)) << "\n";
  text << "loops-only-multiplicity " << yesno(in_s0(g)) << "\n";
  text << "r-thin " << yesno(is_r_thin(g)) << "\n";
  text << "polygonal " << yesno(is_polygonal(*x)) << "\n";
  text << "simple-complex " << yesno(is_simple_complex(*x)) << "\n";
  text << "elementary " << yesno(is_elementary(*x)) << "\n";
  text << "ordinary " << yesno(is_ordinary(*x)) << "\n";
  Homology h = homology_h1(*x);
  text << "h1-rank " << h.betti << "\n";
  text << "h1-torsion";
  for (long long t : h.torsion) text << " " << t;
  text << "\n";
  write_output(out_path, text.str());
  return 0;
}

int cmd_factor(const std::string& file, const std::string& cls, std::uint64_t budget,
               const std::string& out_path) {
  auto x = load_complex(file);
  std::string text;
  if (x->face_count() > 0) {
    ComplexFactorization f = complex_prime_factorization(x, budget);
    bool cert = f.certificate.is_bijective() && is_complex_homomorphism(f.certificate);
    text += "factors " + std::to_string(f.factors.size()) + "\n";
    for (std::size_t i = 0; i < f.factors.size(); ++i)
      text += "# factor " + std::to_string(i + 1) + "\n" + emit_complex(*f.factors[i]);
    text += cert ? "certificate verified\n" : "certificate INVALID\n";
    write_output(out_path, text);
    return cert ? 0 : 1;
  }
  FactorClass fc = cls == "s0" ? FactorClass::S0 : FactorClass::S;
  GraphFactorization f = graph_prime_factorization(x->skeleton_ptr(), fc, budget);
  bool cert = f.certificate.is_bijective() && is_graph_homomorphism(f.certificate);
  text += std::string("class ") + (fc == FactorClass::S0 ? "s0" : "s") + "\n";
  text += "factors " + std::to_string(f.factors.size()) + "\n";
  for (std::size_t i = 0; i < f.factors.size(); ++i)
    text += "# factor " + std::to_string(i + 1) + "\n" + emit_complex(Complex(*f.factors[i], {}));
  text += cert ? "certificate verified\n" : "certificate INVALID\n";
  write_output(out_path, text);
  return cert ? 0 : 1;
}

std::string parity_tuple(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

int cmd_blocks(const std::vector<std::string>& files, const std::string& dot_path,
               const std::string& out_path) {
  std::vector<std::shared_ptr<const Complex>> factors;
  for (const std::string& f : files) factors.push_back(load_complex(f));
  std::string text;
  if (factors.size() == 1) {
    std::vector<FaceBlock> blocks = face_blocks_intrinsic(*factors[0]);
    text += "blocks " + std::to_string(blocks.size()) + "\n";
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      text += "block " + std::to_string(i) + " size " + std::to_string(blocks[i].members.size()) +
              " members";
      for (int f : blocks[i].members) text += " " + factors[0]->face(f).id;
      text += "\n";
    }
  } else {
    NaryComplexProduct p = nary_complex_tensor_product(factors);
    std::vector<FaceBlock> blocks = face_blocks_by_label(p);
    text += "blocks " + std::to_string(blocks.size()) + "\n";
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      const FaceBlock& b = blocks[i];
      std::string gens = "(";
      for (std::size_t j = 0; j < b.generators.size(); ++j)
        gens += (j ? "," : "") + factors[j]->face(b.generators[j]).id;
      gens += ")";
      text += "block " + std::to_string(i) + " generators " + gens + " parity " +
              parity_tuple(b.parity) + " size " + std::to_string(b.members.size()) + " members";
      for (int f : b.members) text += " " + p.product->face(f).id;
      text += "\n";
    }
  }
  if (!dot_path.empty()) {
    BlockGraph bg = block_graph(factors);
    write_output(dot_path, dot_graph(bg.graph));
  }
  write_output(out_path, text);
  return 0;
}

int cmd_homcount(const std::string& source, const std::string& target, std::uint64_t budget,
                 const std::string& out_path) {
  auto s = load_complex(source);
  auto t = load_complex(target);
  std::size_t n;
  if (s->face_count() == 0 && t->face_count() == 0)
    n = enumerate_graph_homomorphisms(s->skeleton_ptr(), t->skeleton_ptr(), budget).size();
  else
    n = enumerate_complex_homomorphisms(s, t, budget).size();
  write_output(out_path, std::to_string(n) + "\n");
  return 0;
}

bool budget_failure(const VerificationReport& report) {
  for (const InstanceResult& i : report.instances)
    if (!i.pass && (i.detail.rfind("Budget:", 0) == 0 || i.detail.rfind("TooLarge:", 0) == 0))
      return true;
  return false;
}

int cmd_verify(const std::string& id, std::uint64_t seed, int trials, std::uint64_t budget,
               const std::string& out_path) {
  auto start = std::chrono::steady_clock::now();
  VerificationReport report = run_suite(id, seed, trials, budget);
  report.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  write_output(out_path, report.render());
  std::cerr << "wall-clock " << report.wall_ms << " ms\n";
  if (report.passed()) return 0;
  return budget_failure(report) ? 3 : 1;
}

int cmd_conjecture(const std::string& id, std::uint64_t seed, const std::string& max_size,
                   std::uint64_t budget, const std::string& out_path) {
  int bound;
  if (max_size == "small") {
    bound = 60;
  } else {
    try {
      std::size_t used = 0;
      bound = std::stoi(max_size, &used);
      if (used != max_size.size()) throw std::invalid_argument(max_size);
    } catch (const std::exception&) {
      raise(Errc::BadParameter, "--max-size takes a number or 'small', got '" + max_size + "'");
    }
  }
  auto start = std::chrono::steady_clock::now();
  ConjectureOutcome outcome = run_conjecture(id, seed, bound, budget);
  outcome.report.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - start)
                               .count();
  std::string text = outcome.report.render();
  if (outcome.counterexample)
    text += *outcome.counterexample;
  else
    text += "no counterexample within bounds\n";
  write_output(out_path, text);
  std::cerr << "wall-clock " << outcome.report.wall_ms << " ms\n";
  if (outcome.counterexample) return 1;
  return outcome.report.passed() ? 0 : (budget_failure(outcome.report) ? 3 : 1);
}

int cmd_make(const std::string& name, const std::vector<int>& args, bool dot,
             const std::string& out_path) {
  auto arity = [&](std::size_t n) {
    if (args.size() != n)
      raise(Errc::BadParameter,
            "'" + name + "' takes " + std::to_string(n) + " parameter(s), got " +
                std::to_string(args.size()));
  };
  Complex x = [&]() -> Complex {
    if (name == "polygon") return arity(1), polygon(args[0]);
    if (name == "one-gon") return arity(0), one_gon();
    if (name == "wrapped") return arity(2), wrapped_polygon(args[0], args[1]);
    if (name == "cycle") return arity(1), cycle(args[0]);
    if (name == "complete") return arity(1), complete(args[0]);
    if (name == "dunce-hat") return arity(0), dunce_hat();
    if (name == "tetrahedron") return arity(0), tetrahedron();
    if (name == "cube") return arity(0), cube_surface();
    if (name == "strip") return arity(2), strip(args[0], args[1] != 0);
    if (name == "necklace") return arity(2), necklace(args[0], args[1]);
    if (name == "hex-torus") return arity(2), hex_torus(args[0], args[1]);
    raise(Errc::BadParameter, "unknown fixture '" + name + "'");
  }();
  write_output(out_path, dot ? dot_graph(x.skeleton()) : emit_complex(x));
  return 0;
}

std::string suite_list() {
  std::string out;
  for (const std::string& s : suite_names()) out += (out.empty() ? "" : ", ") + s;
  return out;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"graphs and polygonal cell complexes under the tensor product"};
  app.require_subcommand(1);
  std::function<int()> action;

  std::vector<std::string> files;
  std::string one_file, out_path, dot_path, vertex, cls = "s", suite_id, max_size = "small",
                        fixture;
  std::vector<int> fixture_args;
  std::uint64_t seed = 0, budget = kDefaultBudget;
  int trials = 20;
  bool dot = false;

  auto add_out = [&](CLI::App* cmd) { cmd->add_option("--out", out_path, "write output here"); };
  auto add_budget = [&](CLI::App* cmd) {
    cmd->add_option("--budget", budget, "search-node budget");
  };

  auto* product = app.add_subcommand("product", "tensor product of two or more complexes");
  product->add_option("files", files, "factor documents (.pcc)")->required()->expected(2, -1);
  add_out(product);
  product->callback([&] { action = [&] { return cmd_product(files, out_path); }; });

  auto* lnk = app.add_subcommand("link", "link graph at a vertex");
  lnk->add_option("file", one_file, "complex document")->required();
  lnk->add_option("vertex", vertex, "vertex id")->required();
  lnk->add_flag("--dot", dot, "emit DOT instead of a graph document");
  add_out(lnk);
  lnk->callback([&] { action = [&] { return cmd_link(one_file, vertex, dot, out_path); }; });

  auto* euler = app.add_subcommand("euler", "Euler characteristic");
  euler->add_option("file", files, "complex document")->required()->expected(1);
  add_out(euler);
  euler->callback([&] { action = [&] { return cmd_euler(files[0], out_path); }; });

  auto* aut = app.add_subcommand("aut", "automorphism group, generators in cycle notation");
  aut->add_option("file", files, "complex document")->required()->expected(1);
  add_budget(aut);
  add_out(aut);
  aut->callback([&] { action = [&] { return cmd_aut(files[0], budget, out_path); }; });

  auto* flg = app.add_subcommand("flags", "flag count and flag-transitivity");
  flg->add_option("file", files, "complex document")->required()->expected(1);
  add_budget(flg);
  add_out(flg);
  flg->callback([&] { action = [&] { return cmd_flags(files[0], budget, out_path); }; });

  auto* check = app.add_subcommand("check", "validate a document and report its properties");
  check->add_option("file", files, "complex document")->required()->expected(1);
  add_out(check);
  check->callback([&] { action = [&] { return cmd_check(files[0], out_path); }; });

  auto* factor = app.add_subcommand("factor", "prime factorization with certificate");
  factor->add_option("file", files, "complex or graph document")->required()->expected(1);
  factor->add_option("--class", cls, "graph factor class: s (default) or s0")
      ->check(CLI::IsMember({"s", "s0"}));
  add_budget(factor);
  add_out(factor);
  factor->callback([&] { action = [&] { return cmd_factor(files[0], cls, budget, out_path); }; });

  auto* blocks = app.add_subcommand("blocks", "face blocks (by label for a product of factors)");
  blocks->add_option("files", files, "one complex, or two or more factors")
      ->required()
      ->expected(1, -1);
  blocks->add_option("--dot", dot_path, "also write the block graph as DOT here");
  add_out(blocks);
  blocks->callback([&] { action = [&] { return cmd_blocks(files, dot_path, out_path); }; });

  auto* hom = app.add_subcommand("homcount", "number of homomorphisms source -> target");
  hom->add_option("files", files, "source and target documents")->required()->expected(2);
  add_budget(hom);
  add_out(hom);
  hom->callback(
      [&] { action = [&] { return cmd_homcount(files[0], files[1], budget, out_path); }; });

  auto* verify = app.add_subcommand("verify", "run a verification suite: " + suite_list());
  verify->add_option("suite", suite_id, "suite id")->required();
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--trials", trials, "random instances per suite");
  add_budget(verify);
  add_out(verify);
  verify->callback(
      [&] { action = [&] { return cmd_verify(suite_id, seed, trials, budget, out_path); }; });

  auto* conj = app.add_subcommand("conjecture", "bounded counterexample search: h11, h12");
  conj->add_option("id", suite_id, "conjecture id")->required();
  conj->add_option("--seed", seed, "random seed");
  conj->add_option("--trials", trials, "accepted for interface parity; the family is exhaustive");
  conj->add_option("--max-size", max_size, "component size bound, a number or 'small'");
  add_budget(conj);
  add_out(conj);
  conj->callback([&] {
    action = [&] { return cmd_conjecture(suite_id, seed, max_size, budget, out_path); };
  });

  auto* make = app.add_subcommand("make", "emit a fixture document");
  make->add_option("name", fixture,
                   "polygon N | one-gon | wrapped TOTAL CORE | cycle N | complete N | "
                   "dunce-hat | tetrahedron | cube | strip SQUARES TWISTED | "
                   "necklace BEADS LENGTH | hex-torus A B")
      ->required();
  make->add_option("params", fixture_args, "integer parameters");
  make->add_flag("--dot", dot, "emit the skeleton as DOT");
  add_out(make);
  make->callback(
      [&] { action = [&] { return cmd_make(fixture, fixture_args, dot, out_path); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  try {
    return action ? action() : 2;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == Errc::Budget || e.code() == Errc::TooLarge ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace polycell

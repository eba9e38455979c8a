#include "polycell/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "polycell/blocks.hpp"
#include "polycell/complex_products.hpp"
#include "polycell/corpus.hpp"
#include "polycell/document.hpp"
#include "polycell/error.hpp"
#include "polycell/factorization.hpp"
#include "polycell/graph_products.hpp"
#include "polycell/symmetry.hpp"

namespace polycell {

bool VerificationReport::passed() const {
  for (const auto& i : instances)
    if (!i.pass) return false;
  return true;
}

std::string VerificationReport::render() const {
  std::string out = "suite " + suite + "\n";
  out += "seed " + std::to_string(seed) + "\n";
  out += "trials " + std::to_string(trials) + "\n";
  if (!note.empty()) out += "note " + note + "\n";
  for (const auto& i : instances) {
    out += "instance " + i.name + (i.pass ? " pass" : " FAIL");
    std::istringstream lines(i.detail);
    std::string line;
    bool first = true;
    while (std::getline(lines, line)) {
      if (first)
        out += "  " + line;
      else
        out += "\n  | " + line;
      first = false;
    }
    out += "\n";
  }
  out += passed() ? "result pass\n" : "result FAIL\n";
  return out;
}

namespace {

std::shared_ptr<const MultiGraph> sp(MultiGraph g) { return shared_graph(std::move(g)); }
std::shared_ptr<const Complex> sc(Complex x) { return shared_complex(std::move(x)); }

std::string graph_doc(const MultiGraph& g) { return emit_complex(Complex(g, {})); }

template <typename F>
void run_instance(std::vector<InstanceResult>& out, const std::string& name, F&& body) {
  InstanceResult r;
  r.name = name;
  try {
    body(r);
  } catch (const Error& e) {
    r.pass = false;
    r.detail = e.what();
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("unexpected: ") + e.what();
  }
  out.push_back(std::move(r));
}

bool iso(const MultiGraph& a, const MultiGraph& b, std::uint64_t budget) {
  return graph_isomorphism(sp(a), sp(b), budget).has_value();
}

// ---- e8: links of tensor products ------------------------------------------

bool links_match(const std::shared_ptr<const Complex>& x, const std::shared_ptr<const Complex>& y,
                 std::uint64_t budget, std::string* why) {
  ComplexProduct p = complex_tensor_product(x, y);
  for (int v = 0; v < x->skeleton().vertex_count(); ++v)
    for (int u = 0; u < y->skeleton().vertex_count(); ++u) {
      auto lx = sp(link(*x, v).graph);
      auto ly = sp(link(*y, u).graph);
      auto lp = sp(link(*p.product, p.skeleton.vertex_of_pair(v, u)).graph);
      GraphProduct lprod = tensor_product(lx, ly);
      if (!graph_isomorphism(lprod.product, lp, budget)) {
        if (why)
          *why = "links differ at (" + x->skeleton().vertex_id(v) + ", " +
                 y->skeleton().vertex_id(u) + ")";
        return false;
      }
    }
  return true;
}

void suite_e8(std::vector<InstanceResult>& out, Rng& rng, int trials, std::uint64_t budget) {
  struct Pair {
    const char* name;
    Complex x, y;
  };
  std::vector<Pair> fixtures;
  fixtures.push_back({"dunce*dunce", dunce_hat(), dunce_hat()});
  fixtures.push_back({"tetra*triangle", tetrahedron(), polygon(3)});
  fixtures.push_back({"mobius3*square", strip(3, true), polygon(4)});
  for (auto& f : fixtures)
    run_instance(out, f.name, [&](InstanceResult& r) {
      auto x = sc(std::move(f.x)), y = sc(std::move(f.y));
      int pairs = x->skeleton().vertex_count() * y->skeleton().vertex_count();
      std::string why;
      r.pass = links_match(x, y, budget, &why);
      r.detail = r.pass ? std::to_string(pairs) + " vertex pairs" : why;
    });
  for (int t = 0; t < trials; ++t) {
    auto x = sc(random_complex(rng, 6, 8, 3, 8));
    auto y = sc(random_complex(rng, 6, 8, 3, 8));
    run_instance(out, "random" + std::to_string(t), [&](InstanceResult& r) {
      int pairs = x->skeleton().vertex_count() * y->skeleton().vertex_count();
      std::string why;
      r.pass = links_match(x, y, budget, &why);
      r.detail = r.pass ? std::to_string(pairs) + " vertex pairs"
                        : why + "\n# left factor\n" + emit_complex(*x) + "# right factor\n" +
                              emit_complex(*y);
    });
  }
}

// ---- e9: flag-transitivity of products --------------------------------------

void suite_e9(std::vector<InstanceResult>& out, Rng&, int, std::uint64_t budget) {
  struct Pair {
    const char* name;
    Complex x, y;
  };
  std::vector<Pair> fixtures;
  fixtures.push_back({"triangle*triangle", polygon(3), polygon(3)});
  fixtures.push_back({"triangle*pentagon", polygon(3), polygon(5)});
  fixtures.push_back({"tetra*tetra", tetrahedron(), tetrahedron()});
  for (auto& f : fixtures)
    run_instance(out, f.name, [&](InstanceResult& r) {
      auto x = sc(std::move(f.x)), y = sc(std::move(f.y));
      bool fx = is_flag_transitive(x, budget);
      bool fy = is_flag_transitive(y, budget);
      bool fp = is_flag_transitive(complex_tensor_product(x, y).product, budget);
      r.pass = fx && fy && fp;
      r.detail = r.pass ? "factors and product flag-transitive"
                        : "flag-transitive: left " + std::to_string(fx) + " right " +
                              std::to_string(fy) + " product " + std::to_string(fp);
    });
  run_instance(out, "annulus2-not-flag-transitive", [&](InstanceResult& r) {
    r.pass = !is_flag_transitive(sc(strip(2, false)), budget);
    r.detail = "two-square annulus has two flag orbits";
  });
}

// ---- bf: component counts of products ---------------------------------------

void suite_bf(std::vector<InstanceResult>& out, Rng& rng, int trials, std::uint64_t budget) {
  auto check = [&](InstanceResult& r, const MultiGraph& a, const MultiGraph& b) {
    GraphProduct p = tensor_product(sp(a), sp(b));
    std::size_t got = components(*p.product).vertex_sets.size();
    std::size_t want = (is_bipartite(a) && is_bipartite(b)) ? 2 : 1;
    r.pass = got == want;
    r.detail = std::to_string(got) + " components";
    if (!r.pass)
      r.detail += ", expected " + std::to_string(want) + "\n# left factor\n" + graph_doc(a) +
                  "# right factor\n" + graph_doc(b);
  };
  struct Named {
    const char* name;
    MultiGraph g;
  };
  std::vector<Named> pool;
  pool.push_back({"K2", path_graph(2)});
  pool.push_back({"P3", path_graph(3)});
  pool.push_back({"C4", cycle_graph(4)});
  pool.push_back({"C6", cycle_graph(6)});
  pool.push_back({"K3", complete_graph(3)});
  pool.push_back({"C5", cycle_graph(5)});
  pool.push_back({"K4", complete_graph(4)});
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i; j < pool.size(); ++j)
      run_instance(out, std::string(pool[i].name) + "*" + pool[j].name,
                   [&](InstanceResult& r) { check(r, pool[i].g, pool[j].g); });
  (void)budget;
  for (int t = 0; t < trials; ++t) {
    MultiGraph a = random_connected_simple_graph(rng, 8);
    MultiGraph b = random_connected_simple_graph(rng, 8);
    run_instance(out, "random" + std::to_string(t),
                 [&](InstanceResult& r) { check(r, a, b); });
  }
}

// ---- e3a: homomorphism counting ---------------------------------------------

void suite_e3a(std::vector<InstanceResult>& out, Rng& rng, int trials, std::uint64_t budget) {
  auto loop = sp(loop_graph());
  auto count = [&](const std::shared_ptr<const MultiGraph>& g,
                   const std::shared_ptr<const MultiGraph>& h) {
    return enumerate_graph_homomorphisms(g, h, budget).size();
  };
  for (int v = 1; v <= 4; ++v)
    for (int e = 0; e <= 4; ++e)
      run_instance(out, "to-loop-v" + std::to_string(v) + "e" + std::to_string(e),
                   [&](InstanceResult& r) {
                     std::size_t want = std::size_t{1} << e;
                     int graphs = 0;
                     for (MultiGraph& g : all_multigraphs(v, e)) {
                       ++graphs;
                       if (count(sp(std::move(g)), loop) != want) {
                         r.pass = false;
                         r.detail = "graph #" + std::to_string(graphs - 1) +
                                    " misses 2^" + std::to_string(e);
                         return;
                       }
                     }
                     r.pass = true;
                     r.detail = std::to_string(graphs) + " graphs at 2^" + std::to_string(e);
                   });
  run_instance(out, "K3-into-K3*K3", [&](InstanceResult& r) {
    auto k3 = sp(complete_graph(3));
    GraphProduct p = tensor_product(k3, k3);
    std::size_t lhs = count(k3, p.product);
    std::size_t one = count(k3, k3);
    r.pass = lhs == 36 && one * one == lhs;
    r.detail = std::to_string(lhs) + " homomorphisms";
  });
  for (int t = 0; t < trials; ++t) {
    auto g = sp(random_multigraph(rng, 3, 3));
    auto g1 = sp(random_multigraph(rng, 3, 3));
    auto g2 = sp(random_multigraph(rng, 3, 3));
    run_instance(out, "product-identity" + std::to_string(t), [&](InstanceResult& r) {
      GraphProduct p = tensor_product(g1, g2);
      std::size_t lhs = count(g, p.product);
      std::size_t rhs = count(g, g1) * count(g, g2);
      r.pass = lhs == rhs;
      r.detail = std::to_string(lhs) + " = " + std::to_string(rhs);
      if (!r.pass)
        r.detail += "\n# source\n" + graph_doc(*g) + "# left factor\n" + graph_doc(*g1) +
                    "# right factor\n" + graph_doc(*g2);
    });
  }
}

// ---- g3: graph prime factorization ------------------------------------------

MultiGraph relabeled_copy(const MultiGraph& g, Rng& rng) {
  std::vector<int> pv(g.vertex_count()), pe(g.edge_count());
  std::iota(pv.begin(), pv.end(), 0);
  std::iota(pe.begin(), pe.end(), 0);
  for (int i = static_cast<int>(pv.size()) - 1; i > 0; --i)
    std::swap(pv[i], pv[rng.below(i + 1)]);
  for (int i = static_cast<int>(pe.size()) - 1; i > 0; --i)
    std::swap(pe[i], pe[rng.below(i + 1)]);
  GraphData d;
  for (int v = 0; v < g.vertex_count(); ++v) d.vertices.push_back("w" + std::to_string(pv[v]));
  for (int e = 0; e < g.edge_count(); ++e)
    d.edges.push_back({"f" + std::to_string(pe[e]), "w" + std::to_string(pv[g.edge(e).ends[0]]),
                       "w" + std::to_string(pv[g.edge(e).ends[1]])});
  return MultiGraph(d);
}

bool same_prime_multiset(const std::vector<std::shared_ptr<const MultiGraph>>& a,
                         const std::vector<std::shared_ptr<const MultiGraph>>& b,
                         std::uint64_t budget) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& fa : a) {
    bool matched = false;
    for (std::size_t j = 0; j < b.size() && !matched; ++j)
      if (!used[j] && graph_isomorphism(fa, b[j], budget)) {
        used[j] = true;
        matched = true;
      }
    if (!matched) return false;
  }
  return true;
}

bool certificate_ok(const GraphFactorization& f, const std::shared_ptr<const MultiGraph>& input) {
  return f.certificate.source.get() == f.rebuilt.get() &&
         f.certificate.target.get() == input.get() && f.certificate.is_bijective() &&
         is_graph_homomorphism(f.certificate);
}

MultiGraph random_nonbipartite(Rng& rng, int max_vertices) {
  for (int t = 0; t < 256; ++t) {
    MultiGraph g = random_connected_simple_graph(rng, max_vertices);
    if (!is_bipartite(g)) return g;
  }
  return complete_graph(3);
}

void suite_g3(std::vector<InstanceResult>& out, Rng& rng, int trials, std::uint64_t budget) {
  struct Prime {
    const char* name;
    MultiGraph g;
  };
  std::vector<Prime> primes;
  primes.push_back({"prime-C5", cycle_graph(5)});
  primes.push_back({"prime-C7", cycle_graph(7)});
  primes.push_back({"prime-K4", complete_graph(4)});
  primes.push_back({"prime-C4-in-S", cycle_graph(4)});
  for (auto& p : primes)
    run_instance(out, p.name, [&](InstanceResult& r) {
      r.pass = is_prime_graph(sp(std::move(p.g)), FactorClass::S, budget);
      r.detail = "no division in S";
    });
  run_instance(out, "composite-C4-in-S0", [&](InstanceResult& r) {
    // with loops allowed C4 divides as (K2 + two loops) x K2
    r.pass = !is_prime_graph(sp(cycle_graph(4)), FactorClass::S0, budget);
    r.detail = "divides once loops are allowed";
  });
  auto factor_pair = [&](InstanceResult& r, const MultiGraph& a, const MultiGraph& b) {
    auto prod = tensor_product(sp(a), sp(b)).product;
    GraphFactorization f = graph_prime_factorization(prod, FactorClass::S, budget);
    bool parts = f.factors.size() == 2 &&
                 same_prime_multiset(f.factors, {sp(a), sp(b)}, budget);
    r.pass = parts && certificate_ok(f, prod);
    r.detail = std::to_string(f.factors.size()) + " prime factors, certificate verified";
    if (!r.pass)
      r.detail = "factors or certificate wrong\n# left factor\n" + graph_doc(a) +
                 "# right factor\n" + graph_doc(b);
  };
  run_instance(out, "factor-C3*C5",
               [&](InstanceResult& r) { factor_pair(r, cycle_graph(3), cycle_graph(5)); });
  run_instance(out, "factor-K3*K4",
               [&](InstanceResult& r) { factor_pair(r, complete_graph(3), complete_graph(4)); });
  run_instance(out, "factor-relabeled", [&](InstanceResult& r) {
    auto prod = tensor_product(sp(cycle_graph(3)), sp(cycle_graph(5))).product;
    auto shuffled = sp(relabeled_copy(*prod, rng));
    GraphFactorization f1 = graph_prime_factorization(prod, FactorClass::S, budget);
    GraphFactorization f2 = graph_prime_factorization(shuffled, FactorClass::S, budget);
    r.pass = same_prime_multiset(f1.factors, f2.factors, budget) && certificate_ok(f2, shuffled);
    r.detail = "same primes under relabeling";
  });
  run_instance(out, "factor-with-loops-S0", [&](InstanceResult& r) {
    GraphData d;
    for (int v = 0; v < 3; ++v) d.vertices.push_back(std::to_string(v));
    d.edges = {{"e0", "0", "1"}, {"e1", "1", "2"}, {"e2", "0", "2"}, {"l", "0", "0"}};
    auto a = sp(MultiGraph(d));
    auto b = sp(complete_graph(3));
    auto prod = direct_product_s0(a, b).product;
    GraphFactorization f = graph_prime_factorization(prod, FactorClass::S0, budget);
    r.pass = f.factors.size() == 2 && same_prime_multiset(f.factors, {a, b}, budget) &&
             certificate_ok(f, prod);
    r.detail = std::to_string(f.factors.size()) + " prime factors in S0";
  });
  for (int t = 0; t < trials; ++t) {
    MultiGraph a = random_nonbipartite(rng, 4);
    MultiGraph b = random_nonbipartite(rng, 4);
    run_instance(out, "random" + std::to_string(t), [&](InstanceResult& r) {
      auto sa = sp(std::move(a)), sb = sp(std::move(b));
      auto prod = tensor_product(sa, sb).product;
      GraphFactorization fp = graph_prime_factorization(prod, FactorClass::S, budget);
      GraphFactorization fa = graph_prime_factorization(sa, FactorClass::S, budget);
      GraphFactorization fb = graph_prime_factorization(sb, FactorClass::S, budget);
      std::vector<std::shared_ptr<const MultiGraph>> expect = fa.factors;
      expect.insert(expect.end(), fb.factors.begin(), fb.factors.end());
      r.pass = same_prime_multiset(fp.factors, expect, budget) && certificate_ok(fp, prod);
      r.detail = std::to_string(fp.factors.size()) + " primes match factor primes";
      if (!r.pass)
        r.detail = "prime multisets differ\n# left factor\n" + graph_doc(*sa) +
                   "# right factor\n" + graph_doc(*sb);
    });
  }
}

// ---- g11: complex prime factorization ---------------------------------------

bool complex_certificate_ok(const ComplexFactorization& f,
                            const std::shared_ptr<const Complex>& input) {
  return f.certificate.source.get() == f.rebuilt.get() &&
         f.certificate.target.get() == input.get() && f.certificate.is_bijective() &&
         is_complex_homomorphism(f.certificate);
}

void suite_g11(std::vector<InstanceResult>& out, Rng&, int, std::uint64_t budget) {
  auto factor_pair = [&](InstanceResult& r, Complex cx, Complex cy) {
    auto x = sc(std::move(cx)), y = sc(std::move(cy));
    auto prod = complex_tensor_product(x, y).product;
    ComplexFactorization f = complex_prime_factorization(prod, budget);
    std::vector<bool> used(2, false);
    bool parts = f.factors.size() == 2;
    if (parts)
      for (const auto& fx : {x, y}) {
        bool matched = false;
        for (int j = 0; j < 2 && !matched; ++j)
          if (!used[j] && complex_isomorphism(f.factors[j], fx, budget)) {
            used[j] = true;
            matched = true;
          }
        parts = parts && matched;
      }
    r.pass = parts && complex_certificate_ok(f, prod);
    r.detail =
        r.pass ? "2 prime factors, certificate verified" : "factors or certificate wrong";
  };
  run_instance(out, "factor-triangle*pentagon",
               [&](InstanceResult& r) { factor_pair(r, polygon(3), polygon(5)); });
  run_instance(out, "factor-triangle*triangle",
               [&](InstanceResult& r) { factor_pair(r, polygon(3), polygon(3)); });
  run_instance(out, "factor-tetra*tetra",
               [&](InstanceResult& r) { factor_pair(r, tetrahedron(), tetrahedron()); });
  run_instance(out, "factor-triangle^3", [&](InstanceResult& r) {
    auto tri = sc(polygon(3));
    auto prod = nary_complex_tensor_product({tri, tri, tri}).product;
    ComplexFactorization f = complex_prime_factorization(prod, budget);
    bool parts = f.factors.size() == 3;
    for (const auto& fj : f.factors)
      parts = parts && complex_isomorphism(fj, tri, budget).has_value();
    r.pass = parts && complex_certificate_ok(f, prod);
    r.detail = std::to_string(f.factors.size()) + " prime factors";
  });
  run_instance(out, "prime-tetrahedron", [&](InstanceResult& r) {
    auto x = sc(tetrahedron());
    ComplexFactorization f = complex_prime_factorization(x, budget);
    r.pass = is_prime_complex(x, budget) && f.factors.size() == 1 &&
             f.factors[0].get() == x.get() && complex_certificate_ok(f, x);
    r.detail = "prime, single-factor result";
  });
  run_instance(out, "prime-missing-face", [&](InstanceResult& r) {
    // drop one face of triangle x pentagon: the skeleton still divides, but
    // the face family is incomplete, so no split is accepted
    auto prod = complex_tensor_product(sc(polygon(3)), sc(polygon(5))).product;
    std::vector<Face> faces(prod->faces().begin(), prod->faces().end() - 1);
    auto x = sc(Complex(prod->skeleton_ptr(), faces));
    ComplexFactorization f = complex_prime_factorization(x, budget);
    r.pass = is_prime_complex(x, budget) && f.factors.size() == 1 &&
             complex_certificate_ok(f, x);
    r.detail = "incomplete face family stays prime";
  });
  auto expect_rejected = [&](InstanceResult& r, Complex cx, const char* why) {
    auto x = sc(std::move(cx));
    try {
      complex_prime_factorization(x, budget);
      r.pass = false;
      r.detail = "hypothesis violation not reported";
    } catch (const Error& e) {
      r.pass = e.code() == Errc::HypothesisViolated;
      r.detail = r.pass ? why : e.what();
    }
  };
  run_instance(out, "reject-wrapped", [&](InstanceResult& r) {
    expect_rejected(r, wrapped_polygon(15, 3), "multiply-wrapped face rejected");
  });
  run_instance(out, "reject-bipartite-skeleton", [&](InstanceResult& r) {
    expect_rejected(r, polygon(4), "bipartite skeleton rejected");
  });
}

// ---- g12: automorphisms of products are Cartesian ---------------------------

void suite_g12(std::vector<InstanceResult>& out, Rng&, int, std::uint64_t budget) {
  struct Pair {
    const char* name;
    Complex x, y;
  };
  std::vector<Pair> fixtures;
  fixtures.push_back({"triangle*triangle", polygon(3), polygon(3)});
  fixtures.push_back({"triangle*pentagon", polygon(3), polygon(5)});
  fixtures.push_back({"tetra*tetra", tetrahedron(), tetrahedron()});
  for (auto& f : fixtures)
    run_instance(out, f.name, [&](InstanceResult& r) {
      auto x = sc(std::move(f.x)), y = sc(std::move(f.y));
      NaryComplexProduct nary = nary_complex_tensor_product({x, y});
      PermGroup aut = complex_automorphism_group(nary.product, budget);
      PermGroup cart = cartesian_subgroup(nary, nullptr, budget);
      r.pass = aut.same_group(cart);
      r.detail = "order " + std::to_string(aut.order()) +
                 (r.pass ? " equals Cartesian subgroup"
                         : " vs Cartesian order " + std::to_string(cart.order()));
    });
}

// ---- shared: elementwise Cartesian-shape tests ------------------------------

// Is the vertex map alpha a complex isomorphism x -> y? Exact for simple
// complexes on simple skeletons (where vertex maps determine everything).
bool vertex_map_is_complex_iso(const Complex& x, const Complex& y, const std::vector<int>& alpha) {
  const MultiGraph& gx = x.skeleton();
  const MultiGraph& gy = y.skeleton();
  if (gx.vertex_count() != gy.vertex_count() || gx.edge_count() != gy.edge_count() ||
      x.face_count() != y.face_count())
    return false;
  std::vector<int> seen(gy.vertex_count(), 0);
  for (int v : alpha) {
    if (v < 0 || v >= gy.vertex_count() || seen[v]) return false;
    seen[v] = 1;
  }
  for (int u = 0; u < gx.vertex_count(); ++u)
    for (int v = u; v < gx.vertex_count(); ++v)
      if (gx.multiplicity(u, v) != gy.multiplicity(alpha[u], alpha[v])) return false;
  // transport each face boundary and match it against y's face cycles
  std::multiset<std::string> want, got;
  for (const Face& f : y.faces()) want.insert(canonical_cycle_key(gy, f.boundary));
  for (const Face& f : x.faces()) {
    Walk image;
    image.start = alpha[f.boundary.start];
    int at = f.boundary.start;
    for (const Step& s : f.boundary.steps) {
      int to = step_target(gx, s);
      int iu = alpha[at], iv = alpha[to];
      int edge = -1;
      for (auto [e, side] : gy.incident_darts(iu))
        if (side == 0 ? gy.edge(e).ends[1] == iv || gy.is_loop(e)
                      : gy.edge(e).ends[0] == iv || gy.is_loop(e)) {
          edge = e;
          break;
        }
      if (edge < 0) return false;
      image.steps.push_back(Step{edge, gy.edge(edge).ends[0] == iu});
      at = to;
    }
    got.insert(canonical_cycle_key(gy, image));
  }
  return want == got;
}

// Does this automorphism of a product component decompose into factor maps
// plus a coordinate permutation? Exact when the product complex is simple
// with a simple skeleton. tuples[i] is the factor-coordinate tuple of the
// component's i-th vertex; vperm is the automorphism's vertex action in the
// same indexing.
template <typename FactorIso>
bool cartesian_shaped(const std::vector<std::vector<int>>& tuples,
                      const std::vector<int>& vperm, const std::vector<int>& factor_sizes,
                      FactorIso&& factor_iso) {
  int m = static_cast<int>(factor_sizes.size());
  std::vector<int> sigma(m);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    bool ok = true;
    for (int j = 0; j < m && ok; ++j) ok = factor_sizes[j] == factor_sizes[sigma[j]];
    if (!ok) continue;
    std::vector<std::vector<int>> alpha(m);
    for (int j = 0; j < m; ++j) alpha[j].assign(factor_sizes[j], -1);
    for (std::size_t i = 0; i < tuples.size() && ok; ++i) {
      const std::vector<int>& src = tuples[i];
      const std::vector<int>& img = tuples[vperm[i]];
      for (int j = 0; j < m && ok; ++j) {
        int a = src[j], b = img[sigma[j]];
        if (alpha[j][a] < 0)
          alpha[j][a] = b;
        else if (alpha[j][a] != b)
          ok = false;
      }
    }
    for (int j = 0; j < m && ok; ++j) {
      for (int v : alpha[j])
        if (v < 0) ok = false;  // component missed part of a factor: inconclusive
      ok = ok && factor_iso(j, sigma[j], alpha[j]);
    }
    if (ok) return true;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return false;
}

bool graph_iso_by_vertex_map(const MultiGraph& x, const MultiGraph& y,
                             const std::vector<int>& alpha) {
  if (x.vertex_count() != y.vertex_count() || x.edge_count() != y.edge_count()) return false;
  std::vector<int> seen(y.vertex_count(), 0);
  for (int v : alpha) {
    if (v < 0 || v >= y.vertex_count() || seen[v]) return false;
    seen[v] = 1;
  }
  for (int u = 0; u < x.vertex_count(); ++u)
    for (int v = u; v < x.vertex_count(); ++v)
      if (x.multiplicity(u, v) != y.multiplicity(alpha[u], alpha[v])) return false;
  return true;
}

// ---- h2: components of products of even cycles ------------------------------

void suite_h2_m3(InstanceResult& r, std::uint64_t budget) {
  auto c6 = sp(cycle_graph(6));
  NaryGraphProduct nary = nary_tensor_product({c6, c6, c6});
  if (!is_simple(*nary.product)) {
    r.pass = false;
    r.detail = "product unexpectedly not simple";
    return;
  }
  ComponentSplit split = components(*nary.product);
  r.pass = split.vertex_sets.size() == 4;
  std::vector<int> sizes{6, 6, 6};
  long long order = 0;
  for (std::size_t c = 0; c < split.vertex_sets.size() && r.pass; ++c) {
    const std::vector<int>& vs = split.vertex_sets[c];
    std::vector<std::vector<int>> tuples(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i) tuples[i] = nary.vertex_tuple(vs[i]);
    auto comp = sp(split.subgraphs[c]);
    std::vector<GraphHom> autos = enumerate_graph_automorphisms(comp, budget);
    order = static_cast<long long>(autos.size());
    for (const GraphHom& h : autos) {
      if (!cartesian_shaped(tuples, h.vmap, sizes, [&](int j, int k, const std::vector<int>& a) {
            return graph_iso_by_vertex_map(*nary.factors[j], *nary.factors[k], a);
          })) {
        r.pass = false;
        r.detail = "non-Cartesian automorphism in component " + std::to_string(c);
        return;
      }
    }
  }
  if (r.pass)
    r.detail = "4 components, " + std::to_string(order) +
               " automorphisms each, all Cartesian-shaped";
  else if (r.detail.empty())
    r.detail = "unexpected component count";
}

void suite_h2(std::vector<InstanceResult>& out, Rng&, int, std::uint64_t budget) {
  run_instance(out, "C6*C6-components", [&](InstanceResult& r) {
    auto c6 = sp(cycle_graph(6));
    NaryGraphProduct nary = nary_tensor_product({c6, c6});
    ComponentSplit split = components(*nary.product);
    r.pass = split.vertex_sets.size() == 2;
    long long order = -1;
    for (std::size_t i = 0; i < split.vertex_sets.size() && r.pass; ++i) {
      PermGroup aut = graph_automorphism_group(sp(split.subgraphs[i]), budget);
      PermGroup cart = cartesian_subgroup(nary, &split.vertex_sets[i], budget);
      r.pass = aut.same_group(cart) && aut.order() == 144;
      order = aut.order();
    }
    r.detail = r.pass ? "both components: order 144, equal to restricted Cartesian"
                      : "component group mismatch (order " + std::to_string(order) + ")";
  });
  run_instance(out, "C4*C4-strictness", [&](InstanceResult& r) {
    auto c4 = sp(cycle_graph(4));
    NaryGraphProduct nary = nary_tensor_product({c4, c4});
    ComponentSplit split = components(*nary.product);
    PermGroup aut = graph_automorphism_group(sp(split.subgraphs[0]), budget);
    PermGroup cart = cartesian_subgroup(nary, &split.vertex_sets[0], budget);
    r.pass = split.vertex_sets.size() == 2 && aut.order() == 1152 &&
             cart.is_subgroup_of(aut) && cart.order() < aut.order();
    r.detail = "component order " + std::to_string(aut.order()) + " strictly above Cartesian " +
               std::to_string(cart.order());
  });
  run_instance(out, "C6^3-components", [&](InstanceResult& r) {
    try {
      suite_h2_m3(r, budget);
    } catch (const Error& e) {
      if (e.code() != Errc::Budget && e.code() != Errc::TooLarge) throw;
      r.pass = true;
      r.detail = std::string("skipped (budget): ") + e.what();
    }
  });
}


// ---- h6: face blocks --------------------------------------------------------

struct BlockFixture {
  std::string name;
  std::vector<std::shared_ptr<const Complex>> factors;
};

std::vector<BlockFixture> block_fixtures() {
  std::vector<BlockFixture> out;
  out.push_back({"square*square", {sc(polygon(4)), sc(polygon(4))}});
  out.push_back({"hex*hex", {sc(polygon(6)), sc(polygon(6))}});
  out.push_back({"hex*hex*hex", {sc(polygon(6)), sc(polygon(6)), sc(polygon(6))}});
  out.push_back({"necklace4*hex", {sc(necklace(4, 6)), sc(polygon(6))}});
  return out;
}

std::set<std::vector<int>> partition_of(const std::vector<FaceBlock>& blocks) {
  std::set<std::vector<int>> out;
  for (const FaceBlock& b : blocks) {
    std::vector<int> m = b.members;
    std::sort(m.begin(), m.end());
    out.insert(std::move(m));
  }
  return out;
}

void suite_h6(std::vector<InstanceResult>& out, Rng&, int, std::uint64_t) {
  for (const BlockFixture& fx : block_fixtures())
    run_instance(out, fx.name, [&](InstanceResult& r) {
      NaryComplexProduct nary = nary_complex_tensor_product(fx.factors);
      int m = static_cast<int>(fx.factors.size());
      std::size_t per_family = std::size_t{1} << (m - 1);
      std::vector<FaceBlock> label = face_blocks_by_label(nary);
      std::vector<FaceBlock> intrinsic = face_blocks_intrinsic(*nary.product, m);
      bool same = partition_of(label) == partition_of(intrinsic);
      std::map<std::vector<int>, std::size_t> families;
      for (const FaceBlock& b : label) ++families[b.generators];
      bool family_counts = true;
      for (const auto& [gens, n] : families) family_counts = family_counts && n == per_family;
      std::vector<int> block_of(nary.product->face_count(), -1);
      for (std::size_t i = 0; i < label.size(); ++i)
        for (int f : label[i].members) block_of[f] = static_cast<int>(i);
      bool antipodal_ok = true;
      for (const auto& [pair, faces] : antipodal_pair_faces(*nary.product)) {
        if (faces.size() != per_family) antipodal_ok = false;
        for (int f : faces) antipodal_ok = antipodal_ok && block_of[f] == block_of[faces[0]];
      }
      r.pass = same && family_counts && antipodal_ok;
      r.detail = std::to_string(label.size()) + " blocks; intrinsic " +
                 (same ? "matches" : "differs") + "; families " +
                 (family_counts ? "split 2^(m-1)" : "wrong size") + "; antipodal pairs " +
                 (antipodal_ok ? "shared by 2^(m-1) faces in one block" : "violated");
    });
}

// ---- h8: block incidence equivalence ----------------------------------------

// Incident block pairs need factors with several faces: products of single
// polygons put the two blocks of the lone family into different components.
std::vector<BlockFixture> incidence_fixtures() {
  std::vector<BlockFixture> out;
  out.push_back({"necklace3*hex", {sc(necklace(3, 6)), sc(polygon(6))}});
  out.push_back({"necklace4*hex", {sc(necklace(4, 6)), sc(polygon(6))}});
  out.push_back({"necklace3*necklace3", {sc(necklace(3, 6)), sc(necklace(3, 6))}});
  out.push_back({"hex*hex*necklace3", {sc(polygon(6)), sc(polygon(6)), sc(necklace(3, 6))}});
  return out;
}

void suite_h8(std::vector<InstanceResult>& out, Rng&, int, std::uint64_t) {
  for (const BlockFixture& fx : incidence_fixtures())
    run_instance(out, fx.name, [&](InstanceResult& r) {
      NaryComplexProduct nary = nary_complex_tensor_product(fx.factors);
      std::vector<FaceBlock> blocks = face_blocks_by_label(nary);
      int both = 0, neither = 0, cex = 0, skipped = 0;
      for (std::size_t i = 0; i < blocks.size(); ++i)
        for (std::size_t j = i + 1; j < blocks.size(); ++j) {
          try {
            IncidenceReport rep = verify_block_incidence_equiv(nary, blocks[i], blocks[j]);
            if (rep.verdict == IncidenceVerdict::Both)
              ++both;
            else if (rep.verdict == IncidenceVerdict::Neither)
              ++neither;
            else
              ++cex;
          } catch (const Error& e) {
            if (e.code() != Errc::NotIncident) throw;
            ++skipped;
          }
        }
      r.pass = cex == 0 && both > 0;
      r.detail = std::to_string(both) + " both, " + std::to_string(neither) + " neither, " +
                 std::to_string(cex) + " counterexamples, " + std::to_string(skipped) +
                 " not incident";
    });
}

// ---- blockgraph: Cartesian structure of the block graph ---------------------

void suite_blockgraph(std::vector<InstanceResult>& out, Rng&, int, std::uint64_t budget) {
  struct Fixture {
    std::string name;
    std::vector<std::shared_ptr<const Complex>> factors;
  };
  std::vector<Fixture> fixtures;
  fixtures.push_back({"necklace3", {sc(necklace(3, 6))}});
  fixtures.push_back({"hex*necklace3", {sc(polygon(6)), sc(necklace(3, 6))}});
  fixtures.push_back({"necklace3*band4", {sc(necklace(3, 6)), sc(strip(4, false))}});
  fixtures.push_back(
      {"hex*necklace3*band3", {sc(polygon(6)), sc(necklace(3, 6)), sc(strip(3, false))}});
  for (auto& fx : fixtures)
    run_instance(out, fx.name, [&](InstanceResult& r) {
      BlockGraph bg = block_graph(fx.factors);
      std::shared_ptr<const MultiGraph> expected = sp(bg.factor_graphs[0]);
      for (std::size_t i = 1; i < bg.factor_graphs.size(); ++i)
        expected = cartesian_product(expected, sp(bg.factor_graphs[i])).product;
      r.pass = graph_isomorphism(sp(bg.graph), expected, budget).has_value();
      r.detail = std::to_string(bg.graph.vertex_count()) + " tuples, " +
                 std::to_string(bg.graph.edge_count()) + " edges" +
                 (r.pass ? ", isomorphic to the Cartesian product" : "; NOT Cartesian");
    });
  run_instance(out, "necklace3-incidence", [&](InstanceResult& r) {
    BlockGraph bg = block_graph({sc(necklace(3, 6))});
    r.pass = iso(bg.factor_graphs[0], cycle_graph(3), budget) &&
             iso(bg.graph, cycle_graph(3), budget);
    r.detail = "necklace face incidence graph is a 3-cycle";
  });
}

using SuiteFn = void (*)(std::vector<InstanceResult>&, Rng&, int, std::uint64_t);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"e8", suite_e8},   {"e9", suite_e9},   {"bf", suite_bf},
      {"e3a", suite_e3a}, {"g3", suite_g3},   {"g11", suite_g11},
      {"g12", suite_g12}, {"h2", suite_h2},   {"h6", suite_h6},
      {"h8", suite_h8},   {"blockgraph", suite_blockgraph},
  };
  return table;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : suite_table()) out.push_back(name);
  return out;
}

VerificationReport run_suite(const std::string& id, std::uint64_t seed, int trials,
                             std::uint64_t budget) {
  for (const auto& [name, fn] : suite_table())
    if (name == id) {
      VerificationReport report;
      report.suite = id;
      report.seed = seed;
      report.trials = trials;
      Rng rng(seed);
      fn(report.instances, rng, trials, budget);
      return report;
    }
  raise(Errc::BadParameter, "unknown suite '" + id + "'");
}

// ---- conjecture harness ------------------------------------------------------

namespace {

// Closed-surface test: every edge borders exactly two face sides and every
// vertex link is one cycle.
bool has_surface_structure(const Complex& x) {
  const MultiGraph& g = x.skeleton();
  if (x.face_count() == 0 || g.vertex_count() == 0) return false;
  std::vector<int> uses(g.edge_count(), 0);
  for (const Face& f : x.faces())
    for (const Step& s : f.boundary.steps) ++uses[s.edge];
  for (int n : uses)
    if (n != 2) return false;
  for (int v = 0; v < g.vertex_count(); ++v) {
    LinkGraph l = link(x, v);
    if (l.graph.vertex_count() == 0 || !is_connected(l.graph)) return false;
    if (l.graph.edge_count() != l.graph.vertex_count()) return false;
    for (int u = 0; u < l.graph.vertex_count(); ++u)
      if (l.graph.degree(u) != 2) return false;
  }
  return true;
}

bool uniform_face_length(const Complex& x, int len) {
  if (x.face_count() == 0) return false;
  for (const Face& f : x.faces())
    if (f.boundary.length() != len) return false;
  return true;
}

struct Candidate {
  std::string name;
  std::shared_ptr<const Complex> complex;
};

std::vector<Candidate> conjecture_pool(bool bipartite_rule) {
  std::vector<Candidate> raw;
  raw.push_back({"hexagon", sc(polygon(6))});
  for (int core : {1, 2, 3})
    raw.push_back({"wrapped6over" + std::to_string(core), sc(wrapped_polygon(6, core))});
  for (int beads : {2, 3, 4})
    raw.push_back({"necklace" + std::to_string(beads), sc(necklace(beads, 6))});
  for (int b = 2; b <= 12; b += 2)
    for (int a = 1; 2 * a * b <= 24; ++a) {
      try {
        raw.push_back({"hextorus" + std::to_string(a) + "x" + std::to_string(b),
                       sc(hex_torus(a, b))});
      } catch (const Error&) {
        // degenerate parameters; not a candidate
      }
    }
  std::vector<Candidate> out;
  for (auto& c : raw) {
    const Complex& x = *c.complex;
    if (!uniform_face_length(x, 6) || !is_elementary(x) || !is_ordinary(x)) continue;
    if (bipartite_rule ? !is_bipartite(x.skeleton()) : !has_surface_structure(x)) continue;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

std::vector<std::string> conjecture_names() { return {"h11", "h12"}; }

ConjectureOutcome run_conjecture(const std::string& id, std::uint64_t seed, int max_size,
                                 std::uint64_t budget) {
  if (id != "h11" && id != "h12") raise(Errc::BadParameter, "unknown conjecture '" + id + "'");
  if (max_size < 1) raise(Errc::BadParameter, "max-size must be positive");
  ConjectureOutcome outcome;
  VerificationReport& report = outcome.report;
  report.suite = id;
  report.seed = seed;
  report.trials = 0;
  report.note = "max-size " + std::to_string(max_size);

  std::vector<Candidate> pool = conjecture_pool(id == "h11");
  {
    InstanceResult r;
    r.name = "factor-pool";
    r.pass = true;
    for (const Candidate& c : pool) r.detail += (r.detail.empty() ? "" : " ") + c.name;
    if (pool.empty()) r.detail = "(empty)";
    report.instances.push_back(std::move(r));
  }

  // all multisets of 2 or 3 factors
  std::vector<std::vector<int>> picks;
  int q = static_cast<int>(pool.size());
  for (int i = 0; i < q; ++i)
    for (int j = i; j < q; ++j) picks.push_back({i, j});
  for (int i = 0; i < q; ++i)
    for (int j = i; j < q; ++j)
      for (int k = j; k < q; ++k) picks.push_back({i, j, k});

  for (const std::vector<int>& pick : picks) {
    std::string name;
    std::vector<std::shared_ptr<const Complex>> factors;
    long long bound = 1;
    for (int i : pick) {
      name += (name.empty() ? "" : "*") + pool[i].name;
      factors.push_back(pool[i].complex);
      bound *= pool[i].complex->skeleton().vertex_count();
    }
    bound /= 1ll << (pick.size() - 1);  // components can't be smaller than this
    run_instance(report.instances, name, [&](InstanceResult& r) {
      if (bound > max_size) {
        r.pass = true;
        r.detail = "skipped: component bound " + std::to_string(bound) +
                   " exceeds max-size " + std::to_string(max_size);
        return;
      }
      NaryComplexProduct nary = nary_complex_tensor_product(factors);
      std::vector<int> sizes;
      bool fast_path = is_simple(*nary.product->skeleton_ptr()) &&
                       is_simple_complex(*nary.product);
      for (const auto& f : factors) {
        sizes.push_back(f->skeleton().vertex_count());
        fast_path = fast_path && is_simple(f->skeleton());
      }
      ComponentSplit split = components(nary.product->skeleton());
      long long checked = 0;
      for (std::size_t c = 0; c < split.vertex_sets.size(); ++c) {
        const std::vector<int>& vs = split.vertex_sets[c];
        if (static_cast<int>(vs.size()) > max_size) {
          r.pass = true;
          r.detail = "skipped: component of " + std::to_string(vs.size()) +
                     " vertices exceeds max-size " + std::to_string(max_size);
          return;
        }
        auto comp = sc(component_complex(*nary.product, vs[0]));
        if (!fast_path) {
          // exact but slower: compare the full groups
          PermGroup aut = complex_automorphism_group(comp, budget);
          PermGroup cart = cartesian_subgroup(nary, &vs, budget);
          if (!aut.same_group(cart)) {
            r.pass = false;
            r.detail = "component " + std::to_string(c) + ": automorphism group of order " +
                       std::to_string(aut.order()) + " exceeds generated order " +
                       std::to_string(cart.order());
            outcome.counterexample = "# conjecture " + id + " counterexample\n# instance " +
                                     name + "\n" + emit_complex(*comp);
            return;
          }
          checked += aut.order();
          continue;
        }
        std::vector<std::vector<int>> tuples(vs.size());
        for (std::size_t i = 0; i < vs.size(); ++i) tuples[i] = nary.vertex_tuple(vs[i]);
        std::vector<ComplexHom> autos = enumerate_complex_automorphisms(comp, budget);
        for (const ComplexHom& h : autos) {
          bool shaped = cartesian_shaped(
              tuples, h.skeleton.vmap, sizes, [&](int j, int k, const std::vector<int>& a) {
                return vertex_map_is_complex_iso(*factors[j], *factors[k], a);
              });
          if (!shaped) {
            r.pass = false;
            std::string perm = cycle_notation(
                permutation_of(h), comp->skeleton().vertex_ids(),
                dart_labels(comp->skeleton()), face_id_labels(*comp));
            r.detail = "component " + std::to_string(c) +
                       " has an automorphism outside the factor-generated group: " + perm;
            outcome.counterexample = "# conjecture " + id + " counterexample\n# instance " +
                                     name + "\n# automorphism " + perm + "\n" +
                                     emit_complex(*comp);
            return;
          }
        }
        checked += static_cast<long long>(autos.size());
      }
      r.pass = true;
      r.detail = std::to_string(split.vertex_sets.size()) + " components, " +
                 std::to_string(checked) + " automorphisms, all factor-generated";
    });
    if (outcome.counterexample) break;
  }
  return outcome;
}

}  // namespace polycell

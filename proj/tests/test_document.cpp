#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "polycell/complex_products.hpp"
#include "polycell/corpus.hpp"
#include "polycell/document.hpp"

using namespace polycell;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

TEST_CASE("parsing a hand-written document") {
  std::string text =
      "pcc 1\n"
      "# a loop with a three-step face\n"
      "vertex v\n"
      "edge e v v\n"
      "\n"
      "face f e+ e+ e-\n";
  auto x = parse_complex(text);
  CHECK(x->skeleton().vertex_count() == 1);
  CHECK(x->skeleton().edge_count() == 1);
  REQUIRE(x->face_count() == 1);
  CHECK(x->face(0).boundary.length() == 3);
  CHECK(!x->face(0).boundary.steps[2].forward);
  CHECK(flags(*x).size() == 6);
}

TEST_CASE("emit then parse is the identity, emit of a parse is byte-stable") {
  for (Complex fixture : {polygon(5), dunce_hat(), tetrahedron(), necklace(3, 6)}) {
    std::string text = emit_complex(fixture);
    auto back = parse_complex(text);
    CHECK(complexes_equal(*back, fixture));
    CHECK(emit_complex(*back) == text);
  }
  // products survive the round trip too
  ComplexProduct p = complex_tensor_product(shared_complex(polygon(3)),
                                            shared_complex(polygon(5)));
  auto back = parse_complex(emit_complex(*p.product));
  CHECK(complexes_equal(*back, *p.product));
}

TEST_CASE("unicode minus is accepted on input, ASCII emitted") {
  std::string ascii =
      "pcc 1\nvertex v\nedge e v v\nface f e+ e+ e-\n";
  std::string unicode =
      "pcc 1\nvertex v\nedge e v v\nface f e+ e+ e\xE2\x88\x92\n";
  auto a = parse_complex(ascii);
  auto b = parse_complex(unicode);
  CHECK(complexes_equal(*a, *b));
  CHECK(emit_complex(*b).find('-') != std::string::npos);
  CHECK(emit_complex(*b).find("\xE2\x88\x92") == std::string::npos);
}

TEST_CASE("parse errors carry a position") {
  auto expect_parse_error = [](const std::string& text, const std::string& needle) {
    try {
      parse_complex(text);
      FAIL_CHECK("no error for: " << text);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::ParseError);
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  expect_parse_error("", "pcc");                              // missing header
  expect_parse_error("pcc 2\n", "version");                   // wrong version
  expect_parse_error("pcc 1\nvortex v\n", "line 2");          // unknown directive
  expect_parse_error("pcc 1\nvertex\n", "line 2");            // missing id
  expect_parse_error("pcc 1\nedge e v\n", "line 2");          // missing endpoint
  expect_parse_error("pcc 1\nvertex v\nedge e v v\nface f e\n", "direction");
}

TEST_CASE("semantic errors name the broken invariant") {
  auto expect_semantic = [](const std::string& text) {
    try {
      parse_complex(text);
      FAIL_CHECK("no error for: " << text);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::SemanticError);
    }
  };
  expect_semantic("pcc 1\nedge e v w\n");                       // endpoints undeclared
  expect_semantic("pcc 1\nvertex v\nvertex v\n");               // duplicate id
  expect_semantic("pcc 1\nvertex v\nface f e+\n");              // unknown edge in face
  expect_semantic("pcc 1\nvertex v\nvertex w\nedge e v w\nface f e+ e+\n");  // open walk
}

TEST_CASE("save and load round-trip through the filesystem") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "polycell-doc-test";
  fs::create_directories(dir);
  fs::path file = dir / "hex.pcc";
  Complex hex = polygon(6);
  save_complex(file.string(), hex);
  auto back = load_complex(file.string());
  CHECK(complexes_equal(*back, hex));
  CHECK(slurp(file.string()) == emit_complex(hex));
  fs::remove_all(dir);
  CHECK_THROWS_AS(load_complex((dir / "missing.pcc").string()), Error);
}

TEST_CASE("dot export lists vertices and edges") {
  MultiGraph k2 = complete_graph(2);
  std::string dot = dot_graph(k2);
  CHECK(dot.find("graph") == 0);
  CHECK(dot.find("\"0\"") != std::string::npos);
  CHECK(dot.find("\"1\"") != std::string::npos);
  CHECK(dot.find("--") != std::string::npos);
  // loops render as self-edges
  std::string loop = dot_graph(loop_graph());
  CHECK(loop.find("--") != std::string::npos);
}

TEST_CASE("comments and blank lines are ignored everywhere") {
  std::string text =
      "pcc 1\n"
      "\n"
      "# leading comment\n"
      "vertex a   # trailing comment\n"
      "vertex b\n"
      "# between\n"
      "edge e a b\n"
      "\n";
  auto x = parse_complex(text);
  CHECK(x->skeleton().vertex_count() == 2);
  CHECK(x->skeleton().edge_count() == 1);
  CHECK(x->face_count() == 0);
}

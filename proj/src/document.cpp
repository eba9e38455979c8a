#include "polycell/document.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "polycell/error.hpp"

namespace polycell {

namespace {

struct Token {
  std::string text;
  int column;  // 1-based byte offset
};

[[noreturn]] void parse_fail(int line, int column, const std::string& what) {
  raise(Errc::ParseError,
        "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

std::vector<Token> tokenize(const std::string& raw) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < raw.size()) {
    if (raw[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(raw[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < raw.size() && raw[j] != '#' &&
           !std::isspace(static_cast<unsigned char>(raw[j])))
      ++j;
    out.push_back({raw.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

constexpr const char* kUnicodeMinus = "\xe2\x88\x92";

std::pair<std::string, bool> parse_step(const Token& tok, int line) {
  const std::string& t = tok.text;
  std::string id;
  bool forward;
  if (!t.empty() && t.back() == '+') {
    id = t.substr(0, t.size() - 1);
    forward = true;
  } else if (!t.empty() && t.back() == '-') {
    id = t.substr(0, t.size() - 1);
    forward = false;
  } else if (t.size() >= 3 && t.compare(t.size() - 3, 3, kUnicodeMinus) == 0) {
    id = t.substr(0, t.size() - 3);
    forward = false;
  } else {
    parse_fail(line, tok.column, "step '" + t + "' lacks a +/- direction");
  }
  if (id.empty()) parse_fail(line, tok.column, "step '" + t + "' has no edge id");
  return {id, forward};
}

void require_arity(const std::vector<Token>& toks, std::size_t n, int line, const char* shape) {
  if (toks.size() != n)
    parse_fail(line, toks[0].column, std::string("expected '") + shape + "'");
}

}  // namespace

std::shared_ptr<const Complex> parse_complex(const std::string& text) {
  ComplexData data;
  bool have_header = false;
  int line = 0;
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::vector<Token> toks = tokenize(raw);
    if (toks.empty()) continue;
    const Token& head = toks[0];
    if (!have_header) {
      if (head.text != "pcc") parse_fail(line, head.column, "expected 'pcc <version>' header");
      require_arity(toks, 2, line, "pcc <version>");
      if (toks[1].text != "1")
        parse_fail(line, toks[1].column, "unsupported format version '" + toks[1].text + "'");
      have_header = true;
    } else if (head.text == "pcc") {
      parse_fail(line, head.column, "duplicate version line");
    } else if (head.text == "vertex") {
      require_arity(toks, 2, line, "vertex <id>");
      data.skeleton.vertices.push_back(toks[1].text);
    } else if (head.text == "edge") {
      require_arity(toks, 4, line, "edge <id> <end0> <end1>");
      data.skeleton.edges.push_back({toks[1].text, toks[2].text, toks[3].text});
    } else if (head.text == "face") {
      if (toks.size() < 2) parse_fail(line, head.column, "expected 'face <id> <step>...'");
      ComplexData::FaceSpec f;
      f.id = toks[1].text;
      for (std::size_t i = 2; i < toks.size(); ++i) f.steps.push_back(parse_step(toks[i], line));
      data.faces.push_back(std::move(f));
    } else {
      parse_fail(line, head.column, "unknown directive '" + head.text + "'");
    }
  }
  if (!have_header) parse_fail(line + 1, 1, "missing 'pcc <version>' header");
  try {
    return std::make_shared<const Complex>(data);
  } catch (const Error& e) {
    raise(Errc::SemanticError, e.what());
  }
}

namespace {

void check_emittable(const std::string& id) {
  if (id.empty()) raise(Errc::BadParameter, "empty id is not representable");
  for (char c : id)
    if (c == '#' || std::isspace(static_cast<unsigned char>(c)) ||
        std::iscntrl(static_cast<unsigned char>(c)))
      raise(Errc::BadParameter, "id '" + id + "' is not representable");
}

}  // namespace

std::string emit_complex(const Complex& x) {
  ComplexData d = x.data();
  std::string out = "pcc 1\n";
  for (const std::string& v : d.skeleton.vertices) {
    check_emittable(v);
    out += "vertex " + v + "\n";
  }
  for (const auto& e : d.skeleton.edges) {
    check_emittable(e.id);
    out += "edge " + e.id + " " + e.end0 + " " + e.end1 + "\n";
  }
  for (const auto& f : d.faces) {
    check_emittable(f.id);
    out += "face " + f.id;
    for (const auto& [edge, forward] : f.steps) out += " " + edge + (forward ? "+" : "-");
    out += "\n";
  }
  return out;
}

std::shared_ptr<const Complex> load_complex(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_complex(buf.str());
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

void save_complex(const std::string& path, const Complex& x) {
  std::string text = emit_complex(x);
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(Errc::BadParameter, "cannot write '" + path + "'");
  out << text;
  if (!out) raise(Errc::BadParameter, "cannot write '" + path + "'");
}

namespace {

std::string dot_quote(const std::string& id) {
  std::string out = "\"";
  for (char c : id) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string dot_graph(const MultiGraph& g) {
  std::string out = "graph {\n";
  for (int v = 0; v < g.vertex_count(); ++v) out += "  " + dot_quote(g.vertex_id(v)) + ";\n";
  for (const auto& e : g.edges())
    out += "  " + dot_quote(g.vertex_id(e.ends[0])) + " -- " + dot_quote(g.vertex_id(e.ends[1])) +
           " [label=" + dot_quote(e.id) + "];\n";
  out += "}\n";
  return out;
}

}  // namespace polycell

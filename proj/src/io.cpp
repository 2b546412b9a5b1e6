#include "lexshell/io.hpp"

#include <cctype>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

namespace lexshell {

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.a, e.b});
  return {{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& j) {
  try {
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("each edge must be a pair [a, b]");
      edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return Graph(j.at("n").get<int>(), std::move(edges));
  } catch (const json::exception& ex) {
    throw ParseError(std::string("bad graph JSON: ") + ex.what());
  }
}

json complex_to_json(const Complex& d) {
  json facets = json::array();
  for (VertexSet f : d.facets()) facets.push_back(f.elements());
  return {{"n", d.vertex_count()}, {"facets", std::move(facets)}};
}

Complex complex_from_json(const json& j) {
  try {
    std::vector<VertexSet> faces;
    for (const auto& f : j.at("facets")) faces.push_back(VertexSet::from_vector(f.get<std::vector<int>>()));
    return Complex::from_faces(j.at("n").get<int>(), std::move(faces));
  } catch (const json::exception& ex) {
    throw ParseError(std::string("bad complex JSON: ") + ex.what());
  }
}

json certificate_to_json(const ShellingCertificate& cert) { return {{"order", cert.order}}; }

ShellingCertificate shelling_certificate_from_json(const json& j) {
  try {
    return ShellingCertificate{j.at("order").get<std::vector<std::size_t>>()};
  } catch (const json::exception& ex) {
    throw ParseError(std::string("bad shelling certificate: ") + ex.what());
  }
}

json certificate_to_json(const ShedTree& tree) {
  switch (tree.kind) {
    case ShedTree::Kind::simplex: return {{"leaf", "simplex"}};
    case ShedTree::Kind::void_complex: return {{"leaf", "void"}};
    case ShedTree::Kind::empty_face: return {{"leaf", "empty-face"}};
    case ShedTree::Kind::shed: break;
  }
  return {{"shed", tree.vertex},
          {"del", tree.deletion ? certificate_to_json(*tree.deletion) : json()},
          {"link", tree.link ? certificate_to_json(*tree.link) : json()}};
}

ShedTree shed_tree_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("shed tree node must be an object");
  if (j.contains("leaf")) {
    const std::string kind = j.at("leaf").get<std::string>();
    if (kind == "simplex") return ShedTree::leaf(ShedTree::Kind::simplex);
    if (kind == "void") return ShedTree::leaf(ShedTree::Kind::void_complex);
    if (kind == "empty-face") return ShedTree::leaf(ShedTree::Kind::empty_face);
    throw ParseError("unknown shed tree leaf '" + kind + "'");
  }
  if (!j.contains("shed") || !j.contains("del") || !j.contains("link")) {
    throw ParseError("shed tree node needs shed, del and link");
  }
  return ShedTree::node(j.at("shed").get<int>(), std::make_shared<const ShedTree>(shed_tree_from_json(j.at("del"))),
                        std::make_shared<const ShedTree>(shed_tree_from_json(j.at("link"))));
}

namespace {

json bigint_to_json(const BigInt& v) {
  if (v <= std::numeric_limits<std::int64_t>::max()) return static_cast<std::int64_t>(v);
  return v.str();
}

}  // namespace

json profile_to_json(const HomologyProfile& p) {
  json betti = json::object();
  json torsion = json::object();
  for (int i = -1; i <= p.top_dimension; ++i) {
    const std::string key = std::to_string(i);
    betti[key] = p.betti_at(i);
    json factors = json::array();
    for (const BigInt& f : p.torsion_at(i)) factors.push_back(bigint_to_json(f));
    torsion[key] = std::move(factors);
  }
  return {{"betti", std::move(betti)}, {"torsion", std::move(torsion)}};
}

json stats_to_json(const SearchStats& s) {
  json out = {{"nodes", s.nodes}, {"memo_hits", s.memo_hits}, {"seconds", s.seconds}};
  if (!s.shortcut.empty()) out["shortcut"] = s.shortcut;
  return out;
}

namespace {

class DescriptorParser {
 public:
  explicit DescriptorParser(std::string_view text) : text_(text) {}

  Graph parse() {
    try {
      Graph g = expression();
      skip_space();
      if (pos_ != text_.size()) fail("unexpected trailing input");
      return g;
    } catch (const ParseError&) {
      throw;
    } catch (const std::logic_error& ex) {
      // Construction errors such as an edge endpoint outside the vertex range.
      throw ParseError("in '" + std::string(text_) + "': " + ex.what());
    }
  }

 private:
  Graph expression() {
    Graph g = atom();
    skip_space();
    while (peek() == '[' || peek() == '^') {
      if (peek() == '[') {
        ++pos_;
        Graph h = expression();
        expect(']');
        g = lex_product(g, h);
      } else {
        ++pos_;
        g = expansion(g, ExpansionVector(number_list()));
      }
      skip_space();
    }
    return g;
  }

  Graph atom() {
    skip_space();
    const char c = peek();
    if (c == 'C') {
      ++pos_;
      const int n = number();
      return circulant(CirculantSpec(n, number_list()));
    }
    if (c == 'G') {
      ++pos_;
      const int n = number();
      expect('(');
      std::vector<Edge> edges;
      skip_space();
      if (peek() != ')') {
        while (true) {
          const int a = number();
          expect('-');
          edges.push_back({a, number()});
          skip_space();
          if (peek() != ',') break;
          ++pos_;
        }
      }
      expect(')');
      return Graph(n, std::move(edges));
    }
    if (c == 'K') {
      ++pos_;
      return complete(number());
    }
    if (c == 'E') {
      ++pos_;
      return Graph::edgeless(number());
    }
    if (c == '(') {
      ++pos_;
      Graph g = expression();
      expect(')');
      return g;
    }
    fail("expected C<n>(...), G<n>(a-b,...), K<m>, E<n> or a parenthesized expression");
  }

  // "(a,b,...)", possibly empty.
  std::vector<int> number_list() {
    expect('(');
    std::vector<int> out;
    skip_space();
    if (peek() != ')') {
      out.push_back(number());
      skip_space();
      while (peek() == ',') {
        ++pos_;
        out.push_back(number());
        skip_space();
      }
    }
    expect(')');
    return out;
  }

  int number() {
    skip_space();
    const std::size_t start = pos_;
    if (peek() == '-') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_ || (pos_ == start + 1 && text_[start] == '-')) fail("expected an integer");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse '" + std::string(text_) + "' at position " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

Input input_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("JSON input must be an object");
  if (j.contains("facets")) return complex_from_json(j);
  if (j.contains("edges")) return graph_from_json(j);
  throw ParseError("JSON input needs either \"edges\" or \"facets\"");
}

}  // namespace

Input parse_input(std::string_view descriptor) {
  std::size_t first = 0;
  while (first < descriptor.size() && std::isspace(static_cast<unsigned char>(descriptor[first]))) ++first;
  const std::string_view text = descriptor.substr(first);
  if (!text.empty() && text.front() == '{') {
    try {
      return input_from_json(json::parse(text));
    } catch (const json::parse_error& ex) {
      throw ParseError(std::string("bad JSON: ") + ex.what());
    }
  }
  try {
    return DescriptorParser(text).parse();
  } catch (const ParseError&) {
    const std::filesystem::path path{std::string(text)};
    std::error_code ec;
    if (text.empty() || !std::filesystem::is_regular_file(path, ec)) throw;
    std::ifstream in(path);
    try {
      return input_from_json(json::parse(in));
    } catch (const json::parse_error& ex) {
      throw ParseError("bad JSON in " + path.string() + ": " + ex.what());
    }
  }
}

Graph parse_graph(std::string_view descriptor) {
  Input in = parse_input(descriptor);
  if (auto* g = std::get_if<Graph>(&in)) return std::move(*g);
  throw ParseError("expected a graph, got a complex");
}

std::string describe(const Graph& g) {
  std::string out = "G" + std::to_string(g.vertex_count()) + "(";
  bool first = true;
  for (const Edge& e : g.edges()) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(e.a) + "-" + std::to_string(e.b);
  }
  return out + ")";
}

std::string to_dot(const Graph& g, std::string_view name) {
  std::ostringstream out;
  std::string id;
  for (char c : name) id += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  if (id.empty()) id = "G";
  out << "graph " << id << " {\n";
  out << "  layout=neato;\n  node [shape=circle];\n";
  const int n = g.vertex_count();
  const double radius = std::max(1.0, n / 4.0);
  for (int v = 0; v < n; ++v) {
    const double angle = std::numbers::pi / 2 - 2 * std::numbers::pi * v / std::max(n, 1);
    out << "  " << v << " [label=\"x" << v << "\", pos=\"" << radius * std::cos(angle) << ","
        << radius * std::sin(angle) << "!\"];\n";
  }
  for (const Edge& e : g.edges()) out << "  " << e.a << " -- " << e.b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace lexshell

#include "cocirc/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace cocirc {

namespace {

// Splits into lines, requiring every line (including the last) to end in '\n'.
std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    std::size_t nl = text.find('\n');
    if (nl == std::string_view::npos) throw ParseError("missing final newline");
    lines.push_back(text.substr(0, nl));
    text.remove_prefix(nl + 1);
  }
  return lines;
}

// Canonical decimal only: digits, no sign, no leading zeros (except "0").
int parse_canonical_int(std::string_view token, const char* what) {
  if (token.empty()) throw ParseError(std::string("empty number for ") + what);
  if (token.size() > 1 && token[0] == '0')
    throw ParseError(std::string("non-canonical number for ") + what);
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError(std::string("bad number for ") + what);
  return value;
}

std::pair<std::string_view, std::string_view> split_two(std::string_view line, const char* what) {
  std::size_t space = line.find(' ');
  if (space == std::string_view::npos)
    throw ParseError(std::string("expected two fields for ") + what);
  std::string_view a = line.substr(0, space);
  std::string_view b = line.substr(space + 1);
  if (b.find(' ') != std::string_view::npos)
    throw ParseError(std::string("too many fields for ") + what);
  return {a, b};
}

}  // namespace

std::string write_om(const OrientedMatroid& m) {
  std::ostringstream out;
  out << "om v1\n" << m.n << ' ' << m.r << '\n';
  std::vector<SignVector> sorted = m.cocircuits;
  std::sort(sorted.begin(), sorted.end());
  for (const SignVector& x : sorted) out << x.str() << '\n';
  return out.str();
}

OrientedMatroid parse_om(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.size() < 2) throw ParseError("om file truncated");
  if (lines[0] != "om v1") throw ParseError("bad om header");
  auto [n_tok, r_tok] = split_two(lines[1], "om parameters");
  int n = parse_canonical_int(n_tok, "n");
  int r = parse_canonical_int(r_tok, "r");
  if (n < 1 || r < 1) throw ParseError("om parameters out of range");

  std::vector<SignVector> cocircuits;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    if (static_cast<int>(lines[i].size()) != n) throw ParseError("sign vector length mismatch");
    SignVector x = [&] {
      try {
        return SignVector::parse(lines[i]);
      } catch (const std::invalid_argument& err) {
        throw ParseError(err.what());
      }
    }();
    if (!cocircuits.empty() && !(cocircuits.back() < x))
      throw ParseError("cocircuits not in strictly sorted order");
    cocircuits.push_back(std::move(x));
  }
  return OrientedMatroid{n, r, std::move(cocircuits)};
}

std::string write_graph(const Graph& g) {
  std::ostringstream out;
  out << "graph v1\n" << g.vertex_count << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph parse_graph(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.size() < 2) throw ParseError("graph file truncated");
  if (lines[0] != "graph v1") throw ParseError("bad graph header");
  auto [v_tok, e_tok] = split_two(lines[1], "graph parameters");
  int vertex_count = parse_canonical_int(v_tok, "vertex count");
  int edge_count = parse_canonical_int(e_tok, "edge count");
  if (vertex_count < 0 || edge_count < 0) throw ParseError("graph parameters out of range");
  if (static_cast<std::size_t>(edge_count) + 2 != lines.size())
    throw ParseError("edge count does not match edge lines");

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(edge_count));
  for (std::size_t i = 2; i < lines.size(); ++i) {
    auto [u_tok, v_tok2] = split_two(lines[i], "edge");
    int u = parse_canonical_int(u_tok, "edge endpoint");
    int v = parse_canonical_int(v_tok2, "edge endpoint");
    if (u >= v) throw ParseError("edge endpoints must satisfy u < v");
    if (v >= vertex_count) throw ParseError("edge endpoint out of range");
    if (!edges.empty() && edges.back() >= std::make_pair(u, v))
      throw ParseError("edges not in strictly sorted order");
    edges.emplace_back(u, v);
  }
  try {
    return Graph::from_edges(vertex_count, edges);
  } catch (const std::invalid_argument& err) {
    throw ParseError(err.what());
  }
}

std::string write_labeling(const SignLabeling& labeling) {
  std::ostringstream out;
  out << "labeling v1\n" << labeling.n << ' ' << labeling.r << '\n';
  for (int v = 0; v < labeling.vertex_count(); ++v)
    out << v << ' ' << labeling.label[static_cast<std::size_t>(v)].str() << '\n';
  return out.str();
}

SignLabeling parse_labeling(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.size() < 2) throw ParseError("labeling file truncated");
  if (lines[0] != "labeling v1") throw ParseError("bad labeling header");
  auto [n_tok, r_tok] = split_two(lines[1], "labeling parameters");
  int n = parse_canonical_int(n_tok, "n");
  int r = parse_canonical_int(r_tok, "r");
  if (n < 1 || r < 1) throw ParseError("labeling parameters out of range");

  SignLabeling labeling;
  labeling.n = n;
  labeling.r = r;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    auto [id_tok, sign_tok] = split_two(lines[i], "labeling row");
    int vertex = parse_canonical_int(id_tok, "vertex id");
    if (vertex != static_cast<int>(i) - 2) throw ParseError("vertex ids must be 0,1,2,... in order");
    if (static_cast<int>(sign_tok.size()) != n) throw ParseError("sign vector length mismatch");
    try {
      labeling.label.push_back(SignVector::parse(sign_tok));
    } catch (const std::invalid_argument& err) {
      throw ParseError(err.what());
    }
  }
  return labeling;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (!in.good() && !in.eof()) throw std::runtime_error("error reading " + path);
  return buffer.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << content;
  if (!out.good()) throw std::runtime_error("error writing " + path);
}

}  // namespace cocirc

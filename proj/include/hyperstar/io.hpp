#pragma once

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hyperstar/hypergraph.hpp"
#include "hyperstar/reduction.hpp"
#include "hyperstar/stars.hpp"

namespace hyperstar {

/// A reduction request in the file/flag syntax: "mode=q star=0 removed=2,3".
struct PlanSpec {
  ReductionMode mode = ReductionMode::Q;
  int star_index = 0;
  std::vector<VertexId> removed;
};

/// A parsed hypergraph file: the graph itself, any declared star witnesses,
/// and the reduction header when the file was written by a reduction.
struct FileBundle {
  Hypergraph graph;
  std::vector<Witness> stars;
  std::optional<PlanSpec> plan;
};

/// Shortest decimal form that parses back to exactly the same double.
inline std::string format_weight(double w) {
  char buf[40];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, w);
    if (std::strtod(buf, nullptr) == w) break;
  }
  return buf;
}

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline int parse_int(const std::string& tok, int line, const char* what) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(line, std::string("expected an integer ") + what);
  }
  if (pos != tok.size() || v < -1000000000 || v > 1000000000)
    throw ParseError(line, std::string("expected an integer ") + what);
  return static_cast<int>(v);
}

inline double parse_weight(const std::string& tok, int line) {
  char* end = nullptr;
  double w = std::strtod(tok.c_str(), &end);
  if (end != tok.c_str() + tok.size() || !std::isfinite(w) || !(w > 0.0))
    throw ParseError(line, "edge weight must be a positive decimal");
  return w;
}

inline std::vector<int> parse_int_list(const std::string& tok, int line,
                                       const char* what) {
  std::vector<int> out;
  std::string cur;
  std::istringstream is(tok);
  while (std::getline(is, cur, ','))
    out.push_back(parse_int(cur, line, what));
  if (out.empty()) throw ParseError(line, std::string("empty list for ") + what);
  return out;
}

inline std::vector<std::pair<std::string, std::string>> key_values(
    const std::string& text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    std::size_t eq = tok.find('=');
    if (eq == std::string::npos)
      out.emplace_back(tok, "");
    else
      out.emplace_back(tok.substr(0, eq), tok.substr(eq + 1));
  }
  return out;
}

}  // namespace detail

/// Parses "mode=q star=0 removed=2,3" (the reduce header syntax).
inline PlanSpec parse_plan_spec(const std::string& text, int line = 0) {
  PlanSpec spec;
  bool have_mode = false, have_removed = false;
  for (const auto& [key, value] : detail::key_values(text)) {
    if (key == "mode") {
      if (value == "q")
        spec.mode = ReductionMode::Q;
      else if (value == "q_star" || value == "qstar")
        spec.mode = ReductionMode::QStar;
      else
        throw ParseError(line, "unknown reduction mode '" + value + "'");
      have_mode = true;
    } else if (key == "star") {
      spec.star_index = detail::parse_int(value, line, "for star=");
    } else if (key == "removed" || key == "remove") {
      spec.removed = detail::parse_int_list(value, line, "for removed=");
      have_removed = true;
    } else {
      throw ParseError(line, "unknown plan key '" + key + "'");
    }
  }
  if (!have_mode) throw ParseError(line, "plan needs mode=q or mode=q_star");
  if (!have_removed) throw ParseError(line, "plan needs removed=...");
  return spec;
}

inline std::string format_plan_spec(const PlanSpec& spec) {
  std::string removed;
  for (std::size_t i = 0; i < spec.removed.size(); ++i) {
    if (i) removed += ',';
    removed += std::to_string(spec.removed[i]);
  }
  return std::string("mode=") + to_string(spec.mode) +
         " star=" + std::to_string(spec.star_index) + " removed=" + removed;
}

/// Serialized star block: 1-based vertex ids, 0-based edge indices in file
/// order; the uniform tag appears as p=<p>.
inline std::string format_star_line(const Witness& w) {
  auto join = [](const std::vector<int>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(xs[i]);
    }
    return out;
  };
  std::string line = std::string("star kind=") + to_string(w.kind);
  if (w.uniform_p) line += " p=" + std::to_string(*w.uniform_p);
  line += " v1=" + join(w.v1) + " v2=" + join(w.v2) +
          " edges=" + join(w.star_edges);
  return line;
}

/// Reads the line-oriented hypergraph format:
///   vertices N
///   edge W v1 v2 ... vk
///   star kind=... v1=... v2=... edges=...
/// '#' lines are comments; a comment of the form "# reduction <plan>"
/// carries the plan that produced a reduced file. Whitespace-tolerant;
/// duplicate edge lines are kept.
inline FileBundle load_bundle(std::istream& in) {
  int line_no = 0;
  int n = -1;
  std::vector<Edge> edges;
  struct RawStar {
    int line;
    std::string text;
  };
  std::vector<RawStar> raw_stars;
  std::optional<PlanSpec> plan;

  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = detail::trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      std::istringstream is(t.substr(1));
      std::string word;
      if (is >> word && word == "reduction") {
        std::string rest;
        std::getline(is, rest);
        plan = parse_plan_spec(detail::trim(rest), line_no);
      }
      continue;
    }
    std::istringstream is(t);
    std::string keyword;
    is >> keyword;
    if (keyword == "vertices") {
      if (n >= 0) throw ParseError(line_no, "duplicate vertices line");
      std::string tok;
      if (!(is >> tok)) throw ParseError(line_no, "vertices needs a count");
      n = detail::parse_int(tok, line_no, "vertex count");
      if (n < 1) throw ParseError(line_no, "vertex count must be positive");
      if (is >> tok) throw ParseError(line_no, "trailing text after count");
    } else if (keyword == "edge") {
      if (n < 0)
        throw ParseError(line_no, "edge line before the vertices line");
      std::string tok;
      if (!(is >> tok)) throw ParseError(line_no, "edge needs a weight");
      Edge e;
      e.weight = detail::parse_weight(tok, line_no);
      while (is >> tok)
        e.vertices.push_back(detail::parse_int(tok, line_no, "vertex id"));
      if (e.vertices.empty())
        throw ParseError(line_no, "edge needs at least one vertex");
      std::vector<VertexId> sorted = e.vertices;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ParseError(line_no, "edge repeats a vertex");
      for (VertexId v : sorted)
        if (v < 1 || v > n)
          throw ParseError(line_no, "vertex id " + std::to_string(v) +
                                        " outside 1.." + std::to_string(n));
      edges.push_back(std::move(e));
    } else if (keyword == "star") {
      std::string rest;
      std::getline(is, rest);
      raw_stars.push_back({line_no, detail::trim(rest)});
    } else {
      throw ParseError(line_no, "unknown keyword '" + keyword + "'");
    }
  }
  if (n < 0) throw ParseError(line_no, "missing vertices line");

  FileBundle bundle{Hypergraph(n, std::move(edges)), {}, plan};
  for (const auto& raw : raw_stars) {
    std::optional<StarKind> kind;
    std::optional<int> p;
    std::vector<VertexId> v1, v2;
    std::vector<int> star_edges;
    for (const auto& [key, value] : detail::key_values(raw.text)) {
      if (key == "kind") {
        if (value == "HS")
          kind = StarKind::HS;
        else if (value == "GHS")
          kind = StarKind::GHS;
        else if (value == "UHS")
          kind = StarKind::HS;  // uniform stars are HS plus the p tag
        else
          throw ParseError(raw.line, "unknown star kind '" + value + "'");
      } else if (key == "p") {
        p = detail::parse_int(value, raw.line, "for p=");
      } else if (key == "v1") {
        v1 = detail::parse_int_list(value, raw.line, "for v1=");
      } else if (key == "v2") {
        v2 = detail::parse_int_list(value, raw.line, "for v2=");
      } else if (key == "edges") {
        star_edges = detail::parse_int_list(value, raw.line, "for edges=");
      } else {
        throw ParseError(raw.line, "unknown star key '" + key + "'");
      }
    }
    if (!kind || v1.empty() || v2.empty() || star_edges.empty())
      throw ParseError(raw.line, "star needs kind=, v1=, v2= and edges=");
    for (VertexId v : v1)
      if (v < 1 || v > n) throw ParseError(raw.line, "star v1 id out of range");
    for (VertexId v : v2)
      if (v < 1 || v > n) throw ParseError(raw.line, "star v2 id out of range");
    for (int e : star_edges)
      if (e < 0 || e >= bundle.graph.num_edges())
        throw ParseError(raw.line, "star edge index out of range");
    if (p && *p < 2) throw ParseError(raw.line, "star p must be at least 2");
    if (p && *kind != StarKind::HS)
      throw ParseError(raw.line, "the p tag requires kind HS or UHS");
    bundle.stars.push_back(make_witness(bundle.graph, std::move(v1),
                                        std::move(v2), std::move(star_edges),
                                        kind, p));
  }
  return bundle;
}

inline FileBundle load_bundle_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return load_bundle(in);
}

inline Hypergraph parse_hypergraph(std::istream& in) {
  return load_bundle(in).graph;
}

inline Hypergraph parse_hypergraph(const std::string& text) {
  std::istringstream is(text);
  return parse_hypergraph(is);
}

inline void write_hypergraph(std::ostream& os, const Hypergraph& h) {
  os << "vertices " << h.num_vertices() << '\n';
  for (const auto& e : h.edges()) {
    os << "edge " << format_weight(e.weight);
    for (VertexId v : e.vertices) os << ' ' << v;
    os << '\n';
  }
}

/// Reduced-hypergraph file: the plan header comment, any construction notes,
/// then the standard format.
inline void write_reduced_file(std::ostream& os, const ReducedPair& pair,
                               int star_index) {
  PlanSpec spec{pair.plan.mode, star_index, pair.plan.removed};
  os << "# reduction " << format_plan_spec(spec) << '\n';
  for (const auto& note : pair.notes) os << "# note: " << note << '\n';
  write_hypergraph(os, pair.reduced);
}

}  // namespace hyperstar

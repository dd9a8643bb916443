#pragma once

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "json.hpp"
#include "meshtree/error.hpp"
#include "meshtree/mesh.hpp"
#include "meshtree/metrics.hpp"

namespace meshtree {

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

inline std::string at_line(std::size_t line_no, const std::string& msg) {
  return "line " + std::to_string(line_no) + ": " + msg;
}

// Content lines of a text file: comments and blank lines dropped, CR stripped.
template <typename Fn>
void for_each_data_line(std::istream& in, Fn&& fn) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    fn(line_no, tokens);
  }
  if (in.bad()) throw Error("read failure");
}

inline double parse_coordinate(std::string_view tok, std::size_t line_no) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec == std::errc::result_out_of_range)
    throw Error(at_line(line_no, "non-finite coordinate '" + std::string(tok) + "'"));
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw Error(at_line(line_no, "invalid number '" + std::string(tok) + "'"));
  if (!std::isfinite(v))
    throw Error(at_line(line_no, "non-finite coordinate '" + std::string(tok) + "'"));
  return v;
}

inline NodeId parse_index(std::string_view tok, std::size_t line_no) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() ||
      v > std::numeric_limits<NodeId>::max())
    throw Error(at_line(line_no, "invalid node index '" + std::string(tok) + "'"));
  return static_cast<NodeId>(v);
}

inline void check_sink(std::ostream& out) {
  if (!out) throw Error("write failure");
}

}  // namespace detail

// Whitespace-separated coordinates, one point per line; '#' lines are comments.
inline PointSet read_point_cloud(std::istream& in) {
  std::size_t dim = 0;
  std::vector<double> coords;
  detail::for_each_data_line(in, [&](std::size_t line_no, const auto& tokens) {
    if (dim == 0) dim = tokens.size();
    if (tokens.size() != dim)
      throw Error(detail::at_line(line_no, "expected " + std::to_string(dim) + " coordinates"));
    for (auto tok : tokens) coords.push_back(detail::parse_coordinate(tok, line_no));
  });
  if (dim == 0) throw Error("empty point file");
  return PointSet(dim, std::move(coords));
}

// "u v [tag]" lines. The tag column is M or T and defaults to M; with
// parse_tags false it is skipped unread. Pairs are checked against node_count
// and for self-loops and repeats.
inline TaggedEdgeSet read_tagged_edges(std::istream& in, std::size_t node_count,
                                       bool parse_tags = true) {
  TaggedEdgeSet out;
  std::vector<std::pair<Edge, std::size_t>> seen;
  detail::for_each_data_line(in, [&](std::size_t line_no, const auto& tokens) {
    if (tokens.size() < 2 || tokens.size() > 3)
      throw Error(detail::at_line(line_no, "expected 'u v [tag]'"));
    const NodeId u = detail::parse_index(tokens[0], line_no);
    const NodeId v = detail::parse_index(tokens[1], line_no);
    if (u >= node_count || v >= node_count)
      throw Error(detail::at_line(line_no, "edge index out of range"));
    if (u == v) throw Error(detail::at_line(line_no, "self-loop"));
    EdgeTag tag = EdgeTag::Mesh;
    if (parse_tags && tokens.size() == 3) {
      if (tokens[2] == "T")
        tag = EdgeTag::Tree;
      else if (tokens[2] != "M")
        throw Error(detail::at_line(line_no, "unknown edge tag '" + std::string(tokens[2]) + "'"));
    }
    out.edges.push_back({u, v, tag});
    seen.emplace_back(Edge{u, v}.canonical(), line_no);
  });
  std::sort(seen.begin(), seen.end());
  for (std::size_t i = 1; i < seen.size(); ++i)
    if (seen[i].first == seen[i - 1].first)
      throw Error(detail::at_line(std::max(seen[i].second, seen[i - 1].second),
                                  "duplicate unordered pair"));
  return out;
}

// Mesh from a point file and an edge file; any tag column is ignored.
inline Mesh read_graph(std::istream& positions_in, std::istream& edges_in) {
  Mesh mesh;
  mesh.positions = read_point_cloud(positions_in);
  mesh.edges = read_tagged_edges(edges_in, mesh.node_count(), false).plain_edges();
  require_valid(mesh);
  return mesh;
}

// "u v M|T" per edge in canonical order. Returns the number of bytes written.
inline std::size_t write_graph(const TaggedEdgeSet& set, std::ostream& out) {
  std::vector<TaggedEdge> edges = set.edges;
  for (auto& e : edges)
    if (e.u > e.v) std::swap(e.u, e.v);
  std::sort(edges.begin(), edges.end());
  std::string text;
  text.reserve(edges.size() * 12);
  for (const auto& e : edges) {
    text += std::to_string(e.u);
    text += ' ';
    text += std::to_string(e.v);
    text += ' ';
    text += tag_letter(e.tag);
    text += '\n';
  }
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  detail::check_sink(out);
  return text.size();
}

inline TaggedEdgeSet tag_all(std::span<const Edge> edges, EdgeTag tag) {
  TaggedEdgeSet out;
  out.edges.reserve(edges.size());
  for (const auto& e : edges) out.edges.push_back({e.u, e.v, tag});
  return out;
}

using Document = nlohmann::ordered_json;

// Deterministic rendering of a key/value document: one top-level key per
// line, nested values inline, reals with 17 significant digits.
inline std::string dump_document(const Document& doc) {
  std::string out;
  auto number = [&out](double v) {
    if (v == 0.0) v = 0.0;  // no "-0"
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
  };
  auto inline_value = [&](const Document& v, auto&& self) -> void {
    switch (v.type()) {
      case Document::value_t::object: {
        out += '{';
        bool first = true;
        for (const auto& [k, x] : v.items()) {
          if (!first) out += ", ";
          first = false;
          out += Document(k).dump();
          out += ": ";
          self(x, self);
        }
        out += '}';
        break;
      }
      case Document::value_t::array: {
        out += '[';
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (i) out += ", ";
          self(v[i], self);
        }
        out += ']';
        break;
      }
      case Document::value_t::number_float:
        number(v.get<double>());
        break;
      default:
        out += v.dump();
    }
  };
  if (!doc.is_object()) {
    inline_value(doc, inline_value);
    out += '\n';
    return out;
  }
  out += "{\n";
  std::size_t i = 0;
  for (const auto& [k, x] : doc.items()) {
    out += "  ";
    out += Document(k).dump();
    out += ": ";
    inline_value(x, inline_value);
    out += ++i < doc.size() ? ",\n" : "\n";
  }
  out += "}\n";
  return out;
}

inline Document parse_document(std::istream& in) {
  try {
    return Document::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed report: ") + e.what());
  }
}

inline Document to_document(const GraphReport& r) {
  Document d;
  d["node_count"] = r.node_count;
  d["edge_count"] = r.edge_count;
  d["component_count"] = r.component_count;
  if (r.hop_diameter)
    d["hop_diameter"] = *r.hop_diameter;
  else
    d["hop_diameter"] = "unreachable";
  d["diameter_mode"] = r.diameter_mode.str();
  Document hist = Document::array();
  for (const auto& [deg, count] : r.degree_histogram) hist.push_back({deg, count});
  d["degree_histogram"] = std::move(hist);
  d["isolated_nodes"] = r.isolated_nodes;
  d["component_id"] = r.component_id;
  return d;
}

inline Document to_document(const DensityGrid& g) {
  Document d;
  d["dimension"] = g.dim();
  Document extents = Document::array();
  for (std::size_t a = 0; a < g.dim(); ++a) extents.push_back({g.lower[a], g.upper[a]});
  d["extents"] = std::move(extents);
  d["resolution"] = g.resolution;
  d["bandwidth"] = g.bandwidth;
  d["values"] = g.values;
  return d;
}

inline std::size_t write_document(const Document& doc, std::ostream& out) {
  const std::string text = dump_document(doc);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  detail::check_sink(out);
  return text.size();
}

inline std::size_t write_report(const GraphReport& r, std::ostream& out) {
  return write_document(to_document(r), out);
}

inline std::size_t write_report(const DensityGrid& g, std::ostream& out) {
  return write_document(to_document(g), out);
}

}  // namespace meshtree

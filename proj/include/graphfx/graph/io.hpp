#pragma once

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "graphfx/graph/build.hpp"

namespace graphfx {

struct LoadOptions {
  /// Symmetrize, drop self-loops and duplicate edges.
  bool make_undirected = false;
  /// Keep the value column of weighted inputs. Ignored for pattern files.
  bool read_weights = true;
  /// Edge lists only: vertex count when it exceeds max id + 1.
  std::optional<vertex_t> num_vertices;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::uint64_t parse_index(std::string_view tok, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError("expected a non-negative integer, got '" + std::string(tok) + "'",
                     line);
  }
  return value;
}

template <typename Weight>
Weight parse_weight(std::string_view tok, std::size_t line) {
  // from_chars for double is not available on every toolchain we target.
  const std::string s(tok);
  char* end = nullptr;
  const double value = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || !std::isfinite(value)) {
    throw ParseError("malformed weight '" + s + "'", line);
  }
  if (value < 0) throw ParseError("negative edge weight " + s, line);
  if constexpr (std::is_integral_v<Weight>) {
    if (value != std::floor(value)) {
      throw ParseError("non-integer weight " + s + " for an integer-weighted graph", line);
    }
    if (value > static_cast<double>(std::numeric_limits<Weight>::max())) {
      throw ParseError("weight " + s + " out of range", line);
    }
  }
  return static_cast<Weight>(value);
}

inline std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace detail

/// Parses a Matrix Market coordinate file. Indices are 1-based; the vertex
/// count is max(rows, cols). Neighbor lists come out sorted.
template <typename Weight = weight_t>
CsrGraph<Weight> read_matrix_market(std::istream& in, const LoadOptions& opts = {}) {
  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(in, line)) throw ParseError("empty input", 1);
  ++lineno;
  const auto header = detail::split_ws(line);
  if (header.size() < 5 || detail::lower(header[0]) != "%%matrixmarket" ||
      detail::lower(header[1]) != "matrix") {
    throw ParseError("missing %%MatrixMarket matrix header", lineno);
  }
  if (detail::lower(header[2]) != "coordinate") {
    throw ParseError("only coordinate format is supported", lineno);
  }
  const std::string field = detail::lower(header[3]);
  const std::string symmetry = detail::lower(header[4]);
  if (field != "pattern" && field != "integer" && field != "real") {
    throw ParseError("unsupported field type '" + field + "'", lineno);
  }
  if (symmetry != "general" && symmetry != "symmetric") {
    throw ParseError("unsupported symmetry '" + symmetry + "'", lineno);
  }
  const bool has_values = field != "pattern";
  const bool keep_weights = has_values && opts.read_weights;

  std::uint64_t rows = 0, cols = 0, nnz = 0;
  bool have_size = false;
  CooGraph<Weight> coo;
  std::uint64_t seen = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto toks = detail::split_ws(line);
    if (toks.empty() || toks[0].front() == '%') continue;
    if (!have_size) {
      if (toks.size() != 3) throw ParseError("size line needs rows cols nnz", lineno);
      rows = detail::parse_index(toks[0], lineno);
      cols = detail::parse_index(toks[1], lineno);
      nnz = detail::parse_index(toks[2], lineno);
      const auto n = std::max(rows, cols);
      if (n >= kInvalidVertex) throw ParseError("vertex count too large", lineno);
      coo.num_vertices = static_cast<vertex_t>(n);
      coo.src.reserve(nnz);
      coo.dst.reserve(nnz);
      have_size = true;
      continue;
    }
    if (toks.size() < (has_values ? 3u : 2u)) {
      throw ParseError("entry needs " + std::string(has_values ? "3" : "2") + " fields",
                       lineno);
    }
    const auto i = detail::parse_index(toks[0], lineno);
    const auto j = detail::parse_index(toks[1], lineno);
    if (i < 1 || i > rows || j < 1 || j > cols) {
      throw ParseError("index (" + std::to_string(i) + "," + std::to_string(j) +
                           ") outside header bounds",
                       lineno);
    }
    if (++seen > nnz) throw ParseError("more entries than declared", lineno);
    const auto u = static_cast<vertex_t>(i - 1);
    const auto v = static_cast<vertex_t>(j - 1);
    if (keep_weights) {
      coo.add_edge(u, v, detail::parse_weight<Weight>(toks[2], lineno));
    } else {
      coo.add_edge(u, v);
    }
  }
  if (!have_size) throw ParseError("missing size line", lineno);
  if (seen != nnz) {
    throw ParseError("expected " + std::to_string(nnz) + " entries, found " +
                         std::to_string(seen),
                     lineno);
  }
  BuildOptions build;
  build.make_undirected = opts.make_undirected || symmetry == "symmetric";
  build.remove_self_loops = opts.make_undirected;
  return coo_to_csr(coo, build);
}

/// Parses a whitespace edge list: "src dst [weight]" per line, 0-based ids,
/// '#' or '%' comment lines.
template <typename Weight = weight_t>
CsrGraph<Weight> read_edge_list(std::istream& in, const LoadOptions& opts = {}) {
  CooGraph<Weight> coo;
  std::string line;
  std::size_t lineno = 0;
  std::optional<bool> weighted;
  std::uint64_t max_id = 0;
  bool any = false;
  while (std::getline(in, line)) {
    ++lineno;
    const auto toks = detail::split_ws(line);
    if (toks.empty() || toks[0].front() == '#' || toks[0].front() == '%') continue;
    if (toks.size() < 2 || toks.size() > 3) {
      throw ParseError("edge line needs 'src dst [weight]'", lineno);
    }
    const bool has_w = toks.size() == 3;
    if (weighted && *weighted != has_w) {
      throw ParseError("mixed weighted and unweighted lines", lineno);
    }
    weighted = has_w;
    const auto u = detail::parse_index(toks[0], lineno);
    const auto v = detail::parse_index(toks[1], lineno);
    if (u >= kInvalidVertex || v >= kInvalidVertex) throw ParseError("vertex id too large", lineno);
    if (opts.num_vertices && (u >= *opts.num_vertices || v >= *opts.num_vertices)) {
      throw ParseError("vertex id outside declared vertex count", lineno);
    }
    max_id = std::max({max_id, u, v});
    any = true;
    if (has_w && opts.read_weights) {
      coo.add_edge(static_cast<vertex_t>(u), static_cast<vertex_t>(v),
                   detail::parse_weight<Weight>(toks[2], lineno));
    } else {
      coo.add_edge(static_cast<vertex_t>(u), static_cast<vertex_t>(v));
    }
  }
  coo.num_vertices = opts.num_vertices ? *opts.num_vertices
                                       : (any ? static_cast<vertex_t>(max_id + 1) : 0);
  BuildOptions build;
  if (opts.make_undirected) build = kUndirected;
  return coo_to_csr(coo, build);
}

// Binary CSR cache, all fields little-endian:
//   magic "GFXCSR\0\0" (8 bytes) | u32 version | u32 flags (bit0 weighted,
//   bit1 undirected) | u64 n | u64 m | u64 row_offsets[n+1] |
//   u32 column_indices[m] | u32 weights[m] (only when weighted)
inline constexpr std::array<char, 8> kCacheMagic{'G', 'F', 'X', 'C', 'S', 'R', '\0', '\0'};
inline constexpr std::uint32_t kCacheVersion = 1;

namespace detail {

template <typename T>
void write_le(std::ostream& out, T value) {
  std::array<char, sizeof(T)> bytes{};
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    bytes[i] = static_cast<char>((static_cast<std::uint64_t>(value) >> (8 * i)) & 0xFF);
  }
  out.write(bytes.data(), bytes.size());
}

template <typename T>
T read_le(std::istream& in) {
  std::array<unsigned char, sizeof(T)> bytes{};
  in.read(reinterpret_cast<char*>(bytes.data()), bytes.size());
  if (!in) throw DataError("binary cache: truncated file");
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    value |= static_cast<std::uint64_t>(bytes[i]) << (8 * i);
  }
  return static_cast<T>(value);
}

}  // namespace detail

inline void write_binary_csr(std::ostream& out, const CsrGraph<weight_t>& g) {
  out.write(kCacheMagic.data(), kCacheMagic.size());
  detail::write_le<std::uint32_t>(out, kCacheVersion);
  const std::uint32_t flags = (g.weighted() ? 1u : 0u) | (g.undirected() ? 2u : 0u);
  detail::write_le<std::uint32_t>(out, flags);
  detail::write_le<std::uint64_t>(out, g.num_vertices());
  detail::write_le<std::uint64_t>(out, g.num_edges());
  for (auto r : g.row_offsets()) detail::write_le<std::uint64_t>(out, r);
  for (auto c : g.column_indices()) detail::write_le<std::uint32_t>(out, c);
  for (auto w : g.edge_weights()) detail::write_le<std::uint32_t>(out, w);
  if (!out) throw DataError("binary cache: write failed");
}

inline CsrGraph<weight_t> read_binary_csr(std::istream& in) {
  std::array<char, 8> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kCacheMagic) throw DataError("binary cache: bad magic bytes");
  const auto version = detail::read_le<std::uint32_t>(in);
  if (version != kCacheVersion) {
    throw DataError("binary cache: unsupported version " + std::to_string(version));
  }
  const auto flags = detail::read_le<std::uint32_t>(in);
  const auto n = detail::read_le<std::uint64_t>(in);
  const auto m = detail::read_le<std::uint64_t>(in);
  if (n >= kInvalidVertex) throw DataError("binary cache: vertex count too large");
  std::vector<edge_t> offsets(n + 1);
  for (auto& r : offsets) r = detail::read_le<std::uint64_t>(in);
  std::vector<vertex_t> cols(m);
  for (auto& c : cols) c = detail::read_le<std::uint32_t>(in);
  std::vector<weight_t> weights((flags & 1u) ? m : 0);
  for (auto& w : weights) w = detail::read_le<std::uint32_t>(in);
  return CsrGraph<weight_t>(std::move(offsets), std::move(cols), std::move(weights),
                            (flags & 2u) != 0);
}

inline bool has_suffix(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

/// Loads a .mtx file. Accepts whitespace edge lists too when the file has no
/// Matrix Market header.
template <typename Weight = weight_t>
CsrGraph<Weight> load_matrix_market(const std::string& path, bool make_undirected) {
  LoadOptions opts;
  opts.make_undirected = make_undirected;
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  std::string first;
  std::getline(in, first);
  in.clear();
  in.seekg(0);
  if (first.rfind("%%MatrixMarket", 0) == 0) return read_matrix_market<Weight>(in, opts);
  return read_edge_list<Weight>(in, opts);
}

/// Dispatches on content: binary cache (.gfx), Matrix Market, or edge list.
inline CsrGraph<weight_t> load_graph(const std::string& path, const LoadOptions& opts = {}) {
  if (has_suffix(path, ".gfx")) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open " + path);
    return read_binary_csr(in);
  }
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  std::string first;
  std::getline(in, first);
  in.clear();
  in.seekg(0);
  if (first.rfind("%%MatrixMarket", 0) == 0) return read_matrix_market<weight_t>(in, opts);
  return read_edge_list<weight_t>(in, opts);
}

}  // namespace graphfx

#include "qgr/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "qgr/error.hpp"

namespace qgr {

namespace text {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool is_name(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

void for_each_line(std::string_view source,
                   const std::function<void(int, std::string_view)>& fn) {
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= source.size()) {
    auto nl = source.find('\n', pos);
    if (nl == std::string_view::npos) nl = source.size();
    std::string_view line = source.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) fn(line_no, line);
  }
}

}  // namespace text

namespace {

std::vector<Arrow> resolve(const std::vector<std::string>& vertices,
                           const std::vector<ArrowSpec>& specs) {
  std::vector<Arrow> out;
  out.reserve(specs.size());
  auto find = [&](const std::string& v, const std::string& arrow) {
    auto it = std::find(vertices.begin(), vertices.end(), v);
    if (it == vertices.end())
      throw ValidationError("arrow '" + arrow + "' has dangling endpoint '" + v + "'");
    return static_cast<std::size_t>(it - vertices.begin());
  };
  for (const auto& s : specs) out.push_back({s.name, find(s.source, s.name), find(s.target, s.name)});
  return out;
}

}  // namespace

Quiver::Quiver(std::vector<std::string> vertices, std::vector<ArrowSpec> arrows)
    : vertices_(std::move(vertices)) {
  arrows_ = resolve(vertices_, arrows);
  validate();
}

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  validate();
}

void Quiver::validate() const {
  std::set<std::string_view> seen;
  for (const auto& v : vertices_) {
    if (!seen.insert(v).second) throw ValidationError("duplicate vertex name '" + v + "'");
  }
  seen.clear();
  for (const auto& a : arrows_) {
    if (!seen.insert(a.name).second) throw ValidationError("duplicate arrow name '" + a.name + "'");
    if (a.source >= vertices_.size() || a.target >= vertices_.size())
      throw ValidationError("arrow '" + a.name + "' has dangling endpoint");
  }

  // Iterative DFS with colors; on a back edge, unwind the arrow stack to report the cycle.
  const std::size_t n = vertices_.size();
  std::vector<std::vector<std::size_t>> out(n);
  for (std::size_t i = 0; i < arrows_.size(); ++i) out[arrows_[i].source].push_back(i);
  std::vector<int> color(n, 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (color[root] != 0) continue;
    struct Frame {
      std::size_t vertex;
      std::size_t next;
      std::size_t via;  // arrow used to enter
    };
    std::vector<Frame> stack{{root, 0, arrows_.size()}};
    color[root] = 1;
    while (!stack.empty()) {
      auto& f = stack.back();
      if (f.next == out[f.vertex].size()) {
        color[f.vertex] = 2;
        stack.pop_back();
        continue;
      }
      const std::size_t ai = out[f.vertex][f.next++];
      const std::size_t t = arrows_[ai].target;
      if (color[t] == 1) {
        std::vector<std::string> cycle;
        std::size_t k = stack.size();
        while (k-- > 0 && stack[k].vertex != t) cycle.push_back(arrows_[stack[k].via].name);
        std::reverse(cycle.begin(), cycle.end());
        cycle.push_back(arrows_[ai].name);
        std::string msg = "oriented cycle:";
        for (const auto& c : cycle) msg += " " + c;
        throw ValidationError(msg);
      }
      if (color[t] == 0) {
        color[t] = 1;
        stack.push_back({t, 0, ai});
      }
    }
  }
}

std::optional<std::size_t> Quiver::find_vertex(std::string_view name) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::optional<std::size_t> Quiver::find_arrow(std::string_view name) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].name == name) return i;
  return std::nullopt;
}

std::size_t Quiver::vertex_index(std::string_view name) const {
  auto i = find_vertex(name);
  if (!i) throw ValidationError("unknown vertex '" + std::string(name) + "'");
  return *i;
}

std::size_t Quiver::arrow_index(std::string_view name) const {
  auto i = find_arrow(name);
  if (!i) throw ValidationError("unknown arrow '" + std::string(name) + "'");
  return *i;
}

std::vector<std::size_t> Quiver::neighbors(std::size_t p) const {
  std::set<std::size_t> out;
  for (const auto& a : arrows_) {
    if (a.source == p) out.insert(a.target);
    if (a.target == p) out.insert(a.source);
  }
  return {out.begin(), out.end()};
}

std::vector<std::size_t> Quiver::topological_order() const {
  const std::size_t n = vertices_.size();
  std::vector<std::size_t> indeg(n, 0);
  for (const auto& a : arrows_) ++indeg[a.target];
  std::vector<std::size_t> order;
  order.reserve(n);
  // Smallest available index first, so the order is deterministic.
  std::set<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.insert(v);
  while (!ready.empty()) {
    const std::size_t v = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(v);
    for (const auto& a : arrows_)
      if (a.source == v && --indeg[a.target] == 0) ready.insert(a.target);
  }
  return order;
}

std::vector<std::vector<std::size_t>> Quiver::components() const {
  const std::size_t n = vertices_.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& a : arrows_) parent[find(a.source)] = find(a.target);
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t r = find(v);
    if (slot[r] == n) {
      slot[r] = out.size();
      out.emplace_back();
    }
    out[slot[r]].push_back(v);
  }
  return out;
}

bool Quiver::is_connected() const { return components().size() <= 1; }

Quiver Quiver::opposite() const {
  std::vector<Arrow> rev = arrows_;
  for (auto& a : rev) std::swap(a.source, a.target);
  return Quiver(vertices_, std::move(rev));
}

Quiver Quiver::subquiver(std::span<const std::size_t> vertex_ids,
                         std::span<const std::size_t> arrow_ids) const {
  std::vector<std::size_t> local(vertices_.size(), vertices_.size());
  std::vector<std::string> names;
  for (std::size_t i = 0; i < vertex_ids.size(); ++i) {
    local.at(vertex_ids[i]) = i;
    names.push_back(vertices_[vertex_ids[i]]);
  }
  std::vector<Arrow> arrows;
  for (std::size_t ai : arrow_ids) {
    const auto& a = arrows_.at(ai);
    if (local[a.source] == vertices_.size() || local[a.target] == vertices_.size())
      throw ValidationError("arrow '" + a.name + "' leaves the chosen vertex set");
    arrows.push_back({a.name, local[a.source], local[a.target]});
  }
  return Quiver(std::move(names), std::move(arrows));
}

DimVector::DimVector(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
  for (auto x : entries_)
    if (x < 0) throw ValidationError("dimension vector entries must be nonnegative");
}

DimVector DimVector::unit(std::size_t n, std::size_t i) {
  std::vector<std::int64_t> e(n, 0);
  e.at(i) = 1;
  return DimVector(std::move(e));
}

std::int64_t DimVector::total() const {
  return std::accumulate(entries_.begin(), entries_.end(), std::int64_t{0});
}

bool DimVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](auto x) { return x == 0; });
}

DimVector DimVector::operator+(const DimVector& other) const {
  if (size() != other.size()) throw ValidationError("dimension vectors of different length");
  auto e = entries_;
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.entries_[i];
  return DimVector(std::move(e));
}

DimVector DimVector::operator-(const DimVector& other) const {
  if (size() != other.size()) throw ValidationError("dimension vectors of different length");
  auto e = entries_;
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= other.entries_[i];
  return DimVector(std::move(e));
}

DimVector DimVector::operator*(std::int64_t k) const {
  auto e = entries_;
  for (auto& x : e) x *= k;
  return DimVector(std::move(e));
}

bool DimVector::fits_in(const DimVector& other) const {
  if (size() != other.size()) return false;
  for (std::size_t i = 0; i < size(); ++i)
    if (entries_[i] > other.entries_[i]) return false;
  return true;
}

std::string DimVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(entries_[i]);
  }
  return s + ")";
}

DimVector parse_dimvec(std::string_view text) {
  std::vector<std::int64_t> e;
  std::string cur;
  auto flush = [&] {
    auto t = text::trim(cur);
    if (t.empty()) throw ValidationError("empty entry in dimension vector");
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(std::string(t), &used);
    } catch (const std::exception&) {
      throw ValidationError("bad dimension vector entry '" + std::string(t) + "'");
    }
    if (used != t.size()) throw ValidationError("bad dimension vector entry '" + std::string(t) + "'");
    e.push_back(v);
    cur.clear();
  };
  auto body = text::trim(text);
  if (!body.empty() && body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
  if (text::trim(body).empty()) return DimVector{};
  for (char c : body) {
    if (c == ',')
      flush();
    else
      cur.push_back(c);
  }
  flush();
  return DimVector(std::move(e));
}

void require_on(const Quiver& q, const DimVector& v, std::string_view what) {
  if (v.size() != q.vertex_count())
    throw ValidationError(std::string(what) + " has " + std::to_string(v.size()) +
                          " entries but the quiver has " + std::to_string(q.vertex_count()) +
                          " vertices");
}

Quiver parse_quiver(std::string_view source) {
  std::vector<std::string> vertices;
  std::vector<ArrowSpec> arrows;
  bool have_vertices = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= source.size()) {
    auto nl = source.find('\n', pos);
    if (nl == std::string_view::npos) nl = source.size();
    std::string_view line = source.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = text::trim(line);
    if (line.empty()) continue;

    if (line.starts_with("vertices:")) {
      if (have_vertices) throw ParseError(line_no, "second 'vertices:' statement");
      have_vertices = true;
      for (auto& name : text::split_ws(line.substr(9))) {
        if (!text::is_name(name)) throw ParseError(line_no, "bad vertex name '" + name + "'");
        if (std::find(vertices.begin(), vertices.end(), name) != vertices.end())
          throw ParseError(line_no, "duplicate vertex name '" + name + "'");
        vertices.push_back(name);
      }
    } else if (line.starts_with("arrow ")) {
      // arrow <name>: <src> -> <dst>
      auto colon = line.find(':');
      auto arrow_pos = line.find("->");
      if (colon == std::string_view::npos || arrow_pos == std::string_view::npos || arrow_pos < colon)
        throw ParseError(line_no, "expected 'arrow <name>: <src> -> <dst>'");
      auto name = std::string(text::trim(line.substr(6, colon - 6)));
      auto src = std::string(text::trim(line.substr(colon + 1, arrow_pos - colon - 1)));
      auto dst = std::string(text::trim(line.substr(arrow_pos + 2)));
      if (!text::is_name(name) || !text::is_name(src) || !text::is_name(dst))
        throw ParseError(line_no, "expected 'arrow <name>: <src> -> <dst>'");
      if (!have_vertices) throw ParseError(line_no, "arrow before 'vertices:'");
      for (const auto& a : arrows)
        if (a.name == name) throw ParseError(line_no, "duplicate arrow name '" + name + "'");
      for (const auto& v : {src, dst})
        if (std::find(vertices.begin(), vertices.end(), v) == vertices.end())
          throw ParseError(line_no, "arrow '" + name + "' has dangling endpoint '" + v + "'");
      arrows.push_back({name, src, dst});
    } else {
      throw ParseError(line_no, "unrecognized statement '" + std::string(line) + "'");
    }
  }
  if (!have_vertices) throw ParseError(line_no, "missing 'vertices:' statement");
  return Quiver(std::move(vertices), std::move(arrows));
}

Quiver load_quiver(const std::filesystem::path& path) {
  try {
    return parse_quiver(text::read_file(path));
  } catch (const ParseError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

}  // namespace qgr

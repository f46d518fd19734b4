#include "qgr/coefficient_quiver.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <set>

#include "qgr/error.hpp"

namespace qgr {

std::string EdgeWeight::to_string() const {
  if (!parametric) return qgr::to_string(value);
  if (value == 1) return "L";
  return qgr::to_string(value) + "*L";
}

CoefficientQuiver::CoefficientQuiver(Quiver base, std::vector<Point> points, std::vector<Edge> edges)
    : base_(std::move(base)), points_(std::move(points)), edges_(std::move(edges)) {
  fibers_.resize(base_.vertex_count());
  fiber_pos_.resize(points_.size());
  std::set<std::string> ids;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const auto& p = points_[i];
    if (!ids.insert(p.id).second) throw ValidationError("duplicate point id '" + p.id + "'");
    if (p.vertex >= base_.vertex_count()) throw ValidationError("point '" + p.id + "' lies over no vertex");
    fiber_pos_[i] = fibers_[p.vertex].size();
    fibers_[p.vertex].push_back(i);
  }
  adjacency_.resize(points_.size());
  for (std::size_t ei = 0; ei < edges_.size(); ++ei) {
    const auto& e = edges_[ei];
    if (e.arrow >= base_.arrow_count()) throw ValidationError("edge with unknown label");
    if (e.source >= points_.size() || e.target >= points_.size())
      throw ValidationError("edge with unknown endpoint");
    const auto& a = base_.arrow(e.arrow);
    if (points_[e.source].vertex != a.source || points_[e.target].vertex != a.target)
      throw ValidationError("edge " + points_[e.source].id + " -> " + points_[e.target].id +
                            " does not lie over arrow '" + a.name + "'");
    adjacency_[e.source].push_back({e.target, ei});
    adjacency_[e.target].push_back({e.source, ei});
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

std::size_t CoefficientQuiver::point_index(std::string_view id) const {
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (points_[i].id == id) return i;
  throw ValidationError("unknown point '" + std::string(id) + "'");
}

DimVector CoefficientQuiver::fiber_sizes() const {
  std::vector<std::int64_t> d;
  for (const auto& f : fibers_) d.push_back(static_cast<std::int64_t>(f.size()));
  return DimVector(std::move(d));
}

bool CoefficientQuiver::is_unramified() const {
  std::set<std::pair<std::size_t, std::size_t>> out, in;
  for (const auto& e : edges_) {
    if (!out.insert({e.source, e.arrow}).second) return false;
    if (!in.insert({e.target, e.arrow}).second) return false;
  }
  return true;
}

bool CoefficientQuiver::is_tree() const {
  if (points_.empty()) return true;
  if (edges_.size() + 1 != points_.size()) return false;
  std::vector<bool> seen(points_.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    auto p = stack.back();
    stack.pop_back();
    for (auto [n, e] : adjacency_[p])
      if (!seen[n]) {
        seen[n] = true;
        ++reached;
        stack.push_back(n);
      }
  }
  return reached == points_.size();
}

bool CoefficientQuiver::is_string() const {
  if (!is_tree()) return false;
  return std::all_of(adjacency_.begin(), adjacency_.end(), [](const auto& a) { return a.size() <= 2; });
}

bool CoefficientQuiver::has_parameter() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.weight.parametric; });
}

CoefficientQuiver CoefficientQuiver::bind_parameter(const Rational& value) const {
  std::vector<Edge> kept;
  for (auto e : edges_) {
    if (e.weight.parametric) e.weight = {e.weight.value * value, false};
    if (e.weight.value != 0) kept.push_back(e);
  }
  return CoefficientQuiver(base_, points_, std::move(kept));
}

CoefficientQuiver CoefficientQuiver::opposite() const {
  auto rev = edges_;
  for (auto& e : rev) std::swap(e.source, e.target);
  return CoefficientQuiver(base_.opposite(), points_, std::move(rev));
}

RepresentationData CoefficientQuiver::to_data() const {
  if (has_parameter()) throw ValidationError("parameter L is unbound; give it a value first");
  const auto dims = fiber_sizes();
  RepresentationData data{base_, RationalsSpec{}, dims, {}};
  for (const auto& a : base_.arrows())
    data.matrices.emplace_back(static_cast<std::size_t>(dims[a.target]),
                               static_cast<std::size_t>(dims[a.source]), Rational(0));
  for (const auto& e : edges_)
    data.matrices[e.arrow](fiber_pos_[e.target], fiber_pos_[e.source]) += e.weight.value;
  return data;
}

TypedSubset make_typed_subset(const CoefficientQuiver& g, std::vector<std::size_t> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  std::vector<std::int64_t> type(g.base().vertex_count(), 0);
  for (auto m : members) {
    if (m >= g.point_count()) throw ValidationError("unknown point index " + std::to_string(m));
    ++type[g.points()[m].vertex];
  }
  return {std::move(members), DimVector(std::move(type))};
}

bool is_successor_closed(const CoefficientQuiver& g, const TypedSubset& b) {
  std::vector<bool> in(g.point_count(), false);
  for (auto m : b.members) {
    if (m >= g.point_count()) throw ValidationError("unknown point index " + std::to_string(m));
    in[m] = true;
  }
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return !in[e.source] || in[e.target]; });
}

namespace {

std::vector<std::size_t> breadth_first_order(const CoefficientQuiver& g) {
  std::vector<std::size_t> order;
  std::vector<bool> seen(g.point_count(), false);
  for (std::size_t start = 0; start < g.point_count(); ++start) {
    if (seen[start]) continue;
    std::deque<std::size_t> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
      auto p = queue.front();
      queue.pop_front();
      order.push_back(p);
      for (auto [n, e] : g.adjacent(p))
        if (!seen[n]) {
          seen[n] = true;
          queue.push_back(n);
        }
    }
  }
  return order;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = 0;
  if (__builtin_add_overflow(a, b, &s)) throw Error("successor-closed count overflows 64 bits");
  return s;
}

// Key layout: type counts, then one 0/1 entry per frontier point.
using StateMap = std::map<std::vector<std::int64_t>, std::uint64_t>;

// With exact set, only states that can still reach type bound exactly survive.
std::map<DimVector, std::uint64_t> count_by_type(const CoefficientQuiver& g, const DimVector& bound,
                                                 bool exact) {
  const std::size_t nv = g.base().vertex_count();
  const auto order = breadth_first_order(g);
  std::vector<std::size_t> pos(g.point_count());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;

  // remaining[i][v]: points over v at positions >= i.
  std::vector<std::vector<std::int64_t>> remaining(order.size() + 1, std::vector<std::int64_t>(nv, 0));
  for (std::size_t i = order.size(); i-- > 0;) {
    remaining[i] = remaining[i + 1];
    ++remaining[i][g.points()[order[i]].vertex];
  }

  StateMap states;
  states[std::vector<std::int64_t>(nv, 0)] = 1;
  std::vector<std::size_t> frontier;

  for (std::size_t step = 0; step < order.size(); ++step) {
    const std::size_t p = order[step];
    const std::size_t v = g.points()[p].vertex;

    std::vector<std::size_t> next_frontier;
    for (auto u : frontier) {
      bool open = false;
      for (auto [n, e] : g.adjacent(u)) open = open || pos[n] > step;
      if (open) next_frontier.push_back(u);
    }
    bool p_open = false;
    for (auto [n, e] : g.adjacent(p)) p_open = p_open || pos[n] > step;
    if (p_open) next_frontier.push_back(p);

    // Where each frontier point sits in the key.
    auto slot = [&](const std::vector<std::size_t>& fr, std::size_t point) {
      return nv + static_cast<std::size_t>(std::find(fr.begin(), fr.end(), point) - fr.begin());
    };

    StateMap next;
    for (const auto& [key, count] : states) {
      for (int choice = 0; choice <= 1; ++choice) {
        std::vector<std::int64_t> counts(key.begin(), key.begin() + static_cast<std::ptrdiff_t>(nv));
        counts[v] += choice;
        if (counts[v] > bound[v]) continue;
        if (exact && counts[v] + remaining[step + 1][v] < bound[v]) continue;
        bool ok = true;
        for (auto [n, ei] : g.adjacent(p)) {
          if (pos[n] >= step) continue;
          const bool n_in = key[slot(frontier, n)] != 0;
          const auto& e = g.edges()[ei];
          const bool src_in = e.source == p ? choice == 1 : n_in;
          const bool dst_in = e.target == p ? choice == 1 : n_in;
          if (src_in && !dst_in) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        std::vector<std::int64_t> nk = counts;
        for (auto u : next_frontier) nk.push_back(u == p ? choice : key[slot(frontier, u)]);
        auto& cell = next[nk];
        cell = checked_add(cell, count);
      }
    }
    states = std::move(next);
    frontier = std::move(next_frontier);
  }

  std::map<DimVector, std::uint64_t> out;
  for (const auto& [key, count] : states) {
    DimVector t(std::vector<std::int64_t>(key.begin(), key.begin() + static_cast<std::ptrdiff_t>(nv)));
    auto& cell = out[t];
    cell = checked_add(cell, count);
  }
  return out;
}

}  // namespace

std::uint64_t successor_closed_count(const CoefficientQuiver& g, const DimVector& e) {
  require_on(g.base(), e, "type");
  if (!e.fits_in(g.fiber_sizes())) return 0;
  const auto table = count_by_type(g, e, true);
  auto it = table.find(e);
  return it == table.end() ? 0 : it->second;
}

std::map<DimVector, std::uint64_t> successor_closed_table(const CoefficientQuiver& g) {
  return count_by_type(g, g.fiber_sizes(), false);
}

std::vector<TypedSubset> successor_closed_subsets(const CoefficientQuiver& g, const DimVector& e) {
  require_on(g.base(), e, "type");
  std::vector<TypedSubset> out;
  if (!e.fits_in(g.fiber_sizes())) return out;
  const std::size_t n = g.point_count();
  std::vector<int> in(n, -1);  // -1 undecided
  std::vector<std::int64_t> counts(g.base().vertex_count(), 0);
  std::vector<std::int64_t> left = g.fiber_sizes().entries();

  // Points in index order; include before exclude gives lexicographic order.
  auto consistent = [&](std::size_t p) {
    for (auto [nb, ei] : g.adjacent(p)) {
      if (in[nb] < 0) continue;
      const auto& edge = g.edges()[ei];
      if (in[edge.source] == 1 && in[edge.target] == 0) return false;
    }
    return true;
  };
  std::vector<std::size_t> members;
  auto rec = [&](auto&& self, std::size_t p) -> void {
    if (p == n) {
      out.push_back(make_typed_subset(g, members));
      return;
    }
    const std::size_t v = g.points()[p].vertex;
    --left[v];
    for (int choice : {1, 0}) {
      counts[v] += choice;
      in[p] = choice;
      if (counts[v] <= e[v] && counts[v] + left[v] >= e[v] && consistent(p)) {
        if (choice) members.push_back(p);
        self(self, p + 1);
        if (choice) members.pop_back();
      }
      counts[v] -= choice;
    }
    in[p] = -1;
    ++left[v];
  };
  rec(rec, 0);
  return out;
}

Quiver kronecker_quiver(std::size_t m) {
  if (m > 26) throw ValidationError("at most 26 parallel arrows");
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < m; ++i) arrows.push_back({std::string(1, static_cast<char>('a' + i)), 0, 1});
  return Quiver({"0", "1"}, std::move(arrows));
}

CoefficientQuiver kronecker_preprojective(std::size_t n) {
  std::vector<Point> points;
  for (std::size_t i = 1; i <= n; ++i) points.push_back({"s" + std::to_string(i), 0});
  for (std::size_t i = 1; i <= n + 1; ++i) points.push_back({"t" + std::to_string(i), 1});
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.push_back({0, i, n + i, {}});
    edges.push_back({1, i, n + i + 1, {}});
  }
  return CoefficientQuiver(kronecker_quiver(), std::move(points), std::move(edges));
}

CoefficientQuiver kronecker_regular_string(std::size_t n) {
  std::vector<Point> points;
  for (std::size_t i = 1; i <= 2 * n; ++i) points.push_back({std::to_string(i), i % 2 == 1 ? 1u : 0u});
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t src = 2 * i - 1;  // index of point 2i
    edges.push_back({0, src, src - 1, {}});
    if (i < n) edges.push_back({1, src, src + 1, {}});
  }
  return CoefficientQuiver(kronecker_quiver(), std::move(points), std::move(edges));
}

namespace {

// Arrow joining cyclic neighbours j and j+1 of the cycle, in the
// file-order convention of winding_string.
void require_cycle(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  if (n < 2 || q.arrow_count() != n || !q.is_connected())
    throw ValidationError("base quiver is not of extended Dynkin type A");
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t degree = 0;
    for (const auto& a : q.arrows()) degree += (a.source == v) + (a.target == v);
    if (degree != 2) throw ValidationError("base quiver is not of extended Dynkin type A");
  }
}

}  // namespace

CoefficientQuiver winding_string(const Quiver& cycle, std::size_t r, std::size_t k, std::size_t l) {
  require_cycle(cycle);
  const std::size_t n = cycle.vertex_count();
  for (std::size_t j = 0; j < n; ++j) {
    const auto& a = cycle.arrow(j);
    const std::size_t u = j, w = (j + 1) % n;
    if (!((a.source == u && a.target == w) || (a.source == w && a.target == u)))
      throw ValidationError("arrow '" + a.name + "' does not join cyclic neighbours " +
                            cycle.vertices()[u] + " and " + cycle.vertices()[w]);
  }
  if (k < 1 || k > n || l < 1 || l > n) throw ValidationError("winding offsets must lie in 1..n");
  const std::size_t last = r * n + k;
  if (last < l) throw ValidationError("winding string would be empty");
  std::vector<Point> points;
  for (std::size_t i = l; i <= last; ++i) points.push_back({std::to_string(i), (i - 1) % n});
  std::vector<Edge> edges;
  for (std::size_t i = l; i < last; ++i) {
    const std::size_t j = (i - 1) % n;  // arrow between q_(j+1) and q_(j+2)
    const auto& a = cycle.arrow(j);
    const std::size_t here = i - l, there = i + 1 - l;
    if (a.source == j)
      edges.push_back({j, here, there, {}});
    else
      edges.push_back({j, there, here, {}});
  }
  return CoefficientQuiver(cycle, std::move(points), std::move(edges));
}

std::string to_string(StringClass c) {
  switch (c) {
    case StringClass::Preprojective: return "preprojective";
    case StringClass::Preinjective: return "preinjective";
    case StringClass::Regular: return "regular";
  }
  return "?";
}

StringClass string_regularity_class(const CoefficientQuiver& g) {
  const auto& q = g.base();
  require_cycle(q);
  if (g.point_count() == 0 || !g.is_string() || !g.is_unramified())
    throw ValidationError("coefficient quiver is not an unramified string");

  std::vector<std::size_t> ends;
  for (std::size_t p = 0; p < g.point_count(); ++p)
    if (g.adjacent(p).size() <= 1) ends.push_back(p);

  int towards = 0, away = 0;
  for (auto p : ends) {
    const std::size_t v = g.points()[p].vertex;
    std::vector<std::size_t> used;
    for (auto [nb, ei] : g.adjacent(p)) used.push_back(g.edges()[ei].arrow);
    const std::size_t boundary_count = g.point_count() == 1 ? 2 : 1;
    std::size_t found = 0;
    for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) {
      const auto& a = q.arrow(ai);
      if (a.source != v && a.target != v) continue;
      if (std::find(used.begin(), used.end(), ai) != used.end()) continue;
      ++found;
      (a.target == v ? towards : away) += 1;
    }
    if (found != boundary_count) throw ValidationError("string end has no unique boundary arrow");
  }
  if (away == 0) return StringClass::Preprojective;
  if (towards == 0) return StringClass::Preinjective;
  return StringClass::Regular;
}

CoefficientQuiver parse_coefficient_quiver(std::string_view source, const std::filesystem::path& base_dir) {
  std::optional<Quiver> quiver;
  std::vector<Point> points;
  struct PendingEdge {
    int line;
    std::string arrow, src, dst;
    EdgeWeight weight;
  };
  std::vector<PendingEdge> pending;

  text::for_each_line(source, [&](int line_no, std::string_view line) {
    if (line.starts_with("quiver:")) {
      if (quiver) throw ParseError(line_no, "second 'quiver:' statement");
      quiver = load_quiver(base_dir / std::filesystem::path(std::string(text::trim(line.substr(7)))));
    } else if (line.starts_with("point ")) {
      auto words = text::split_ws(line.substr(6));
      if (words.size() != 3 || words[1] != "@" || !text::is_name(words[0]))
        throw ParseError(line_no, "expected 'point <id> @ <vertex>'");
      if (!quiver) throw ParseError(line_no, "point before 'quiver:'");
      auto v = quiver->find_vertex(words[2]);
      if (!v) throw ParseError(line_no, "unknown vertex '" + words[2] + "'");
      for (const auto& p : points)
        if (p.id == words[0]) throw ParseError(line_no, "duplicate point id '" + words[0] + "'");
      points.push_back({words[0], *v});
    } else if (line.starts_with("edge ")) {
      auto colon = line.find(':');
      auto arrow_pos = line.find("->");
      if (colon == std::string_view::npos || arrow_pos == std::string_view::npos || arrow_pos < colon)
        throw ParseError(line_no, "expected 'edge <arrow>: <src> -> <dst> [weight <w>]'");
      PendingEdge e{line_no, std::string(text::trim(line.substr(5, colon - 5))),
                    std::string(text::trim(line.substr(colon + 1, arrow_pos - colon - 1))), "", {}};
      auto rest = text::split_ws(line.substr(arrow_pos + 2));
      if (rest.size() != 1 && !(rest.size() == 3 && rest[1] == "weight"))
        throw ParseError(line_no, "expected 'edge <arrow>: <src> -> <dst> [weight <w>]'");
      e.dst = rest[0];
      if (rest.size() == 3) {
        if (rest[2] == "L") {
          e.weight = EdgeWeight::parameter();
        } else {
          try {
            e.weight = {parse_rational(rest[2]), false};
          } catch (const ValidationError& err) {
            throw ParseError(line_no, err.what());
          }
        }
      }
      pending.push_back(std::move(e));
    } else {
      throw ParseError(line_no, "unrecognized statement '" + std::string(line) + "'");
    }
  });
  if (!quiver) throw ValidationError("coefficient quiver file has no 'quiver:' statement");

  auto find_point = [&](const std::string& id, int line_no) {
    for (std::size_t i = 0; i < points.size(); ++i)
      if (points[i].id == id) return i;
    throw ParseError(line_no, "unknown point '" + id + "'");
  };
  std::vector<Edge> edges;
  for (const auto& pe : pending) {
    auto a = quiver->find_arrow(pe.arrow);
    if (!a) throw ParseError(pe.line, "unknown arrow '" + pe.arrow + "'");
    Edge e{*a, find_point(pe.src, pe.line), find_point(pe.dst, pe.line), pe.weight};
    const auto& arr = quiver->arrow(*a);
    if (points[e.source].vertex != arr.source || points[e.target].vertex != arr.target)
      throw ParseError(pe.line, "edge " + pe.src + " -> " + pe.dst + " does not lie over arrow '" + pe.arrow + "'");
    edges.push_back(e);
  }
  return CoefficientQuiver(*quiver, std::move(points), std::move(edges));
}

CoefficientQuiver load_coefficient_quiver(const std::filesystem::path& path) {
  try {
    return parse_coefficient_quiver(text::read_file(path), path.parent_path());
  } catch (const ParseError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

}  // namespace qgr

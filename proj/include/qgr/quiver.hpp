#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qgr {

struct Arrow {
  std::string name;
  std::size_t source;
  std::size_t target;

  bool operator==(const Arrow&) const = default;
};

// Arrow given by endpoint names, as read from a file.
struct ArrowSpec {
  std::string name;
  std::string source;
  std::string target;
};

/// Finite acyclic quiver with named vertices and arrows.
///
/// Vertex and arrow order is the order of construction (file order); every
/// matrix and printed dimension vector uses it.
class Quiver {
 public:
  Quiver() = default;

  /// Throws ValidationError on duplicate names, dangling endpoints or an
  /// oriented cycle (the message lists the arrows of one witness cycle).
  Quiver(std::vector<std::string> vertices, std::vector<ArrowSpec> arrows);
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }
  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  const Arrow& arrow(std::size_t i) const { return arrows_.at(i); }

  std::optional<std::size_t> find_vertex(std::string_view name) const;
  std::optional<std::size_t> find_arrow(std::string_view name) const;
  std::size_t vertex_index(std::string_view name) const;  // throws ValidationError
  std::size_t arrow_index(std::string_view name) const;   // throws ValidationError

  // Vertices joined to p by at least one arrow, in either direction.
  std::vector<std::size_t> neighbors(std::size_t p) const;

  std::vector<std::size_t> topological_order() const;

  // Connected components of the underlying graph, each sorted.
  std::vector<std::vector<std::size_t>> components() const;
  bool is_connected() const;

  Quiver opposite() const;

  // Subquiver on the given vertices (kept in the given order) and arrows;
  // arrows must have both endpoints among the vertices.
  Quiver subquiver(std::span<const std::size_t> vertex_ids,
                   std::span<const std::size_t> arrow_ids) const;

  bool operator==(const Quiver&) const = default;

 private:
  void validate() const;

  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

/// Nonnegative integer vector indexed by the vertices of a quiver.
class DimVector {
 public:
  DimVector() = default;
  explicit DimVector(std::vector<std::int64_t> entries);
  DimVector(std::initializer_list<std::int64_t> entries)
      : DimVector(std::vector<std::int64_t>(entries)) {}

  static DimVector zero(std::size_t n) { return DimVector(std::vector<std::int64_t>(n, 0)); }
  static DimVector unit(std::size_t n, std::size_t i);

  std::size_t size() const noexcept { return entries_.size(); }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<std::int64_t>& entries() const noexcept { return entries_; }
  std::int64_t total() const;
  bool is_zero() const;

  DimVector operator+(const DimVector& other) const;
  // Throws ValidationError if the result would be negative.
  DimVector operator-(const DimVector& other) const;
  DimVector operator*(std::int64_t k) const;

  // Componentwise order.
  bool fits_in(const DimVector& other) const;

  bool operator==(const DimVector&) const = default;
  auto operator<=>(const DimVector&) const = default;

  std::string to_string() const;  // "(1,2,1)"

 private:
  std::vector<std::int64_t> entries_;
};

/// Comma-separated entries in vertex order, e.g. "1,2,1".
DimVector parse_dimvec(std::string_view text);

// Throws ValidationError unless v has one entry per vertex of q.
void require_on(const Quiver& q, const DimVector& v, std::string_view what = "dimension vector");

Quiver parse_quiver(std::string_view text);
Quiver load_quiver(const std::filesystem::path& path);

// Shared helpers for the line-oriented file formats.
namespace text {
std::string read_file(const std::filesystem::path& path);
std::string_view trim(std::string_view s);
std::vector<std::string> split_ws(std::string_view s);
bool is_name(std::string_view s);
// Calls fn(line_number, line) for every line with '#' comments and
// surrounding whitespace removed; blank lines are skipped.
void for_each_line(std::string_view source,
                   const std::function<void(int, std::string_view)>& fn);
}  // namespace text

}  // namespace qgr

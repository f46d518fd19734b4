#include "qgr/representation.hpp"

#include <map>
#include <optional>

namespace qgr {

namespace {

// "1 0; 0 1" into a rows x cols matrix.
Matrix<Rational> parse_matrix(std::string_view body, std::size_t rows, std::size_t cols, int line_no,
                              const std::string& arrow) {
  Matrix<Rational> m(rows, cols, Rational(0));
  std::vector<std::vector<std::string>> parsed;
  std::size_t start = 0;
  while (start <= body.size()) {
    auto semi = body.find(';', start);
    if (semi == std::string_view::npos) semi = body.size();
    auto row = text::split_ws(body.substr(start, semi - start));
    if (!row.empty() || semi != body.size() || !parsed.empty()) parsed.push_back(std::move(row));
    start = semi + 1;
  }
  if (rows == 0 || cols == 0) {
    for (const auto& r : parsed)
      if (!r.empty()) throw ParseError(line_no, "matrix of arrow '" + arrow + "' must be empty");
    return m;
  }
  if (parsed.size() != rows)
    throw ParseError(line_no, "matrix of arrow '" + arrow + "' needs " + std::to_string(rows) + " rows");
  for (std::size_t i = 0; i < rows; ++i) {
    if (parsed[i].size() != cols)
      throw ParseError(line_no, "row " + std::to_string(i + 1) + " of arrow '" + arrow + "' needs " +
                                    std::to_string(cols) + " entries");
    for (std::size_t j = 0; j < cols; ++j) {
      try {
        m(i, j) = parse_rational(parsed[i][j]);
      } catch (const ValidationError& e) {
        throw ParseError(line_no, e.what());
      }
    }
  }
  return m;
}

}  // namespace

RepresentationData parse_representation(std::string_view source, const std::filesystem::path& base_dir) {
  std::optional<Quiver> quiver;
  std::optional<FieldSpec> field;
  std::map<std::string, std::int64_t> dims;
  std::vector<std::pair<int, std::pair<std::string, std::string>>> matrix_lines;

  text::for_each_line(source, [&](int line_no, std::string_view line) {
    auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError(line_no, "expected '<keyword>: ...'");
    auto head = text::split_ws(line.substr(0, colon));
    auto body = text::trim(line.substr(colon + 1));
    if (head.size() == 1 && head[0] == "quiver") {
      if (quiver) throw ParseError(line_no, "second 'quiver:' statement");
      quiver = load_quiver(base_dir / std::filesystem::path(std::string(body)));
    } else if (head.size() == 1 && head[0] == "field") {
      try {
        field = parse_field_spec(body);
      } catch (const ValidationError& e) {
        throw ParseError(line_no, e.what());
      }
    } else if (head.size() == 2 && head[0] == "dim") {
      std::size_t used = 0;
      long long n = -1;
      try {
        n = std::stoll(std::string(body), &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != body.size() || n < 0) throw ParseError(line_no, "bad dimension '" + std::string(body) + "'");
      if (!dims.emplace(head[1], n).second) throw ParseError(line_no, "dimension of '" + head[1] + "' given twice");
    } else if (head.size() == 2 && head[0] == "matrix") {
      matrix_lines.push_back({line_no, {head[1], std::string(body)}});
    } else {
      throw ParseError(line_no, "unrecognized statement '" + std::string(line) + "'");
    }
  });
  if (!quiver) throw ValidationError("representation file has no 'quiver:' statement");

  RepresentationData data{*quiver, field.value_or(RationalsSpec{}), DimVector::zero(quiver->vertex_count()), {}};
  std::vector<std::int64_t> d(quiver->vertex_count(), 0);
  for (const auto& [name, n] : dims) {
    auto v = quiver->find_vertex(name);
    if (!v) throw ValidationError("dimension given for unknown vertex '" + name + "'");
    d[*v] = n;
  }
  data.dims = DimVector(d);
  for (const auto& a : quiver->arrows())
    data.matrices.emplace_back(static_cast<std::size_t>(d[a.target]), static_cast<std::size_t>(d[a.source]),
                               Rational(0));
  std::vector<bool> seen(quiver->arrow_count(), false);
  for (const auto& [line_no, entry] : matrix_lines) {
    const auto& [name, body] = entry;
    auto ai = quiver->find_arrow(name);
    if (!ai) throw ParseError(line_no, "matrix given for unknown arrow '" + name + "'");
    if (seen[*ai]) throw ParseError(line_no, "matrix of arrow '" + name + "' given twice");
    seen[*ai] = true;
    const auto& a = quiver->arrow(*ai);
    data.matrices[*ai] = parse_matrix(body, static_cast<std::size_t>(d[a.target]),
                                      static_cast<std::size_t>(d[a.source]), line_no, name);
  }
  return data;
}

RepresentationData load_representation(const std::filesystem::path& path) {
  try {
    return parse_representation(text::read_file(path), path.parent_path());
  } catch (const ParseError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

}  // namespace qgr

#include "krc/element.hpp"

#include <json.hpp>

namespace krc {

Model model_of(const Element& e) {
  return std::holds_alternative<tab::Tableau>(e) ? Model::tableau : Model::polytope;
}

namespace {

void append_rows(std::string& out, const std::vector<int>& cells, int rows, int cols) {
  out += '[';
  for (int r = 0; r < rows; ++r) {
    if (r) out += ',';
    out += '[';
    for (int c = 0; c < cols; ++c) {
      if (c) out += ',';
      out += std::to_string(cells[static_cast<size_t>(r) * cols + c]);
    }
    out += ']';
  }
  out += ']';
}

}  // namespace

std::string encode_element(const Element& e) {
  std::string out = "{\"model\":\"";
  if (model_of(e) == Model::tableau) {
    const auto& t = std::get<tab::Tableau>(e);
    out += "tableau\",\"rows\":";
    append_rows(out, t.cells(), t.rows(), t.cols());
  } else {
    const auto& a = std::get<poly::PolytopePoint>(e);
    out += "polytope\",\"rows\":";
    append_rows(out, a.entries(), a.row_count(), a.node());
  }
  out += '}';
  return out;
}

Element decode_element(std::string_view text, const Params& p) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw DecodeError("element text is not valid JSON");
  if (!j.is_object() || !j.contains("model") || !j.contains("rows"))
    throw DecodeError("element must be an object with \"model\" and \"rows\"");
  const auto model = j["model"];
  if (!model.is_string() || (model != "tableau" && model != "polytope"))
    throw DecodeError("\"model\" must be \"tableau\" or \"polytope\"");
  const auto& rows = j["rows"];
  if (!rows.is_array()) throw DecodeError("\"rows\" must be an array of integer arrays");

  const bool tableau = model == "tableau";
  const int want_rows = tableau ? p.i : p.n - p.i + 1;
  const int want_cols = tableau ? p.m : p.i;
  if (static_cast<int>(rows.size()) != want_rows)
    throw DecodeError("expected " + std::to_string(want_rows) + " rows, got " +
                      std::to_string(rows.size()));
  std::vector<int> cells;
  cells.reserve(static_cast<size_t>(want_rows) * want_cols);
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != want_cols)
      throw DecodeError("every row must be an array of length " + std::to_string(want_cols));
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw DecodeError("entries must be integers");
      const int x = v.get<int>();
      if (x < 0) throw DecodeError("entries must be non-negative");
      cells.push_back(x);
    }
  }

  if (tableau) {
    tab::Tableau t(p.i, p.m, std::move(cells));
    if (!tab::is_semistandard(t))
      throw DecodeError("tableau is not semistandard (rows weakly increasing, columns strict)");
    for (int v : t.cells())
      if (v > p.n + 1) throw DecodeError("tableau entry exceeds n+1 = " + std::to_string(p.n + 1));
    return t;
  }
  poly::PolytopePoint a(p.i, p.n, std::move(cells));
  if (poly::max_dyck_sum(a) > p.m)
    throw DecodeError("Dyck path bound exceeded: max path sum " +
                      std::to_string(poly::max_dyck_sum(a)) + " > m = " + std::to_string(p.m));
  return a;
}

ElementStats element_stats(const Element& e, int l, const Params& p) {
  if (model_of(e) == Model::tableau) {
    const auto st = tab::string_stats(std::get<tab::Tableau>(e), l, p);
    return {st.eps, st.phi};
  }
  const auto st = poly::string_stats(std::get<poly::PolytopePoint>(e), l, p);
  return {st.eps, st.phi};
}

std::optional<Element> element_apply(const Element& e, Dir dir, int l, const Params& p) {
  if (model_of(e) == Model::tableau) {
    auto r = tab::apply(std::get<tab::Tableau>(e), dir, l, p);
    if (!r) return std::nullopt;
    return Element(std::move(*r));
  }
  auto r = poly::apply(std::get<poly::PolytopePoint>(e), dir, l, p);
  if (!r) return std::nullopt;
  return Element(std::move(*r));
}

Weight element_weight(const Element& e, const Params& p) {
  if (model_of(e) == Model::tableau) return tab::weight(std::get<tab::Tableau>(e), p);
  return poly::weight(std::get<poly::PolytopePoint>(e), p);
}

}  // namespace krc

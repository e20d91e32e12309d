// Model-tagged element values and their canonical JSON text form.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "krc/polytope.hpp"
#include "krc/tableau.hpp"

namespace krc {

using Element = std::variant<tab::Tableau, poly::PolytopePoint>;

Model model_of(const Element& e);

// Canonical text form, e.g. {"model":"tableau","rows":[[1,2],[2,3]]}.
// Does not validate; any grid serializes.
std::string encode_element(const Element& e);

// Parses and validates against p; throws DecodeError naming the violated
// constraint (shape, semistandardness, Dyck path bound, ...).
Element decode_element(std::string_view text, const Params& p);

// Dispatch over the two models.
struct ElementStats {
  int eps = 0;
  int phi = 0;
};
ElementStats element_stats(const Element& e, int l, const Params& p);
std::optional<Element> element_apply(const Element& e, Dir dir, int l, const Params& p);
Weight element_weight(const Element& e, const Params& p);

}  // namespace krc

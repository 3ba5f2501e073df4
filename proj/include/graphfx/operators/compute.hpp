#pragma once

#include "graphfx/detail/parallel.hpp"
#include "graphfx/frontier/frontier.hpp"

namespace graphfx {

/// Runs apply(id) once per frontier item, in no particular order. Duplicate
/// items are applied once per occurrence.
template <FrontierKind Kind, typename Apply>
void compute(const Frontier<Kind>& in, Apply&& apply) {
  const auto items = in.items();
  detail::parallel_for(0, items.size(), [&](std::size_t i) { apply(items[i]); });
}

}  // namespace graphfx

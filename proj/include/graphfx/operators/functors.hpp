#pragma once

#include <concepts>

#include "graphfx/types.hpp"

namespace graphfx {

/// Per-edge callbacks fused into advance. cond(src, dst, edge) decides
/// whether the edge's image enters the output frontier; apply(src, dst, edge)
/// runs for every edge whose cond returned true. Both may be invoked
/// concurrently and must mutate shared data only through graphfx atomics
/// (plain writes are fine in idempotent mode).
template <typename F>
concept EdgeFunctorSet = requires(F& f, vertex_t s, vertex_t d, edge_t e) {
  { f.cond(s, d, e) } -> std::convertible_to<bool>;
  f.apply(s, d, e);
};

template <typename Cond, typename Apply>
struct EdgeFunctors {
  Cond cond;
  Apply apply;
};

template <typename Cond, typename Apply>
EdgeFunctors(Cond, Apply) -> EdgeFunctors<Cond, Apply>;

struct AlwaysTrue {
  template <typename... Args>
  constexpr bool operator()(Args&&...) const noexcept {
    return true;
  }
};

struct NoOp {
  template <typename... Args>
  constexpr void operator()(Args&&...) const noexcept {}
};

inline constexpr AlwaysTrue always_true{};
inline constexpr NoOp no_op{};

template <typename Cond, typename Apply = NoOp>
auto make_functors(Cond cond, Apply apply = {}) {
  return EdgeFunctors<Cond, Apply>{std::move(cond), std::move(apply)};
}

}  // namespace graphfx

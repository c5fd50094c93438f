#pragma once

#include "biprabhakar/bicomplex.hpp"
#include "biprabhakar/errors.hpp"

namespace biprab::detail {

/// Builds f(1) e1 + f(2) e2, labelling any library error with its component.
template <class F>
Bicomplex componentwise(F&& f) {
  Complex out[2];
  for (int r = 1; r <= 2; ++r) {
    try {
      out[r - 1] = f(r);
    } catch (const Error& e) {
      rethrow_with_component(e, r);
    }
  }
  return Bicomplex::from_idempotent(out[0], out[1]);
}

}  // namespace biprab::detail

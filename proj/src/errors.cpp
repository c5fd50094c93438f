#include "biprabhakar/errors.hpp"

namespace biprab {

namespace {

template <class E>
[[noreturn]] void relabel(const E& e, int component) {
  throw E("component " + std::to_string(component) + ": " + e.what(), component);
}

}  // namespace

void rethrow_with_component(const Error& e, int component) {
  if (e.component()) throw;  // already labelled by an inner layer
  if (auto* q = dynamic_cast<const QuadratureFailure*>(&e)) {
    throw QuadratureFailure("component " + std::to_string(component) + ": " + q->what(),
                            q->error_estimate(), component);
  }
  if (auto* x = dynamic_cast<const NullConeError*>(&e)) relabel(*x, component);
  if (auto* x = dynamic_cast<const PoleError*>(&e)) relabel(*x, component);
  if (auto* x = dynamic_cast<const GridError*>(&e)) relabel(*x, component);
  if (auto* x = dynamic_cast<const ContourError*>(&e)) relabel(*x, component);
  if (auto* x = dynamic_cast<const DomainError*>(&e)) relabel(*x, component);
  if (auto* x = dynamic_cast<const NoConvergence*>(&e)) relabel(*x, component);
  if (auto* x = dynamic_cast<const SeriesDivergence*>(&e)) relabel(*x, component);
  if (auto* x = dynamic_cast<const NumericalError*>(&e)) relabel(*x, component);
  relabel(e, component);
}

}  // namespace biprab

#include "nanobeam/kernels.hpp"

namespace nanobeam::kernels::reference {

template <int Dim>
std::vector<ScaledBlock<Dim>> scale_blocks(std::span<const BasicModeBlock<Dim>> blocks) {
  std::vector<ScaledBlock<Dim>> out;
  out.reserve(blocks.size());
  for (const auto& b : blocks) out.push_back(scale_block(b));
  return out;
}

template <int Dim>
ModeMax resolvent_max(std::span<const ScaledBlock<Dim>> blocks, double lambda) {
  ModeMax best;
  for (const auto& b : blocks) {
    const ModeMax cand{block_resolvent_norm(b, lambda), b.n};
    if (better(cand, best)) best = cand;
  }
  return best;
}

template <int Dim>
std::vector<ModeMax> resolvent_scan(std::span<const ScaledBlock<Dim>> blocks,
                                    std::span<const double> lambdas) {
  std::vector<ModeMax> out;
  out.reserve(lambdas.size());
  for (double lam : lambdas) out.push_back(resolvent_max(blocks, lam));
  return out;
}

template <int Dim>
ModeMax abscissa_max(std::span<const BasicModeBlock<Dim>> blocks) {
  ModeMax best;
  for (const auto& b : blocks) {
    const ModeMax cand{block_abscissa(b), b.n};
    if (better(cand, best)) best = cand;
  }
  return best;
}

#define NANOBEAM_INSTANTIATE(D)                                                              \
  template std::vector<ScaledBlock<D>> scale_blocks(std::span<const BasicModeBlock<D>>);    \
  template ModeMax resolvent_max(std::span<const ScaledBlock<D>>, double);                  \
  template std::vector<ModeMax> resolvent_scan(std::span<const ScaledBlock<D>>,             \
                                               std::span<const double>);                    \
  template ModeMax abscissa_max(std::span<const BasicModeBlock<D>>);

NANOBEAM_INSTANTIATE(4)
NANOBEAM_INSTANTIATE(8)
#undef NANOBEAM_INSTANTIATE

}  // namespace nanobeam::kernels::reference

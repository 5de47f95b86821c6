#include <exception>

#include <omp.h>

#include "nanobeam/kernels.hpp"

namespace nanobeam::kernels::parallel {

namespace {

// Exceptions must not escape an OpenMP region; keep the first and rethrow.
class ExceptionSlot {
public:
  template <typename F>
  void run(F&& f) {
    try {
      f();
    } catch (...) {
#pragma omp critical(nanobeam_exception_slot)
      if (!error_) error_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

private:
  std::exception_ptr error_;
};

template <typename Eval>
ModeMax parallel_mode_max(int count, Eval&& eval) {
  ModeMax best;
  ExceptionSlot slot;
#pragma omp parallel
  {
    ModeMax local;
#pragma omp for schedule(static) nowait
    for (int i = 0; i < count; ++i) {
      slot.run([&] {
        const ModeMax cand = eval(i);
        if (better(cand, local)) local = cand;
      });
    }
#pragma omp critical(nanobeam_mode_max)
    if (better(local, best)) best = local;
  }
  slot.rethrow();
  return best;
}

}  // namespace

template <int Dim>
std::vector<ScaledBlock<Dim>> scale_blocks(std::span<const BasicModeBlock<Dim>> blocks) {
  std::vector<ScaledBlock<Dim>> out(blocks.size());
  ExceptionSlot slot;
  const int count = static_cast<int>(blocks.size());
#pragma omp parallel for schedule(static)
  for (int i = 0; i < count; ++i) slot.run([&] { out[i] = scale_block(blocks[i]); });
  slot.rethrow();
  return out;
}

template <int Dim>
ModeMax resolvent_max(std::span<const ScaledBlock<Dim>> blocks, double lambda) {
  return parallel_mode_max(static_cast<int>(blocks.size()), [&](int i) {
    return ModeMax{block_resolvent_norm(blocks[i], lambda), blocks[i].n};
  });
}

template <int Dim>
std::vector<ModeMax> resolvent_scan(std::span<const ScaledBlock<Dim>> blocks,
                                    std::span<const double> lambdas) {
  std::vector<ModeMax> out(lambdas.size());
  const int count = static_cast<int>(lambdas.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (int k = 0; k < count; ++k) out[k] = reference::resolvent_max(blocks, lambdas[k]);
  return out;
}

template <int Dim>
ModeMax abscissa_max(std::span<const BasicModeBlock<Dim>> blocks) {
  return parallel_mode_max(static_cast<int>(blocks.size()), [&](int i) {
    return ModeMax{block_abscissa(blocks[i]), blocks[i].n};
  });
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

}  // namespace nanobeam::kernels::parallel

#include <atomic>
#include <cstdlib>

#include "gamowlab/kernels.hpp"

namespace gamowlab::kernels {

namespace detail {
#ifndef GAMOWLAB_HAVE_AVX2_KERNELS
const KernelSet* avx2_if_supported() { return nullptr; }
#endif
#ifndef GAMOWLAB_HAVE_NEON_KERNELS
const KernelSet* neon_if_supported() { return nullptr; }
#endif
}  // namespace detail

std::vector<const KernelSet*> available() {
  std::vector<const KernelSet*> sets{&scalar()};
  if (const auto* k = detail::avx2_if_supported()) sets.push_back(k);
  if (const auto* k = detail::neon_if_supported()) sets.push_back(k);
  return sets;
}

namespace {

const KernelSet* find(std::string_view name) {
  for (const auto* k : available()) {
    if (k->name == name) return k;
  }
  return nullptr;
}

const KernelSet* initial_choice() {
  if (const char* env = std::getenv("GAMOWLAB_KERNEL")) {
    if (const auto* k = find(env)) return k;
  }
  return available().back();
}

std::atomic<const KernelSet*>& current() {
  static std::atomic<const KernelSet*> k{initial_choice()};
  return k;
}

}  // namespace

const KernelSet& active() { return *current().load(std::memory_order_relaxed); }

bool select(std::string_view name) {
  const auto* k = find(name);
  if (k == nullptr) return false;
  current().store(k, std::memory_order_relaxed);
  return true;
}

}  // namespace gamowlab::kernels

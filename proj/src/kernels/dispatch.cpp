#include <atomic>
#include <cstdlib>

#include "dicke/errors.hpp"
#include "dicke/kernels.hpp"

namespace dicke::kernels {

namespace {

constexpr KernelTable kScalar{Isa::Scalar, &scalar::apply, &scalar::rk4};
#if defined(DICKE_HAVE_AVX2)
constexpr KernelTable kAvx2{Isa::Avx2, &avx2::apply, &avx2::rk4};
#endif

// -1: no override
std::atomic<int> g_forced{-1};

bool cpu_has_avx2() {
#if defined(DICKE_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa from_environment_or_detect() {
  if (const char* env = std::getenv("DICKE_KERNEL")) {
    if (auto isa = parse_isa(env); isa && isa_available(*isa)) return *isa;
  }
  return detect_isa();
}

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
  }
  return "unknown";
}

std::optional<Isa> parse_isa(std::string_view name) {
  if (name == "scalar") return Isa::Scalar;
  if (name == "avx2") return Isa::Avx2;
  return std::nullopt;
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2: {
      static const bool ok = cpu_has_avx2();
      return ok;
    }
  }
  return false;
}

Isa detect_isa() { return isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar; }

const KernelTable& table(Isa isa) {
  if (!isa_available(isa))
    throw InvalidParameter("kernel variant '" + std::string(to_string(isa)) +
                           "' is not available on this CPU/build");
#if defined(DICKE_HAVE_AVX2)
  if (isa == Isa::Avx2) return kAvx2;
#endif
  return kScalar;
}

const KernelTable& active() {
  static const Isa chosen = from_environment_or_detect();
  const int forced = g_forced.load(std::memory_order_relaxed);
  return table(forced >= 0 ? static_cast<Isa>(forced) : chosen);
}

void force_isa(std::optional<Isa> isa) {
  if (isa) table(*isa);  // validates availability
  g_forced.store(isa ? static_cast<int>(*isa) : -1, std::memory_order_relaxed);
}

}  // namespace dicke::kernels

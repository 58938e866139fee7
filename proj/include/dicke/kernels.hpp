#pragma once

// Data-parallel inner loops of the master-equation integrator.
//
// The generator is linear with real coefficients, so it acts on the real and
// imaginary parts of vec(rho) independently as one real 16x16 matrix. Each
// kernel variant implements the same two entry points; the dispatcher picks
// the widest one the CPU supports at runtime.

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace dicke::kernels {

inline constexpr int kDim = 16;

/// Real 16x16 superoperator, column-major: coeff[k * 16 + i] = L(i, k).
struct alignas(32) Superoperator {
  std::array<double, kDim * kDim> coeff{};

  double operator()(int row, int col) const { return coeff[col * kDim + row]; }
  double& operator()(int row, int col) { return coeff[col * kDim + row]; }
};

/// vec(rho) split into real and imaginary planes, index = 4 * row + col.
struct alignas(32) SplitState {
  std::array<double, kDim> re{};
  std::array<double, kDim> im{};
};

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);
std::optional<Isa> parse_isa(std::string_view name);

struct KernelTable {
  Isa isa;
  /// out = L * in
  void (*apply)(const Superoperator& op, const SplitState& in, SplitState& out);
  /// `steps` classical fourth-order Runge-Kutta steps of size h, in place.
  void (*rk4)(const Superoperator& op, SplitState& x, double h, std::size_t steps);
};

bool isa_available(Isa isa);

/// Widest variant supported by this CPU and build.
Isa detect_isa();

/// Kernel table currently in use. Honors force_isa(), then the DICKE_KERNEL
/// environment variable ("scalar" or "avx2"), then detect_isa().
const KernelTable& active();

/// Table for a specific variant; throws InvalidParameter if unavailable.
const KernelTable& table(Isa isa);

/// Pins (or with nullopt, releases) the variant returned by active().
void force_isa(std::optional<Isa> isa);

namespace scalar {
void apply(const Superoperator& op, const SplitState& in, SplitState& out);
void rk4(const Superoperator& op, SplitState& x, double h, std::size_t steps);
}  // namespace scalar

#if defined(DICKE_HAVE_AVX2)
namespace avx2 {
void apply(const Superoperator& op, const SplitState& in, SplitState& out);
void rk4(const Superoperator& op, SplitState& x, double h, std::size_t steps);
}  // namespace avx2
#endif

}  // namespace dicke::kernels

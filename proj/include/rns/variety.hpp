#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "rns/field_eval.hpp"

namespace rns {

using ProjectivePoint = std::vector<std::uint64_t>;

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t estimate, std::uint64_t budget);
  std::uint64_t estimate() const noexcept { return estimate_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t estimate_;
  std::uint64_t budget_;
};

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

struct EnumerationOptions {
  /// Cap on generator evaluations (representatives x generators).
  std::uint64_t budget = kDefaultBudget;
  /// Largest admissible field size.
  std::uint64_t max_field = 1u << 20;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned threads = 0;
  /// Representatives per work chunk.
  std::uint64_t chunk_size = 4096;
  /// Recorded in reports only; enumeration itself is deterministic.
  std::uint64_t seed = 0;
};

/// (q^n - 1) / (q - 1); throws BudgetExceeded when it does not fit 64 bits.
std::uint64_t projective_point_count(std::uint64_t q, std::size_t n);

struct EnumerationResult {
  std::vector<ProjectivePoint> points;  // sorted
  std::uint64_t visited = 0;            // representatives enumerated
};

/// Common zeros in P^{n-1}(F_q) of the generators, over canonical
/// representatives (first nonzero coordinate equal to 1).
EnumerationResult enumerate_variety(const std::vector<CompiledGenerator>& gens, std::size_t num_vars,
                                    std::uint64_t q, const EnumerationOptions& options = {});

/// Polynomial front end; gens must be over F_q and use only coords.
EnumerationResult enumerate_variety(std::span<const Polynomial> gens, std::span<const VarId> coords,
                                    const EnumerationOptions& options = {});

struct VarietyReport {
  std::vector<unsigned> profile;
  std::uint64_t q = 0;
  std::uint64_t count_J = 0;
  std::uint64_t count_P = 0;
  std::vector<ProjectivePoint> witnesses;  // V(J) \ V(P), sorted
  std::uint64_t prime_only = 0;            // |V(P) \ V(J)|; nonzero means J is not inside P
  std::uint64_t points_enumerated = 0;
  std::uint64_t seed = 0;
  double elapsed_ms = 0;

  bool passed() const noexcept { return witnesses.empty() && prime_only == 0 && count_J == count_P; }
  nlohmann::ordered_json to_json() const;
};

/// Enumerates V(J) and V(P) over F_q in one pass.
VarietyReport compare_varieties(const ScrollProfile& profile, std::uint64_t q, const EnumerationOptions& options = {});

/// Generator evaluations compare_varieties would need in the worst case.
std::uint64_t comparison_cost(const ScrollProfile& profile, std::uint64_t q);

}  // namespace rns

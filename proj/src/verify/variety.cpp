#include "rns/variety.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

namespace rns {

BudgetExceeded::BudgetExceeded(std::uint64_t estimate, std::uint64_t budget)
    : std::runtime_error("enumeration needs about " + std::to_string(estimate) +
                         " generator evaluations, budget is " + std::to_string(budget)),
      estimate_(estimate),
      budget_(budget) {}

namespace {

constexpr std::uint64_t kSaturated = ~std::uint64_t{0};

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  return __builtin_mul_overflow(a, b, &out) ? kSaturated : out;
}

std::uint64_t saturating_pow(std::uint64_t q, std::size_t e) {
  std::uint64_t out = 1;
  for (std::size_t k = 0; k < e && out != kSaturated; ++k) out = saturating_mul(out, q);
  return out;
}

// Walks canonical representatives (leading nonzero coordinate 1) in a
// fixed order: lead position ascending, then the trailing coordinates as
// a base-q odometer.
class RepresentativeCursor {
 public:
  RepresentativeCursor(std::uint64_t q, std::size_t n, std::uint64_t index) : q_(q), coords_(n, 0) {
    lead_ = 0;
    for (;;) {
      const std::uint64_t block = saturating_pow(q, n - 1 - lead_);
      if (index < block) break;
      index -= block;
      ++lead_;
    }
    coords_[lead_] = 1;
    for (std::size_t pos = n - 1; pos > lead_; --pos) {
      coords_[pos] = index % q;
      index /= q;
    }
  }

  const ProjectivePoint& point() const noexcept { return coords_; }

  void advance() {
    for (std::size_t pos = coords_.size() - 1; pos > lead_; --pos) {
      if (++coords_[pos] < q_) return;
      coords_[pos] = 0;
    }
    coords_[lead_] = 0;
    if (++lead_ < coords_.size()) coords_[lead_] = 1;
  }

 private:
  std::uint64_t q_;
  ProjectivePoint coords_;
  std::size_t lead_;
};

// Splits [0, total) into chunks handed to workers on demand; body(begin,
// end, worker) processes one chunk. Exceptions propagate to the caller.
template <typename Body>
void run_chunks(std::uint64_t total, const EnumerationOptions& options, unsigned workers, Body&& body) {
  const std::uint64_t chunk = std::max<std::uint64_t>(1, options.chunk_size);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&](unsigned worker) {
    try {
      for (;;) {
        const std::uint64_t begin = next.fetch_add(chunk);
        if (begin >= total) break;
        body(begin, std::min(total, begin + chunk), worker);
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next = total;
    }
  };
  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
}

unsigned worker_count(const EnumerationOptions& options, std::uint64_t total) {
  unsigned w = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  const std::uint64_t chunks = total / std::max<std::uint64_t>(1, options.chunk_size) + 1;
  return static_cast<unsigned>(std::min<std::uint64_t>(w, chunks));
}

void check_field(std::uint64_t q, const EnumerationOptions& options) {
  if (q > options.max_field) {
    throw DomainError("field size " + std::to_string(q) + " exceeds the cap " + std::to_string(options.max_field));
  }
  if (!is_prime(q)) throw DomainError("field size " + std::to_string(q) + " is not prime");
}

std::uint64_t checked_cost(std::uint64_t reps, std::size_t gens, const EnumerationOptions& options) {
  const std::uint64_t estimate = saturating_mul(reps, std::max<std::uint64_t>(1, gens));
  if (estimate > options.budget) throw BudgetExceeded(estimate, options.budget);
  return estimate;
}

bool all_vanish(const std::vector<CompiledGenerator>& gens, const ProjectivePoint& pt, const PrimeField& field) {
  for (const auto& g : gens) {
    if (g.evaluate(pt, field) != 0) return false;
  }
  return true;
}

}  // namespace

std::uint64_t projective_point_count(std::uint64_t q, std::size_t n) {
  if (n == 0) return 0;
  // 1 + q + ... + q^{n-1}
  std::uint64_t total = 0, power = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (__builtin_add_overflow(total, power, &total)) throw BudgetExceeded(kSaturated, kSaturated);
    if (k + 1 < n && __builtin_mul_overflow(power, q, &power)) throw BudgetExceeded(kSaturated, kSaturated);
  }
  return total;
}

EnumerationResult enumerate_variety(const std::vector<CompiledGenerator>& gens, std::size_t num_vars, std::uint64_t q,
                                    const EnumerationOptions& options) {
  check_field(q, options);
  if (num_vars == 0) throw DomainError("projective space needs at least one coordinate");
  const std::uint64_t total = projective_point_count(q, num_vars);
  checked_cost(total, gens.size(), options);

  const PrimeField field(q);
  const unsigned workers = worker_count(options, total);
  std::vector<std::vector<ProjectivePoint>> found(workers);
  std::vector<std::uint64_t> visited(workers, 0);
  run_chunks(total, options, workers, [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
    RepresentativeCursor cursor(q, num_vars, begin);
    for (std::uint64_t idx = begin; idx < end; ++idx, cursor.advance()) {
      ++visited[w];
      if (all_vanish(gens, cursor.point(), field)) found[w].push_back(cursor.point());
    }
  });

  EnumerationResult result;
  for (std::size_t w = 0; w < workers; ++w) {
    result.visited += visited[w];
    result.points.insert(result.points.end(), found[w].begin(), found[w].end());
  }
  std::sort(result.points.begin(), result.points.end());
  return result;
}

EnumerationResult enumerate_variety(std::span<const Polynomial> gens, std::span<const VarId> coords,
                                    const EnumerationOptions& options) {
  if (coords.empty()) throw DomainError("projective space needs at least one coordinate");
  std::uint64_t q = 0;
  std::vector<CompiledGenerator> compiled;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (gens[k].domain().kind() != Domain::Kind::PrimeField) throw DomainError("generators must be over F_q");
    if (q != 0 && gens[k].domain().modulus() != q) throw DomainError("generators over different fields");
    q = gens[k].domain().modulus();
    std::vector<std::pair<CompiledPolynomial, std::uint64_t>> parts;
    parts.emplace_back(CompiledPolynomial(gens[k], coords), 1);
    compiled.emplace_back("g" + std::to_string(k), std::move(parts));
  }
  if (q == 0) throw DomainError("field size unknown for an empty generator list; use the compiled overload");
  return enumerate_variety(compiled, coords.size(), q, options);
}

std::uint64_t comparison_cost(const ScrollProfile& profile, std::uint64_t q) {
  const std::size_t gens = expected_j_size(profile) + profile.sum_sizes() * (profile.sum_sizes() - 1) / 2;
  std::uint64_t reps = kSaturated;
  try {
    reps = projective_point_count(q, profile.variable_count());
  } catch (const BudgetExceeded&) {
  }
  return saturating_mul(reps, std::max<std::size_t>(1, gens));
}

VarietyReport compare_varieties(const ScrollProfile& profile, std::uint64_t q, const EnumerationOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  check_field(q, options);
  const std::uint64_t cost = comparison_cost(profile, q);
  if (cost > options.budget) throw BudgetExceeded(cost, options.budget);

  const EquationSet eqs = equation_set(profile);
  const auto j_gens = compile_j(eqs, q);
  const auto p_gens = compile_prime(eqs, q);
  const std::size_t n = profile.variable_count();
  const std::uint64_t total = projective_point_count(q, n);
  const PrimeField field(q);

  struct Tally {
    std::uint64_t in_j = 0, in_p = 0, prime_only = 0, visited = 0;
    std::vector<ProjectivePoint> witnesses;
  };
  const unsigned workers = worker_count(options, total);
  std::vector<Tally> tallies(workers);
  run_chunks(total, options, workers, [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
    Tally& tally = tallies[w];
    RepresentativeCursor cursor(q, n, begin);
    for (std::uint64_t idx = begin; idx < end; ++idx, cursor.advance()) {
      ++tally.visited;
      const bool in_j = all_vanish(j_gens, cursor.point(), field);
      const bool in_p = all_vanish(p_gens, cursor.point(), field);
      tally.in_j += in_j;
      tally.in_p += in_p;
      if (in_j && !in_p) tally.witnesses.push_back(cursor.point());
      if (in_p && !in_j) ++tally.prime_only;
    }
  });

  VarietyReport report;
  report.profile = profile.sizes();
  report.q = q;
  report.seed = options.seed;
  for (auto& t : tallies) {
    report.count_J += t.in_j;
    report.count_P += t.in_p;
    report.prime_only += t.prime_only;
    report.points_enumerated += t.visited;
    report.witnesses.insert(report.witnesses.end(), t.witnesses.begin(), t.witnesses.end());
  }
  std::sort(report.witnesses.begin(), report.witnesses.end());
  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return report;
}

nlohmann::ordered_json VarietyReport::to_json() const {
  nlohmann::ordered_json j;
  j["profile"] = profile;
  j["q"] = q;
  j["count_J"] = count_J;
  j["count_P"] = count_P;
  j["witnesses"] = witnesses;
  j["seed"] = seed;
  j["elapsed_ms"] = elapsed_ms;
  j["points_enumerated"] = points_enumerated;
  j["passed"] = passed();
  return j;
}

}  // namespace rns

// Seeded property suites, run by `tropmono verify`. Each suite draws
// `samples` random cases from a generator seeded with `seed` and counts the
// cases on which every checked property holds.

#ifndef TROPMONO_VERIFY_HPP_
#define TROPMONO_VERIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tropmono {

  struct SuiteResult {
    std::string              suite;
    std::size_t              passed = 0;
    std::size_t              failed = 0;
    // Descriptions of the first few failing cases.
    std::vector<std::string> failures;
  };

  // duality, d-equals-j, regularity, idempotent-grid, group-laws,
  // oracle-agreement, ideal-order
  std::vector<std::string> const& suite_names();

  // Throws DomainError for an unknown suite name. idempotent-grid is
  // exhaustive and ignores `samples` and `seed`.
  SuiteResult run_suite(std::string_view name,
                        std::size_t      samples,
                        std::uint64_t    seed);

}  // namespace tropmono

#endif  // TROPMONO_VERIFY_HPP_

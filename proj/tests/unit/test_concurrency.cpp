#include <doctest.h>

#include <thread>

#include "blochsep/catalog.hpp"
#include "blochsep/certificates.hpp"
#include "support/test_helpers.hpp"

using namespace blochsep;

TEST_CASE("caches and pure evaluations are safe under concurrent use") {
  constexpr int kThreads = 8;
  std::vector<double> norms(kThreads, 0.0);
  std::vector<int> table_sums(kThreads, 0);
  {
    std::vector<std::thread> pool;
    for (int t = 0; t < kThreads; ++t)
      pool.emplace_back([t, &norms, &table_sums] {
        // cold caches raced on purpose: generators and character tables
        const auto& gens = generators(4 + (t % 2));
        const CharacterTable& table = character_table(6);
        int sum = 0;
        for (int c = 0; c < table.size(); ++c) sum += table.at(0, c);
        table_sums[t] = sum + static_cast<int>(gens.size());

        DensityMatrix rho = noisy_ghz(3, 0.15);
        CertificateResult r = theorem4(to_bloch(rho, Convention::Tilde));
        norms[t] = r.verdict.lhs;
      });
    for (std::thread& th : pool) th.join();
  }
  for (int t = 0; t < kThreads; ++t) {
    CHECK(norms[t] == doctest::Approx(7 * 0.15).epsilon(1e-12));
    int gens = (t % 2 == 0) ? 15 : 24;
    CHECK(table_sums[t] == 64 + gens);  // all-ones first row plus n^2-1
  }
}

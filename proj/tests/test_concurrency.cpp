#include "support.hpp"

#include <atomic>
#include <thread>

using namespace zetakit;

TEST(Concurrency, SharedCachesFromManyThreads) {
  std::vector<std::vector<std::string>> seen(8);
  std::vector<std::thread> pool;
  for (int t = 0; t < 8; ++t)
    pool.emplace_back([t, &seen] {
      for (int i = 0; i < 3; ++i) {
        for (long m = 1 + (t % 3); m <= 6; ++m) seen[t].push_back(zeta_zn_closed_poly(m).to_string());
        seen[t].push_back(bernoulli(60 + 2 * t).get_str());
      }
    });
  for (auto& th : pool) th.join();
  for (int t = 0; t < 8; ++t) {
    std::size_t i = 0;
    for (int rep = 0; rep < 3; ++rep) {
      for (long m = 1 + (t % 3); m <= 6; ++m) EXPECT_EQ(seen[t][i++], zeta_zn_closed_poly(m).to_string());
      EXPECT_EQ(seen[t][i++], bernoulli(60 + 2 * t).get_str());
    }
  }
}

TEST(Concurrency, PrecisionScopeIsPerThread) {
  std::atomic<int> failures{0};
  std::vector<std::thread> pool;
  for (long bits : {96L, 160L, 320L, 512L})
    pool.emplace_back([bits, &failures] {
      PrecisionScope scope(bits);
      for (int i = 0; i < 200; ++i) {
        if (working_bits() != bits) ++failures;
        Real x = const_pi();
        if (x.precision() != bits) ++failures;
        std::this_thread::yield();
      }
    });
  for (auto& th : pool) th.join();
  EXPECT_EQ(failures.load(), 0);
}

TEST(Concurrency, ParallelEvaluationsMatchSerial) {
  auto ctx = testing_support::ctx256();
  std::vector<std::string> serial, parallel(6);
  const char* points[] = {"0.25", "-2.3", "7.3", "0.1", "-7.5", "3.3"};
  for (const char* s : points) serial.push_back(zeta_z_closed(Real(s), ctx).value.re.to_string(70));
  std::vector<std::thread> pool;
  for (int i = 0; i < 6; ++i)
    pool.emplace_back([i, &points, &parallel, ctx] { parallel[i] = zeta_z_closed(Real(points[i]), ctx).value.re.to_string(70); });
  for (auto& th : pool) th.join();
  EXPECT_EQ(serial, parallel);
}

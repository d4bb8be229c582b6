// Acceptance run: one PASS/FAIL line per criterion, followed by the measured
// values. Exit status is nonzero if any selected criterion fails.
//
//   acceptance                 all criteria
//   acceptance --criterion 7   a single criterion

#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <string>

#include "staircase.hpp"

using namespace staircase;

namespace {

constexpr double kTimeBudgetSeconds = 60;
constexpr int kEnumerationMax = 6;
constexpr int kHistogramMax = 5;
constexpr int kBernoulliMax = 50;
constexpr int kMomentsMax = 50;
constexpr int kDiagonalMomentsFirst = 1;
constexpr int kDiagonalMomentsMax = 200;
constexpr int kPathOracleMax = 7;
constexpr int kTriangleMax = 30;
constexpr std::size_t kSeriesOrder = 12;
constexpr int kSamplerExactMax = 4;
constexpr int kChiSize = 5;
constexpr std::size_t kChiDraws = 100'000;
constexpr double kChiSignificance = 0.001;
constexpr int kKsSize = 2000;
constexpr std::size_t kKsDraws = 100'000;
constexpr double kKsThreshold = 0.01;
constexpr std::uint64_t kSeed = 20240601;
constexpr int kAsepMax = 4;
constexpr double kAsepTolerance = 1e-10;

class Censuses {
 public:
  const std::vector<EnumerationCensus>& upto(int n_max) {
    while (static_cast<int>(all_.size()) < n_max) all_.push_back(enumeration_census(static_cast<int>(all_.size()) + 1));
    slices_[n_max] = std::vector<EnumerationCensus>(all_.begin(), all_.begin() + n_max);
    return slices_[n_max];
  }

 private:
  std::vector<EnumerationCensus> all_;
  std::map<int, std::vector<EnumerationCensus>> slices_;
};

CheckResult run_criterion(int id, Censuses& censuses) {
  switch (id) {
    case 1: return check_cardinality(censuses.upto(kEnumerationMax), kTimeBudgetSeconds);
    case 2: return check_r_distribution(censuses.upto(kHistogramMax));
    case 3: return check_bernoulli(kBernoulliMax);
    case 4: return check_moments(kMomentsMax);
    case 5: return check_row_identity(censuses.upto(kHistogramMax));
    case 6: return check_diagonal_distribution(censuses.upto(kHistogramMax));
    case 7: return check_diagonal_moments(kDiagonalMomentsFirst, kDiagonalMomentsMax);
    case 8: return check_triangles(kPathOracleMax, kTriangleMax);
    case 9: return check_series(kSeriesOrder);
    case 10: return check_sampler_exactness(kSamplerExactMax);
    case 11: {
      SamplerStatsConfig cfg;
      cfg.chi_n = kChiSize;
      cfg.chi_draws = kChiDraws;
      cfg.significance = kChiSignificance;
      cfg.ks_n = kKsSize;
      cfg.ks_draws = kKsDraws;
      cfg.ks_threshold = kKsThreshold;
      cfg.seed = kSeed;
      return check_sampler_statistics(cfg);
    }
    case 12: return check_asep(kAsepMax, kAsepTolerance);
    default: throw std::invalid_argument("criterion must be in 1..12");
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      ids.push_back(std::atoi(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--criterion N]...\n";
      return 2;
    }
  }
  if (ids.empty())
    for (int id = 1; id <= 12; ++id) ids.push_back(id);

  Censuses censuses;
  bool ok = true;
  for (int id : ids) {
    CheckResult res;
    try {
      res = run_criterion(id, censuses);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << '\n';
      return 2;
    }
    ok = ok && res.pass;
    std::cout << (res.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << res.title << " ("
              << res.seconds << " s)\n";
    for (const auto& [k, v] : res.measured) std::cout << "    " << k << ": " << v << '\n';
    if (!res.detail.empty()) std::cout << "    detail: " << res.detail << '\n';
  }
  return ok ? 0 : 1;
}

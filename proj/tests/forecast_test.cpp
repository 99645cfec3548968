#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "sbs/error.hpp"
#include "sbs/forecast.hpp"

using namespace sbs;

namespace {

const std::vector<std::string> kRound1{"giachetti", "marchini", "meloni", "raggi"};
const std::vector<std::string> kParties{"fdi", "fi", "lega", "leu", "m5s", "pd"};

double sum(const std::map<std::string, double>& m) {
  double s = 0;
  for (const auto& [_, v] : m) s += v;
  return s;
}

}  // namespace

TEST(ForecastShares, SecondRoundRome) {
  const auto sbs = forecast_shares({{"raggi", 59.64}, {"giachetti", 29.95}}, Basis::sbs);
  EXPECT_NEAR(sbs.shares.at("raggi") * 100, 66.57, 0.01);
  EXPECT_NEAR(sbs.shares.at("giachetti") * 100, 33.43, 0.01);
  const auto prev = forecast_shares({{"raggi", 28.74}, {"giachetti", 15.90}}, Basis::prevalence);
  EXPECT_NEAR(prev.shares.at("raggi") * 100, 64.38, 0.01);
  EXPECT_NEAR(prev.shares.at("giachetti") * 100, 35.62, 0.01);
  EXPECT_TRUE(sbs.warnings.empty());
}

TEST(ForecastShares, EqualScoresSplitEvenly) {
  const auto f = forecast_shares({{"a", 3.3}, {"b", 3.3}}, Basis::sbs);
  EXPECT_DOUBLE_EQ(f.shares.at("a"), 0.5);
  EXPECT_DOUBLE_EQ(f.shares.at("b"), 0.5);
}

TEST(ForecastShares, ClampPolicy) {
  const std::map<std::string, double> scores{{"a", 2.0}, {"b", -1.5}, {"c", 0.0}};
  const auto clamped = forecast_shares(scores, Basis::sbs);
  EXPECT_EQ(clamped.warnings.size(), 2u);
  EXPECT_NEAR(clamped.shares.at("b"), 0.01 / 2.02, 1e-15);
  try {
    forecast_shares(scores, Basis::sbs, ClampPolicy{false, 0.01});
    FAIL();
  } catch (const NonPositiveScoreError& e) {
    EXPECT_EQ(e.offenders(), (std::vector<std::string>{"b", "c"}));
    EXPECT_NE(std::string(e.what()).find("b c"), std::string::npos);
  }
  EXPECT_NO_THROW(forecast_shares({{"a", 0.001}}, Basis::sbs, ClampPolicy{false, 0.01}));
  // Small positive scores are valid input, not clamp candidates.
  const auto small = forecast_shares({{"a", 0.003}, {"b", 0.001}}, Basis::sbs);
  EXPECT_TRUE(small.warnings.empty());
  EXPECT_DOUBLE_EQ(small.shares.at("a"), 0.75);
}

TEST(ForecastShares, SumAndScaleInvariance) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(0.01, 100.0), log_scale(-8.0, 8.0);
  for (int round = 0; round < 100; ++round) {
    std::map<std::string, double> s;
    const int n = 2 + static_cast<int>(rng() % 7);
    for (int i = 0; i < n; ++i) s["o" + std::to_string(i)] = u(rng);
    const double c = std::exp(log_scale(rng));
    auto scaled = s;
    for (auto& [_, v] : scaled) v *= c;
    const auto f = forecast_shares(s, Basis::sbs), g = forecast_shares(scaled, Basis::sbs);
    EXPECT_NEAR(sum(f.shares), 1.0, 1e-9);
    for (const auto& [k, v] : f.shares) EXPECT_NEAR(v, g.shares.at(k), 1e-12);
    EXPECT_EQ(rank_by_share(f.shares), rank_by_share(g.shares));
  }
}

TEST(AdjustActuals, PublishedElections) {
  const std::map<std::string, double> ge{{"m5s", 0.3266}, {"pd", 0.1872}, {"lega", 0.1737},
                                         {"fi", 0.1401},  {"fdi", 0.0435}, {"leu", 0.0339}, {"others", 0.0950}};
  const auto o = adjust_actuals(ge, kParties);
  EXPECT_NEAR(o.adjusted.at("m5s") * 100, 36.09, 0.01);
  EXPECT_FALSE(o.adjusted.contains("others"));
  const std::map<std::string, double> rome{
      {"raggi", 0.3526}, {"giachetti", 0.2491}, {"meloni", 0.2062}, {"marchini", 0.1100}};
  EXPECT_NEAR(adjust_actuals(rome, kRound1).adjusted.at("raggi") * 100, 38.41, 0.01);
  const std::vector<std::string> one{"raggi"};
  EXPECT_DOUBLE_EQ(adjust_actuals(rome, one).adjusted.at("raggi"), 1.0);
}

TEST(AdjustActuals, ErrorsAndIdempotence) {
  const std::vector<std::string> tracked{"a", "b"};
  EXPECT_THROW(adjust_actuals({{"a", 0.5}}, tracked), ConfigError);
  EXPECT_THROW(adjust_actuals({{"a", 0.0}, {"b", 0.0}}, tracked), ComputationError);
  const auto once = adjust_actuals({{"a", 0.3}, {"b", 0.2}, {"c", 0.5}}, tracked);
  const auto twice = adjust_actuals(once.adjusted, tracked);
  for (const auto& [k, v] : once.adjusted) EXPECT_NEAR(twice.adjusted.at(k), v, 1e-15);
  EXPECT_NEAR(sum(once.adjusted), 1.0, 1e-12);
}

TEST(Ape, ExamplesAndAsymmetry) {
  EXPECT_NEAR(ape(0.4090, 0.4250) * 100, 3.91, 0.01);
  EXPECT_NEAR(ape(0.6715, 0.6657) * 100, 0.87, 0.01);
  EXPECT_EQ(ape(0.3, 0.3), 0.0);
  EXPECT_DOUBLE_EQ(ape(1, 6), 5.0);
  EXPECT_DOUBLE_EQ(ape(40, 45), 0.125);
  EXPECT_THROW(ape(0.0, 0.1), UndefinedApeError);
}

TEST(MapeMae, DefinitionsAndSymmetry) {
  const ErrorPair p[] = {{0.4, 0.5}, {0.6, 0.5}};
  EXPECT_DOUBLE_EQ(mape(p), (0.1 / 0.4 + 0.1 / 0.6) / 2);
  EXPECT_NEAR(mae(p), 0.1, 1e-15);
  const ErrorPair q[] = {{0.5, 0.4}, {0.5, 0.6}};
  EXPECT_DOUBLE_EQ(mae(q), mae(p));  // MAE symmetric, MAPE not
  EXPECT_NE(mape(q), mape(p));
  const ErrorPair same[] = {{0.2, 0.2}, {0.8, 0.8}};
  EXPECT_EQ(mape(same), 0.0);
  EXPECT_EQ(mae(same), 0.0);
  EXPECT_THROW(mape(std::span<const ErrorPair>{}), ComputationError);
  EXPECT_THROW(mae(std::span<const ErrorPair>{}), ComputationError);
}

TEST(MapeMae, PublishedBlocks) {
  const ErrorPair rome[] = {{0.3841, 0.3519}, {0.2714, 0.2969}, {0.2246, 0.1969}, {0.1198, 0.1543}};
  EXPECT_NEAR(mae(rome) * 100, 3.00, 0.02);
  const ErrorPair ge[] = {{0.3609, 0.2626}, {0.2069, 0.1974}, {0.1919, 0.1813},
                          {0.1548, 0.2726}, {0.0481, 0.0473}, {0.0375, 0.0387}};
  EXPECT_NEAR(mae(ge) * 100, 3.97, 0.02);
}

TEST(RankCompare, GeneralElectionSwap) {
  const std::map<std::string, double> real{{"m5s", 0.3609}, {"pd", 0.2069}, {"lega", 0.1919},
                                           {"fi", 0.1548},  {"fdi", 0.0481}, {"leu", 0.0375}};
  const std::map<std::string, double> fc{{"m5s", 0.2626}, {"pd", 0.1974}, {"lega", 0.1813},
                                         {"fi", 0.2726},  {"fdi", 0.0473}, {"leu", 0.0387}};
  const auto r = rank_compare(real, fc);
  EXPECT_EQ(r.n_misranked, 4);
  EXPECT_EQ(r.real.at("m5s"), 1);
  EXPECT_EQ(r.forecast.at("m5s"), 2);
  EXPECT_EQ(r.forecast.at("fi"), 1);
  EXPECT_EQ(r.forecast.at("lega"), 4);
}

TEST(RankCompare, SimpleCasesAndTies) {
  EXPECT_EQ(rank_compare({{"a", 0.6}, {"b", 0.4}}, {{"a", 0.7}, {"b", 0.3}}).n_misranked, 0);
  EXPECT_EQ(rank_compare({{"a", 0.6}, {"b", 0.4}}, {{"a", 0.3}, {"b", 0.7}}).n_misranked, 2);
  const auto ties = rank_by_share({{"zeta", 0.5}, {"alpha", 0.5}});
  EXPECT_EQ(ties.at("alpha"), 1);
  EXPECT_EQ(ties.at("zeta"), 2);
  EXPECT_THROW(rank_compare({{"a", 1.0}}, {{"b", 1.0}}), ConfigError);
}

TEST(RankCompare, InvariantUnderMonotoneTransform) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int round = 0; round < 50; ++round) {
    std::map<std::string, double> a, b, ta, tb;
    for (int i = 0; i < 5; ++i) {
      const auto k = "o" + std::to_string(i);
      a[k] = u(rng);
      b[k] = u(rng);
      ta[k] = std::exp(3 * a[k]) + 1;
      tb[k] = std::exp(3 * b[k]) + 1;
    }
    const auto r = rank_compare(a, b), t = rank_compare(ta, tb);
    EXPECT_EQ(r.real, t.real);
    EXPECT_EQ(r.forecast, t.forecast);
    EXPECT_EQ(r.n_misranked, t.n_misranked);
  }
}

TEST(PollAverage, MeansAndRenormalization) {
  const Date d = Date::parse("2016-05-20");
  const std::vector<std::string> one{"a"};
  const std::vector<PollRecord> two{{d, "a", 0.40}, {d + 1, "a", 0.42}};
  // A single tracked option renormalizes to 1, so check the raw mean through two options.
  EXPECT_DOUBLE_EQ(poll_average(two, one)->at("a"), 1.0);
  const std::vector<std::string> ab{"a", "b"};
  const std::vector<PollRecord> single{{d, "a", 0.3}, {d, "b", 0.3}, {d, "other", 0.4}};
  EXPECT_DOUBLE_EQ(poll_average(single, ab)->at("a"), 0.5);

  // Three polls, averaged by hand: a = (40+42+41)/3 = 41, b = (30+31+35)/3 = 32.
  const std::vector<PollRecord> three{{d, "a", 0.40}, {d, "b", 0.30}, {d, "x", 0.30}, {d + 1, "a", 0.42},
                                      {d + 1, "b", 0.31}, {d + 2, "a", 0.41}, {d + 2, "b", 0.35}};
  const auto avg = poll_average(three, ab);
  ASSERT_TRUE(avg);
  EXPECT_NEAR(avg->at("a"), 0.41 / 0.73, 1e-12);
  EXPECT_NEAR(avg->at("b"), 0.32 / 0.73, 1e-12);
  EXPECT_FALSE(poll_average({}, ab));
  EXPECT_FALSE(poll_average(two, ab));  // b never polled
}

TEST(PollAverage, WeeklySelection) {
  const Date vote = Date::parse("2016-06-05");
  const std::vector<std::string> ab{"a", "b"};
  const std::vector<PollRecord> polls{{Date::parse("2016-05-23"), "a", 0.6}, {Date::parse("2016-05-23"), "b", 0.4},
                                      {Date::parse("2016-05-29"), "a", 0.4}, {Date::parse("2016-05-29"), "b", 0.6},
                                      {Date::parse("2016-05-30"), "a", 0.9}, {Date::parse("2016-05-30"), "b", 0.1}};
  const auto w21 = average_polls(polls, week_of(Date::parse("2016-05-25"), vote), vote, ab);
  ASSERT_TRUE(w21);
  EXPECT_EQ(w21->basis, Basis::poll_average);
  EXPECT_NEAR(w21->shares.at("a"), 0.5, 1e-12);
  EXPECT_FALSE(average_polls(polls, week_of(Date::parse("2016-05-10"), vote), vote, ab));
}

TEST(PollCsv, ReadsAndValidates) {
  std::istringstream ok("date,option,share\n2016-05-20,raggi,0.31\n2016-05-20,giachetti,0.25\n");
  const auto p = read_polls_csv(ok);
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p[1].option, "giachetti");
  std::istringstream pct("date,option,share\n2016-05-20,raggi,31\n");
  EXPECT_THROW(read_polls_csv(pct), ParseError);
  std::istringstream bad_date("date,option,share\n20-05-2016,raggi,0.3\n");
  EXPECT_THROW(read_polls_csv(bad_date), ParseError);
}

TEST(Evaluate, ReportInvariants) {
  const auto outcome = adjust_actuals({{"a", 0.45}, {"b", 0.35}, {"c", 0.10}, {"d", 0.10}},
                                      std::vector<std::string>{"a", "b", "c"});
  const auto f = forecast_shares({{"a", 5.0}, {"b", 3.0}, {"c", 4.0}}, Basis::diversity);
  const auto r = evaluate(f, outcome);
  ASSERT_EQ(r.rows.size(), 3u);
  double ape_sum = 0, ae_sum = 0;
  std::vector<int> real, fc;
  for (const auto& row : r.rows) {
    ape_sum += row.ape;
    ae_sum += row.abs_error;
    real.push_back(row.real_rank);
    fc.push_back(row.forecast_rank);
    EXPECT_DOUBLE_EQ(row.abs_error, std::abs(row.adjusted_actual - row.forecast));
  }
  EXPECT_DOUBLE_EQ(r.mape, ape_sum / 3);
  EXPECT_DOUBLE_EQ(r.mae, ae_sum / 3);
  EXPECT_EQ(real, (std::vector<int>{1, 2, 3}));
  std::sort(fc.begin(), fc.end());
  EXPECT_EQ(fc, (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(r.basis, Basis::diversity);
  EXPECT_EQ(r.n_misranked, 2);
}

TEST(Basis, Names) {
  for (Basis b : {Basis::sbs, Basis::prevalence, Basis::diversity, Basis::connectivity, Basis::poll_average})
    EXPECT_EQ(parse_basis(to_string(b)), b);
  EXPECT_THROW(parse_basis("vibes"), ConfigError);
}

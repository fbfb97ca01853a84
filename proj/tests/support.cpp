#include "support.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include "cwts/fft.hpp"
#include "cwts/synthetic.hpp"
#include "cwts/util.hpp"

namespace testsupport {

using cwts::Date;

namespace {

bool is_leap(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

int days_in_month(int y, int m) {
  static const int d[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  return (m == 2 && is_leap(y)) ? 29 : d[m - 1];
}

Date add_days(Date d, int n) {
  while (n > 0) {
    if (++d.day > days_in_month(d.year, d.month)) {
      d.day = 1;
      if (++d.month > 12) {
        d.month = 1;
        ++d.year;
      }
    }
    --n;
  }
  while (n < 0) {
    if (--d.day < 1) {
      if (--d.month < 1) {
        d.month = 12;
        --d.year;
      }
      d.day = days_in_month(d.year, d.month);
    }
    ++n;
  }
  return d;
}

// Sakamoto's method, 0 = Sunday.
int weekday(const Date& d) {
  static const int t[] = {0, 3, 2, 5, 0, 3, 5, 1, 4, 6, 2, 4};
  int y = d.year - (d.month < 3 ? 1 : 0);
  return (y + y / 4 - y / 100 + y / 400 + t[d.month - 1] + d.day) % 7;
}

// Anonymous Gregorian computus.
Date easter_sunday(int y) {
  int a = y % 19, b = y / 100, c = y % 100;
  int d = b / 4, e = b % 4, f = (b + 8) / 25, g = (b - f + 1) / 3;
  int h = (19 * a + b - d - g + 15) % 30;
  int i = c / 4, k = c % 4;
  int l = (32 + 2 * e + 2 * i - h - k) % 7;
  int m = (a + 11 * h + 22 * l) / 451;
  int month = (h + l - 7 * m + 114) / 31;
  int day = ((h + l - 7 * m + 114) % 31) + 1;
  return Date{y, month, day};
}

Date nth_weekday_of_month(int y, int m, int wd, int nth) {
  Date d{y, m, 1};
  int count = 0;
  while (true) {
    if (weekday(d) == wd && ++count == nth) return d;
    d = add_days(d, 1);
  }
}

Date last_weekday_of_month(int y, int m, int wd) {
  Date d{y, m, days_in_month(y, m)};
  while (weekday(d) != wd) d = add_days(d, -1);
  return d;
}

Date observed(Date d) {
  int wd = weekday(d);
  if (wd == 6) return add_days(d, -1);  // Saturday -> Friday
  if (wd == 0) return add_days(d, 1);   // Sunday -> Monday
  return d;
}

std::set<Date> holidays(int y) {
  std::set<Date> h;
  h.insert(observed(Date{y, 1, 1}));
  h.insert(nth_weekday_of_month(y, 1, 1, 3));   // MLK: 3rd Monday of January
  h.insert(nth_weekday_of_month(y, 2, 1, 3));   // Presidents: 3rd Monday of February
  h.insert(add_days(easter_sunday(y), -2));     // Good Friday
  h.insert(last_weekday_of_month(y, 5, 1));     // Memorial: last Monday of May
  h.insert(observed(Date{y, 7, 4}));
  h.insert(nth_weekday_of_month(y, 9, 1, 1));   // Labor: 1st Monday of September
  h.insert(nth_weekday_of_month(y, 11, 4, 4));  // Thanksgiving: 4th Thursday of November
  h.insert(observed(Date{y, 12, 25}));
  return h;
}

}  // namespace

std::vector<Date> trading_calendar(const Date& from, const Date& to) {
  std::set<Date> closed;
  for (int y = from.year; y <= to.year; ++y) {
    auto h = holidays(y);
    closed.insert(h.begin(), h.end());
  }
  std::vector<Date> days;
  for (Date d = from; d <= to; d = add_days(d, 1)) {
    int wd = weekday(d);
    if (wd == 0 || wd == 6) continue;
    if (closed.count(d)) continue;
    days.push_back(d);
  }
  return days;
}

namespace {

std::vector<double> band_noise(std::size_t len, double min_period, double max_period,
                               cwts::GaussianRng& rng) {
  cwts::FftPlan plan(len);
  cwts::FftBuffer in(len), freq(len), out(len);
  for (std::size_t i = 0; i < len; ++i) {
    in.get()[i][0] = rng();
    in.get()[i][1] = 0.0;
  }
  plan.forward(in.get(), freq.get());
  for (std::size_t k = 0; k < len; ++k) {
    std::size_t k_eff = std::min(k, len - k);
    bool keep = false;
    if (k_eff > 0) {
      double period = static_cast<double>(len) / static_cast<double>(k_eff);
      keep = period >= min_period && period <= max_period;
    }
    if (!keep) freq.get()[k][0] = freq.get()[k][1] = 0.0;
  }
  plan.backward(freq.get(), out.get());
  std::vector<double> b(len);
  double inv = 1.0 / static_cast<double>(len);
  for (std::size_t i = 0; i < len; ++i) b[i] = out.get()[i][0] * inv;
  double m = mean(b), sd = std::sqrt(variance(b));
  for (auto& v : b) v = (v - m) / sd;
  return b;
}

}  // namespace

std::string index_like_ohlc_csv(std::uint64_t seed) {
  auto days = trading_calendar(Date{2000, 1, 3}, Date{2013, 5, 31});
  const std::size_t n = days.size();

  auto sigma_for = [](const Date& d) {
    if (d <= Date{2002, 12, 31}) return 0.020;
    if (d <= Date{2008, 6, 30}) return 0.008;
    if (d <= Date{2008, 8, 31}) return 0.012;
    if (d <= Date{2008, 12, 31}) return 0.011;
    if (d <= Date{2009, 5, 31}) return 0.016;
    if (d <= Date{2011, 6, 30}) return 0.010;
    if (d <= Date{2011, 12, 31}) return 0.015;
    return 0.009;
  };

  cwts::GaussianRng rng(seed);
  const double phi = 0.08;
  std::vector<double> r(n);
  double x = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    x = phi * x + sigma_for(days[i]) * rng();
    r[i] = x;
  }

  auto window = [&](const Date& lo, const Date& hi) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) {
      if (days[i] >= lo && days[i] <= hi) idx.push_back(i);
    }
    return idx;
  };

  // The crisis signature: broadband high-frequency energy Sep-Dec 2008.
  {
    cwts::GaussianRng crisis(cwts::mix_seed(seed, 1));
    auto idx = window(Date{2008, 9, 1}, Date{2008, 12, 31});
    auto b = band_noise(idx.size(), 2.0, 16.0, crisis);
    for (std::size_t i = 0; i < idx.size(); ++i) r[idx[i]] += 0.033 * b[i];
  }
  // A milder echo in the second half of 2011.
  {
    cwts::GaussianRng echo(cwts::mix_seed(seed, 2));
    auto idx = window(Date{2011, 8, 1}, Date{2011, 11, 30});
    auto b = band_noise(idx.size(), 2.0, 8.0, echo);
    for (std::size_t i = 0; i < idx.size(); ++i) r[idx[i]] += 0.012 * b[i];
  }

  cwts::ReturnSeries series;
  series.values = std::move(r);
  series.timestamps = days;
  series.source_symbol = "IXIC-like";
  return ohlc_from_returns(series);
}

std::string ohlc_from_returns(const cwts::ReturnSeries& series, double base_price) {
  std::string out = "Date,Open,High,Low,Close\n";
  double close = base_price;
  for (std::size_t i = 0; i < series.size(); ++i) {
    double open = close;
    close = open * std::exp(series.values[i]);
    double hi = std::max(open, close) * 1.002;
    double lo = std::min(open, close) * 0.998;
    out += cwts::to_string(series.timestamps[i]) + "," + cwts::format_double(open) + "," +
           cwts::format_double(hi) + "," + cwts::format_double(lo) + "," +
           cwts::format_double(close) + "\n";
  }
  return out;
}

double simpson(const std::function<double(double)>& f, double a, double b, std::size_t halves) {
  std::size_t m = 2 * halves;
  double h = (b - a) / static_cast<double>(m);
  double sum = f(a) + f(b);
  for (std::size_t i = 1; i < m; ++i) {
    sum += f(a + h * static_cast<double>(i)) * (i % 2 == 1 ? 4.0 : 2.0);
  }
  return h / 3.0 * sum;
}

namespace {

// Regularized lower incomplete gamma P(a, x) by series (x < a+1) or
// continued fraction (x >= a+1). Press et al. style.
double gamma_p(double a, double x) {
  if (x <= 0.0) return 0.0;
  double gln = std::lgamma(a);
  if (x < a + 1.0) {
    double ap = a, sum = 1.0 / a, del = sum;
    for (int i = 0; i < 500; ++i) {
      ap += 1.0;
      del *= x / ap;
      sum += del;
      if (std::abs(del) < std::abs(sum) * 1e-15) break;
    }
    return sum * std::exp(-x + a * std::log(x) - gln);
  }
  double b = x + 1.0 - a, c = 1e300, d = 1.0 / b, h = d;
  for (int i = 1; i < 500; ++i) {
    double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < 1e-300) d = 1e-300;
    c = b + an / c;
    if (std::abs(c) < 1e-300) c = 1e-300;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-15) break;
  }
  return 1.0 - std::exp(-x + a * std::log(x) - gln) * h;
}

}  // namespace

double chi2_quantile_oracle(double p, double nu) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p in (0,1)");
  double lo = 0.0, hi = 1.0;
  while (gamma_p(nu / 2.0, hi / 2.0) < p) hi *= 2.0;
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    if (gamma_p(nu / 2.0, mid / 2.0) < p) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double mean(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m += x;
  return m / static_cast<double>(v.size());
}

double variance(const std::vector<double>& v) {
  double m = mean(v), acc = 0.0;
  for (double x : v) acc += (x - m) * (x - m);
  return acc / static_cast<double>(v.size());
}

double lag1_autocorr(const std::vector<double>& v) {
  double m = mean(v), num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    double d = v[i] - m;
    den += d * d;
    if (i > 0) num += d * (v[i - 1] - m);
  }
  return num / den;
}

}  // namespace testsupport

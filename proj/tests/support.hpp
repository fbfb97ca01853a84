#pragma once

// Shared fixtures and independent numeric oracles for the test suites.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cwts/data_io.hpp"

namespace testsupport {

// US trading days: weekdays minus the computable NYSE holidays (New Year,
// MLK, Presidents, Good Friday, Memorial, July 4, Labor, Thanksgiving,
// Christmas; weekend holidays observed Fri/Mon).
std::vector<cwts::Date> trading_calendar(const cwts::Date& from, const cwts::Date& to);

// Daily OHLC fixture shaped like a large index across 2000-2013: elevated
// volatility through 2002, a calm 2003 - mid-2008 stretch, a strong
// high-frequency burst September-December 2008, an echo in late 2011.
// Returns a CSV string with the default Date/Open/High/Low/Close schema.
std::string index_like_ohlc_csv(std::uint64_t seed = 20080915);

// Wraps a return series into OHLC rows with open_t = close_{t-1}.
std::string ohlc_from_returns(const cwts::ReturnSeries& series, double base_price = 2500.0);

// Composite Simpson on [a, b].
double simpson(const std::function<double(double)>& f, double a, double b, std::size_t halves);

// Chi-square quantile by bisection on the regularized incomplete gamma CDF.
// Independent of the closed form used by the library.
double chi2_quantile_oracle(double p, double nu);

double mean(const std::vector<double>& v);
double variance(const std::vector<double>& v);  // population (1/n)
double lag1_autocorr(const std::vector<double>& v);

}  // namespace testsupport

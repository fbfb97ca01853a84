#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace cwts {

struct Date {
  int year = 0;
  int month = 0;
  int day = 0;

  auto operator<=>(const Date&) const = default;
};

Date parse_date(const std::string& s);  // strict YYYY-MM-DD
std::string to_string(const Date& d);

struct OhlcRecord {
  Date date;
  double open = 0;
  double high = 0;
  double low = 0;
  double close = 0;
};

// Daily log returns r_t = log(close_t) - log(open_t). Note: open-to-close,
// not the more common close-to-close; both prices are from the same day.
struct ReturnSeries {
  std::vector<double> values;
  std::vector<Date> timestamps;  // strictly increasing, one per value
  std::string source_symbol;

  std::size_t size() const { return values.size(); }
};

struct CsvSchema {
  std::string date = "Date";
  std::string open = "Open";
  std::string high = "High";
  std::string low = "Low";
  std::string close = "Close";
};

struct OhlcParse {
  std::vector<OhlcRecord> records;  // sorted by date ascending
  std::size_t dropped_rows = 0;     // rows with missing/invalid prices
};

// Parses comma-separated OHLC data with a header row. Rows with missing or
// unparseable prices, non-positive prices, or high/low inconsistent with
// open/close are dropped and counted. Duplicate dates are an error.
OhlcParse parse_ohlc_csv(const std::string& bytes, const CsvSchema& schema = {});

std::string serialize_ohlc_csv(const std::vector<OhlcRecord>& records,
                               const CsvSchema& schema = {});

// Errors if any price is non-positive or any |r_t| >= 1 (a >170% single-day
// move is treated as a data error). Input order does not matter; records are
// sorted by date internally.
ReturnSeries log_returns(const std::vector<OhlcRecord>& records,
                         const std::string& symbol = "");

// GET the URL body with exponential backoff between attempts (250ms base,
// doubling). Fails closed: non-200 or exhausted retries throw NetworkError
// carrying the last HTTP status (0 for transport failures).
std::string fetch_csv(const std::string& url, double timeout_seconds = 30.0,
                      int retries = 2);

// Two-column returns CSV: "date,log_return" at full precision.
std::string serialize_returns_csv(const ReturnSeries& series);
ReturnSeries parse_returns_csv(const std::string& bytes, const std::string& symbol = "");

// Consecutive calendar dates starting 2000-01-01, for generated series.
std::vector<Date> synthetic_dates(std::size_t n);

}  // namespace cwts

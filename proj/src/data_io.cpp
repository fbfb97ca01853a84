#include "cwts/data_io.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>

#include <httplib.h>

#include "cwts/errors.hpp"
#include "cwts/util.hpp"

namespace cwts {

namespace {

bool is_leap(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

int days_in_month(int y, int m) {
  static const int d[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (m == 2 && is_leap(y)) return 29;
  return d[m - 1];
}

Date next_day(Date d) {
  if (++d.day > days_in_month(d.year, d.month)) {
    d.day = 1;
    if (++d.month > 12) {
      d.month = 1;
      ++d.year;
    }
  }
  return d;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  for (char c : line) {
    if (c == ',') {
      out.push_back(field);
      field.clear();
    } else if (c != '\r') {
      field.push_back(c);
    }
  }
  out.push_back(field);
  return out;
}

std::vector<std::string> split_lines(const std::string& bytes) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : bytes) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

bool try_parse_price(const std::string& s, double& out) {
  if (s.empty()) return false;
  try {
    out = parse_double(s);
  } catch (const InputError&) {
    return false;
  }
  return std::isfinite(out) && out > 0.0;
}

}  // namespace

Date parse_date(const std::string& s) {
  int y = 0, m = 0, d = 0;
  char sep1 = 0, sep2 = 0;
  std::istringstream in(s);
  in >> y >> sep1 >> m >> sep2 >> d;
  if (!in || sep1 != '-' || sep2 != '-' || m < 1 || m > 12 || d < 1 ||
      d > days_in_month(y, m)) {
    throw InputError("data-io", "bad date '" + s + "' (expected YYYY-MM-DD)");
  }
  return Date{y, m, d};
}

std::string to_string(const Date& d) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", d.year, d.month, d.day);
  return buf;
}

OhlcParse parse_ohlc_csv(const std::string& bytes, const CsvSchema& schema) {
  auto lines = split_lines(bytes);
  if (lines.empty()) throw InputError("data-io", "empty input, no header row");

  auto header = split_csv_line(lines[0]);
  auto find_col = [&](const std::string& name) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (lower(header[i]) == lower(name)) return static_cast<std::ptrdiff_t>(i);
    }
    return static_cast<std::ptrdiff_t>(-1);
  };
  std::ptrdiff_t c_date = find_col(schema.date), c_open = find_col(schema.open),
                 c_high = find_col(schema.high), c_low = find_col(schema.low),
                 c_close = find_col(schema.close);
  if (c_date < 0 || c_open < 0 || c_high < 0 || c_low < 0 || c_close < 0) {
    throw InputError("data-io", "header is missing a configured column (have: " + lines[0] + ")");
  }

  OhlcParse result;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    auto fields = split_csv_line(lines[i]);
    auto need = static_cast<std::size_t>(std::max({c_date, c_open, c_high, c_low, c_close}));
    if (fields.size() <= need) {
      ++result.dropped_rows;
      continue;
    }
    OhlcRecord rec;
    try {
      rec.date = parse_date(fields[static_cast<std::size_t>(c_date)]);
    } catch (const InputError&) {
      ++result.dropped_rows;
      continue;
    }
    if (!try_parse_price(fields[static_cast<std::size_t>(c_open)], rec.open) ||
        !try_parse_price(fields[static_cast<std::size_t>(c_high)], rec.high) ||
        !try_parse_price(fields[static_cast<std::size_t>(c_low)], rec.low) ||
        !try_parse_price(fields[static_cast<std::size_t>(c_close)], rec.close) ||
        rec.low > std::min(rec.open, rec.close) || rec.high < std::max(rec.open, rec.close)) {
      ++result.dropped_rows;
      continue;
    }
    result.records.push_back(rec);
  }
  if (result.records.empty()) {
    throw InputError("data-io", "no parsable data rows");
  }
  std::stable_sort(result.records.begin(), result.records.end(),
                   [](const OhlcRecord& a, const OhlcRecord& b) { return a.date < b.date; });
  for (std::size_t i = 1; i < result.records.size(); ++i) {
    if (result.records[i].date == result.records[i - 1].date) {
      throw InputError("data-io", "duplicate date " + to_string(result.records[i].date));
    }
  }
  return result;
}

std::string serialize_ohlc_csv(const std::vector<OhlcRecord>& records,
                               const CsvSchema& schema) {
  std::string out = schema.date + "," + schema.open + "," + schema.high + "," + schema.low +
                    "," + schema.close + "\n";
  for (const auto& r : records) {
    out += to_string(r.date) + "," + format_double(r.open) + "," + format_double(r.high) +
           "," + format_double(r.low) + "," + format_double(r.close) + "\n";
  }
  return out;
}

ReturnSeries log_returns(const std::vector<OhlcRecord>& records, const std::string& symbol) {
  if (records.empty()) throw InputError("data-io", "no records to compute returns from");
  auto sorted = records;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const OhlcRecord& a, const OhlcRecord& b) { return a.date < b.date; });
  ReturnSeries series;
  series.source_symbol = symbol;
  series.values.reserve(sorted.size());
  series.timestamps.reserve(sorted.size());
  for (const auto& r : sorted) {
    if (!(r.open > 0.0) || !(r.close > 0.0)) {
      throw InputError("data-io", "non-positive price on " + to_string(r.date));
    }
    double ret = std::log(r.close) - std::log(r.open);
    if (!(std::abs(ret) < 1.0)) {
      throw InputError("data-io", "implausible single-day return on " + to_string(r.date) +
                                      " (|log return| >= 1)");
    }
    series.values.push_back(ret);
    series.timestamps.push_back(r.date);
  }
  return series;
}

std::string fetch_csv(const std::string& url, double timeout_seconds, int retries) {
  std::string scheme, host_port, path;
  auto pos = url.find("://");
  if (pos == std::string::npos) {
    throw InputError("data-io", "URL must start with http:// or https://");
  }
  scheme = url.substr(0, pos);
  if (scheme != "http" && scheme != "https") {
    throw InputError("data-io", "unsupported URL scheme '" + scheme + "'");
  }
  auto rest = url.substr(pos + 3);
  auto slash = rest.find('/');
  host_port = rest.substr(0, slash);
  path = (slash == std::string::npos) ? "/" : rest.substr(slash);

  int last_status = 0;
  std::string last_error = "connection failed";
  int attempts = retries + 1;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    if (attempt > 0) {
      auto backoff = std::chrono::milliseconds(250LL << (attempt - 1));
      std::this_thread::sleep_for(backoff);
    }
    httplib::Client client((scheme + "://" + host_port).c_str());
    auto secs = static_cast<time_t>(timeout_seconds);
    auto usecs = static_cast<time_t>((timeout_seconds - static_cast<double>(secs)) * 1e6);
    client.set_connection_timeout(secs, usecs);
    client.set_read_timeout(secs, usecs);
    client.set_follow_location(true);
    auto res = client.Get(path.c_str());
    if (res && res->status == 200) {
      return res->body;
    }
    if (res) {
      last_status = res->status;
      last_error = "HTTP status " + std::to_string(res->status);
    } else {
      last_status = 0;
      last_error = httplib::to_string(res.error());
    }
  }
  throw NetworkError("data-io",
                     "fetch failed after " + std::to_string(attempts) + " attempts: " + last_error,
                     last_status);
}

std::string serialize_returns_csv(const ReturnSeries& series) {
  std::string out = "date,log_return\n";
  for (std::size_t i = 0; i < series.size(); ++i) {
    out += to_string(series.timestamps[i]) + "," + format_double(series.values[i]) + "\n";
  }
  return out;
}

ReturnSeries parse_returns_csv(const std::string& bytes, const std::string& symbol) {
  auto lines = split_lines(bytes);
  if (lines.empty() || lower(lines[0]) != "date,log_return") {
    throw InputError("data-io", "returns CSV must start with 'date,log_return'");
  }
  ReturnSeries series;
  series.source_symbol = symbol;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    auto fields = split_csv_line(lines[i]);
    if (fields.size() != 2) {
      throw InputError("data-io", "bad returns row: '" + lines[i] + "'");
    }
    series.timestamps.push_back(parse_date(fields[0]));
    series.values.push_back(parse_double(fields[1]));
  }
  if (series.values.empty()) throw InputError("data-io", "returns CSV has no rows");
  return series;
}

std::vector<Date> synthetic_dates(std::size_t n) {
  std::vector<Date> dates;
  dates.reserve(n);
  Date d{2000, 1, 1};
  for (std::size_t i = 0; i < n; ++i) {
    dates.push_back(d);
    d = next_day(d);
  }
  return dates;
}

}  // namespace cwts

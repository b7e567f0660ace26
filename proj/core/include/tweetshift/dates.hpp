#pragma once

#include <cstdint>
#include <string>

namespace tweetshift {

// Calendar date plus day arithmetic. Stored as days since 1970-01-01 (UTC)
// so differences and offsets are plain integer math.
struct Date {
  std::int64_t days_since_epoch = 0;

  auto operator<=>(const Date&) const = default;

  Date plus_days(std::int64_t n) const { return Date{days_since_epoch + n}; }
  std::int64_t operator-(const Date& o) const {
    return days_since_epoch - o.days_since_epoch;
  }
};

// UTC instant with second resolution.
struct Timestamp {
  std::int64_t seconds_since_epoch = 0;

  auto operator<=>(const Timestamp&) const = default;

  Date utc_date() const {
    // floor division; timestamps before 1970 round toward earlier days
    std::int64_t s = seconds_since_epoch;
    std::int64_t d = s / 86400;
    if (s % 86400 < 0) --d;
    return Date{d};
  }
};

Date make_date(int year, unsigned month, unsigned day);
void civil_from_date(Date d, int& year, unsigned& month, unsigned& day);

// "YYYY-MM-DD"
Date parse_date(const std::string& s);
std::string format_date(Date d);

// ISO-8601: "YYYY-MM-DDTHH:MM:SS" with optional fraction and "Z" or
// "+hh:mm"/"-hh:mm" offset. A bare date parses as midnight UTC.
Timestamp parse_iso8601(const std::string& s);
std::string format_iso8601(Timestamp t);

}  // namespace tweetshift

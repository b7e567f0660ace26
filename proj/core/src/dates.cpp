#include "tweetshift/dates.hpp"

#include <cctype>
#include <cstdio>

#include "tweetshift/errors.hpp"

namespace tweetshift {

namespace {

// Howard Hinnant's days-from-civil algorithm, valid far beyond any tweet.
std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, std::int64_t& y, unsigned& m, unsigned& d) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  y = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  d = doy - (153 * mp + 2) / 5 + 1;
  m = mp + (mp < 10 ? 3 : -9);
  y += m <= 2;
}

bool read_int(const std::string& s, std::size_t& pos, int digits, int& out) {
  int v = 0;
  for (int i = 0; i < digits; ++i) {
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      return false;
    v = v * 10 + (s[pos] - '0');
    ++pos;
  }
  out = v;
  return true;
}

}  // namespace

Date make_date(int year, unsigned month, unsigned day) {
  return Date{days_from_civil(year, month, day)};
}

void civil_from_date(Date d, int& year, unsigned& month, unsigned& day) {
  std::int64_t y;
  civil_from_days(d.days_since_epoch, y, month, day);
  year = static_cast<int>(y);
}

Date parse_date(const std::string& s) {
  std::size_t pos = 0;
  int y, m, d;
  if (!read_int(s, pos, 4, y) || pos >= s.size() || s[pos] != '-') {
    throw ParseError("bad date: '" + s + "'");
  }
  ++pos;
  if (!read_int(s, pos, 2, m) || pos >= s.size() || s[pos] != '-') {
    throw ParseError("bad date: '" + s + "'");
  }
  ++pos;
  if (!read_int(s, pos, 2, d) || pos != s.size()) {
    throw ParseError("bad date: '" + s + "'");
  }
  if (m < 1 || m > 12 || d < 1 || d > 31) {
    throw ParseError("date out of range: '" + s + "'");
  }
  return make_date(y, static_cast<unsigned>(m), static_cast<unsigned>(d));
}

std::string format_date(Date d) {
  int y;
  unsigned m, dd;
  civil_from_date(d, y, m, dd);
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", y, m, dd);
  return buf;
}

Timestamp parse_iso8601(const std::string& s) {
  std::size_t pos = 0;
  int y, mo, d;
  if (!read_int(s, pos, 4, y) || pos >= s.size() || s[pos] != '-')
    throw ParseError("bad timestamp: '" + s + "'");
  ++pos;
  if (!read_int(s, pos, 2, mo) || pos >= s.size() || s[pos] != '-')
    throw ParseError("bad timestamp: '" + s + "'");
  ++pos;
  if (!read_int(s, pos, 2, d)) throw ParseError("bad timestamp: '" + s + "'");
  if (mo < 1 || mo > 12 || d < 1 || d > 31)
    throw ParseError("timestamp out of range: '" + s + "'");

  std::int64_t secs = days_from_civil(y, static_cast<unsigned>(mo),
                                      static_cast<unsigned>(d)) * 86400;
  if (pos == s.size()) return Timestamp{secs};

  if (s[pos] != 'T' && s[pos] != 't' && s[pos] != ' ')
    throw ParseError("bad timestamp: '" + s + "'");
  ++pos;
  int hh, mm, ss;
  if (!read_int(s, pos, 2, hh) || pos >= s.size() || s[pos] != ':')
    throw ParseError("bad timestamp: '" + s + "'");
  ++pos;
  if (!read_int(s, pos, 2, mm) || pos >= s.size() || s[pos] != ':')
    throw ParseError("bad timestamp: '" + s + "'");
  ++pos;
  if (!read_int(s, pos, 2, ss)) throw ParseError("bad timestamp: '" + s + "'");
  if (hh > 23 || mm > 59 || ss > 60)
    throw ParseError("timestamp out of range: '" + s + "'");
  secs += hh * 3600 + mm * 60 + ss;

  // fractional seconds are accepted and dropped
  if (pos < s.size() && s[pos] == '.') {
    ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  if (pos == s.size()) return Timestamp{secs};

  const char c = s[pos];
  if (c == 'Z' || c == 'z') {
    ++pos;
  } else if (c == '+' || c == '-') {
    ++pos;
    int oh, om = 0;
    if (!read_int(s, pos, 2, oh)) throw ParseError("bad offset: '" + s + "'");
    if (pos < s.size() && s[pos] == ':') ++pos;
    if (pos < s.size()) {
      if (!read_int(s, pos, 2, om)) throw ParseError("bad offset: '" + s + "'");
    }
    const std::int64_t off = oh * 3600 + om * 60;
    secs += (c == '+') ? -off : off;
  }
  if (pos != s.size()) throw ParseError("trailing data in timestamp: '" + s + "'");
  return Timestamp{secs};
}

std::string format_iso8601(Timestamp t) {
  Date day = t.utc_date();
  std::int64_t rem = t.seconds_since_epoch - day.days_since_epoch * 86400;
  int y;
  unsigned m, d;
  civil_from_date(day, y, m, d);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02d:%02d:%02dZ", y, m, d,
                static_cast<int>(rem / 3600), static_cast<int>(rem / 60 % 60),
                static_cast<int>(rem % 60));
  return buf;
}

}  // namespace tweetshift

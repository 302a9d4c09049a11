#include "extrukit/datetime.hpp"

#include <cctype>

namespace extrukit {

namespace {

// Days since 1970-01-01 for a proleptic Gregorian date.
std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

bool is_leap(std::int64_t y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

unsigned days_in_month(std::int64_t y, unsigned m) {
  static const unsigned lengths[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (m == 2 && is_leap(y)) return 29;
  return lengths[m - 1];
}

}  // namespace

std::optional<std::int64_t> parse_date_time_millis(const std::string& lex) {
  std::size_t i = 0;
  auto digits = [&](int count, std::int64_t& out) -> bool {
    out = 0;
    for (int k = 0; k < count; ++k, ++i) {
      if (i >= lex.size() || !std::isdigit(static_cast<unsigned char>(lex[i]))) return false;
      out = out * 10 + (lex[i] - '0');
    }
    return true;
  };
  auto expect = [&](char c) -> bool { return i < lex.size() && lex[i++] == c; };

  bool negative_year = i < lex.size() && lex[i] == '-';
  if (negative_year) ++i;
  std::int64_t year, month, day, hour, minute, second;
  if (!digits(4, year)) return std::nullopt;
  if (negative_year) year = -year;
  if (!expect('-') || !digits(2, month) || !expect('-') || !digits(2, day)) return std::nullopt;
  if (!expect('T') || !digits(2, hour) || !expect(':') || !digits(2, minute) || !expect(':') ||
      !digits(2, second)) {
    return std::nullopt;
  }
  if (month < 1 || month > 12 || day < 1 ||
      day > days_in_month(year, static_cast<unsigned>(month)) || hour > 23 || minute > 59 ||
      second > 59) {
    return std::nullopt;
  }

  std::int64_t millis = 0;
  if (i < lex.size() && lex[i] == '.') {
    ++i;
    int seen = 0;
    std::int64_t scale = 100;
    while (i < lex.size() && std::isdigit(static_cast<unsigned char>(lex[i]))) {
      if (seen < 3) millis += (lex[i] - '0') * scale;
      scale /= 10;
      ++seen;
      ++i;
    }
    if (seen == 0) return std::nullopt;
  }

  std::int64_t offset_minutes = 0;
  if (i < lex.size()) {
    char c = lex[i];
    if (c == 'Z') {
      ++i;
    } else if (c == '+' || c == '-') {
      ++i;
      std::int64_t oh, om;
      if (!digits(2, oh) || !expect(':') || !digits(2, om)) return std::nullopt;
      if (oh > 14 || om > 59) return std::nullopt;
      offset_minutes = oh * 60 + om;
      if (c == '-') offset_minutes = -offset_minutes;
    }
  }
  if (i != lex.size()) return std::nullopt;

  std::int64_t days = days_from_civil(year, static_cast<unsigned>(month),
                                      static_cast<unsigned>(day));
  std::int64_t total =
      ((days * 24 + hour) * 60 + minute - offset_minutes) * 60 + second;
  return total * 1000 + millis;
}

}  // namespace extrukit

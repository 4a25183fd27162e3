// Copyright 2026 The numctx Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "numctx/verbalizer.h"

#include <array>
#include <vector>

#include "numctx/errors.h"
#include "numctx/utf8.h"

namespace numctx {
namespace {

constexpr std::array<std::string_view, 10> kOnes = {
    "kosong", "satu", "dua", "tiga", "empat", "lima", "enam", "tujuh", "lapan", "sembilan",
};

// Index i names 1000^i.
constexpr std::array<std::string_view, 6> kMagnitudes = {
    "", "ribu", "juta", "bilion", "trilion", "kuadrilion",
};

constexpr std::array<std::string_view, 12> kMonths = {
    "januari", "februari", "mac",       "april",   "mei",      "jun",
    "julai",   "ogos",     "september", "oktober", "november", "disember",
};

constexpr std::uint64_t kCardinalLimit = 1'000'000'000'000'000'000ULL;

struct Unit {
  std::string_view abbrev;
  std::string_view full;
};

constexpr std::array<Unit, 12> kUnits = {{
    {"mm", "milimeter"}, {"cm", "sentimeter"}, {"m", "meter"},   {"km", "kilometer"},
    {"mg", "miligram"},  {"g", "gram"},        {"kg", "kilogram"}, {"ml", "mililiter"},
    {"l", "liter"},      {"a", "ampere"},      {"k", "kelvin"},  {"cd", "kandela"},
}};

std::string Below1000(std::uint64_t n) {
  std::vector<std::string_view> words;
  const auto hundreds = n / 100;
  const auto rest = n % 100;
  if (hundreds == 1) {
    words.push_back("seratus");
  } else if (hundreds > 1) {
    words.push_back(kOnes[hundreds]);
    words.push_back("ratus");
  }
  if (rest == 10) {
    words.push_back("sepuluh");
  } else if (rest == 11) {
    words.push_back("sebelas");
  } else if (rest > 11 && rest < 20) {
    words.push_back(kOnes[rest - 10]);
    words.push_back("belas");
  } else if (rest >= 20) {
    words.push_back(kOnes[rest / 10]);
    words.push_back("puluh");
    if (rest % 10 != 0) words.push_back(kOnes[rest % 10]);
  } else if (rest > 0) {
    words.push_back(kOnes[rest]);
  }
  std::string out;
  for (auto w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

std::string Join(std::initializer_list<std::string_view> parts) {
  std::string out;
  for (auto p : parts) {
    if (p.empty()) continue;
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out;
}

[[noreturn]] void Incompatible(const NumberToken& token, FormatLabel label, std::string_view why) {
  throw CompatibilityError("'" + token.raw + "' (" +
                           std::string(ShapeKindName(ShapeOf(token).kind)) +
                           ") cannot be read as " + std::string(LabelName(label)) + ": " +
                           std::string(why));
}

std::uint64_t ParseDigits(std::string_view digits) {
  const auto first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return 0;
  if (digits.size() - first > 18) {
    throw RangeError("number " + std::string(digits) + " is too large to verbalize");
  }
  std::uint64_t v = 0;
  for (char c : digits.substr(first)) v = v * 10 + static_cast<std::uint64_t>(c - '0');
  return v;
}

std::string DigitByDigit(std::string_view digits) {
  std::string out;
  for (char c : digits) {
    if (!out.empty()) out += ' ';
    out += kOnes[static_cast<std::size_t>(c - '0')];
  }
  return out;
}

// Integer part with ',' thousands separators, then an optional '.' fraction.
struct Amount {
  std::string integer;
  std::optional<std::string> fraction;
};

std::optional<Amount> SplitAmount(const NumberToken& token) {
  Amount amount;
  std::size_t g = 0;
  amount.integer = token.digit_groups[0];
  for (; g < token.separators.size(); ++g) {
    const char sep = token.separators[g];
    if (sep == ',') {
      if (amount.fraction) return std::nullopt;
      amount.integer += token.digit_groups[g + 1];
    } else if (sep == '.' && !amount.fraction) {
      amount.fraction = token.digit_groups[g + 1];
    } else {
      return std::nullopt;
    }
  }
  return amount;
}

// "dua perpuluhan lima" style plain reading.
std::string ReadAmount(const Amount& amount) {
  std::string out = Cardinal(ParseDigits(amount.integer));
  if (amount.fraction) out += " perpuluhan " + DigitByDigit(*amount.fraction);
  return out;
}

std::string Lowered(std::string_view word) {
  return utf8::Encode(utf8::Lower(utf8::Decode(word)));
}

std::optional<std::size_t> MonthIndex(std::string_view word) {
  const std::string w = Lowered(word);
  for (std::size_t m = 0; m < kMonths.size(); ++m) {
    if (kMonths[m] == w) return m;
  }
  return std::nullopt;
}

std::string Year(std::uint64_t year, YearMode mode) {
  if (mode == YearMode::kFull || year < 1000 || year > 9999) return Cardinal(year);
  const auto hi = year / 100;
  const auto lo = year % 100;
  if (lo == 0) return Cardinal(hi) + " ratus";
  if (lo < 10) return Cardinal(hi) + " kosong " + std::string(kOnes[lo]);
  return Cardinal(hi) + " " + Cardinal(lo);
}

std::string DayMonthYear(const NumberToken& token, FormatLabel label, std::string_view day,
                         std::string_view month, std::optional<std::string_view> year,
                         YearMode mode) {
  const auto m = ParseDigits(month);
  const auto d = ParseDigits(day);
  if (m < 1 || m > 12) Incompatible(token, label, "month out of range");
  if (d < 1 || d > 31) Incompatible(token, label, "day out of range");
  std::string out = Cardinal(d) + " " + std::string(kMonths[m - 1]);
  if (year) out += " " + Year(ParseDigits(*year), mode);
  return out;
}

std::string VerbalizeDate(const NumberToken& t, const VerbalizationStyle& style,
                          std::string_view next_word) {
  constexpr auto kLabel = FormatLabel::kDate;
  const auto shape = ShapeOf(t);
  const auto& g = t.digit_groups;
  const bool all_sep = [&] {
    for (char s : t.separators) {
      if (s != t.separators[0]) return false;
    }
    return true;
  }();
  switch (shape.kind) {
    case ShapeKind::kPlainInt: {
      if (!t.separators.empty()) Incompatible(t, kLabel, "grouped digits");
      const auto v = ParseDigits(g[0]);
      if (auto m = MonthIndex(next_word)) return Cardinal(v) + " " + std::string(kMonths[*m]);
      if (g[0].size() == 4) return Year(v, style.year_mode);
      return Cardinal(v);
    }
    case ShapeKind::kSlashDate:
    case ShapeKind::kDecimal:
    case ShapeKind::kDotTime:
      if (!all_sep || (shape.kind != ShapeKind::kSlashDate && g.size() != 3)) break;
      if (g.size() == 3) return DayMonthYear(t, kLabel, g[0], g[1], g[2], style.year_mode);
      if (g.size() == 2) return DayMonthYear(t, kLabel, g[0], g[1], std::nullopt, style.year_mode);
      break;
    case ShapeKind::kHyphenGroups:
      if (!all_sep || g[0].size() != 4) break;
      if (g.size() == 3) return DayMonthYear(t, kLabel, g[2], g[1], g[0], style.year_mode);
      if (g.size() == 2) {
        const auto m = ParseDigits(g[1]);
        if (m < 1 || m > 12) Incompatible(t, kLabel, "month out of range");
        return std::string(kMonths[m - 1]) + " " + Year(ParseDigits(g[0]), style.year_mode);
      }
      break;
    default:
      break;
  }
  Incompatible(t, kLabel, "not a date pattern");
}

std::string VerbalizeTime(const NumberToken& t, std::string_view next_word) {
  constexpr auto kLabel = FormatLabel::kTime;
  const auto kind = ShapeOf(t).kind;
  std::uint64_t hour = 0;
  std::uint64_t minute = 0;
  if (kind == ShapeKind::kPlainInt && t.separators.empty()) {
    hour = ParseDigits(t.digit_groups[0]);
  } else if ((kind == ShapeKind::kColonTime || kind == ShapeKind::kDotTime) &&
             t.digit_groups.size() == 2) {
    hour = ParseDigits(t.digit_groups[0]);
    minute = ParseDigits(t.digit_groups[1]);
  } else {
    Incompatible(t, kLabel, "not an hour or hour:minute pattern");
  }
  if (hour > 24 || minute > 59) Incompatible(t, kLabel, "hour or minute out of range");

  const std::string marker = Lowered(next_word);
  std::string_view period;
  std::uint64_t hour24 = hour;
  if (marker == "am") {
    hour24 = hour % 12;
  } else if (marker == "pm") {
    hour24 = hour % 12 + 12;
  } else if (marker == "pagi" || marker == "petang" || marker == "malam") {
    period = marker;
  } else if (marker == "tengah") {
    period = "tengah hari";
  }
  if (period.empty()) {
    period = hour24 < 12 ? "pagi" : hour24 == 12 ? "tengah hari" : hour24 <= 18 ? "petang" : "malam";
  }
  const auto hour12 = hour24 % 12 == 0 ? 12 : hour24 % 12;
  const std::string minutes = minute != 0 ? Cardinal(minute) : std::string();
  return Join({Cardinal(hour12), minutes, period});
}

std::string VerbalizePhone(const NumberToken& t) {
  const auto kind = ShapeOf(t).kind;
  if (kind != ShapeKind::kPlainInt && kind != ShapeKind::kHyphenGroups &&
      kind != ShapeKind::kSignedPhone) {
    Incompatible(t, FormatLabel::kPhone, "not a phone number pattern");
  }
  std::string out = t.prefix_symbol == "+" ? "tambah" : "";
  for (const auto& group : t.digit_groups) {
    if (!out.empty()) out += ' ';
    out += DigitByDigit(group);
  }
  return out;
}

std::string VerbalizeCurrency(const NumberToken& t, const VerbalizationStyle& style,
                              std::string_view next_word) {
  constexpr auto kLabel = FormatLabel::kCurrency;
  const auto kind = ShapeOf(t).kind;
  if (kind != ShapeKind::kCurrencyPrefixed && kind != ShapeKind::kPlainInt &&
      kind != ShapeKind::kDecimal && kind != ShapeKind::kDotTime) {
    Incompatible(t, kLabel, "not an amount");
  }
  const auto amount = SplitAmount(t);
  if (!amount) Incompatible(t, kLabel, "not an amount");
  const bool symbolic = style.currency_mode == CurrencyMode::kSymbolic;
  if (kind != ShapeKind::kCurrencyPrefixed) return ReadAmount(*amount);

  // "RM 2.5 juta": the fraction belongs to the magnitude, not to sen.
  const std::string marker = Lowered(next_word);
  for (std::size_t i = 1; i < kMagnitudes.size(); ++i) {
    if (marker == kMagnitudes[i]) {
      return symbolic ? Join({"rm", ReadAmount(*amount), marker})
                      : Join({ReadAmount(*amount), marker, "ringgit"});
    }
  }

  std::uint64_t sen = 0;
  if (amount->fraction) {
    if (amount->fraction->size() > 2) Incompatible(t, kLabel, "more than two decimal places");
    sen = ParseDigits(*amount->fraction) * (amount->fraction->size() == 1 ? 10 : 1);
  }
  const auto ringgit = ParseDigits(amount->integer);
  const bool say_ringgit = ringgit > 0 || sen == 0;
  const std::string main = say_ringgit ? Cardinal(ringgit) : std::string();
  const std::string cents = sen > 0 ? Cardinal(sen) + " sen" : std::string();
  if (symbolic) return Join({"rm", main, cents});
  return Join({main, say_ringgit ? "ringgit" : "", cents});
}

std::string VerbalizeQuantity(const NumberToken& t, FormatLabel label) {
  const auto kind = ShapeOf(t).kind;
  const bool percent_token = kind == ShapeKind::kPercentSuffixed;
  if (percent_token && label != FormatLabel::kPercentage) {
    Incompatible(t, label, "'%' marks a percentage");
  }
  if (!percent_token && kind != ShapeKind::kPlainInt && kind != ShapeKind::kDecimal &&
      kind != ShapeKind::kDotTime) {
    Incompatible(t, label, "not a quantity");
  }
  const auto amount = SplitAmount(t);
  if (!amount) Incompatible(t, label, "not a quantity");
  return ReadAmount(*amount);
}

}  // namespace

std::string Cardinal(std::uint64_t n) {
  if (n >= kCardinalLimit) throw RangeError("cardinal out of range: " + std::to_string(n));
  if (n == 0) return std::string(kOnes[0]);
  std::array<std::uint64_t, kMagnitudes.size()> groups{};
  for (std::size_t i = 0; i < groups.size(); ++i) {
    groups[i] = n % 1000;
    n /= 1000;
  }
  std::string out;
  for (std::size_t i = groups.size(); i-- > 0;) {
    if (groups[i] == 0) continue;
    if (!out.empty()) out += ' ';
    if (i == 1 && groups[i] == 1) {
      out += "seribu";
    } else {
      out += Below1000(groups[i]);
      if (i > 0) {
        out += ' ';
        out += kMagnitudes[i];
      }
    }
  }
  return out;
}

std::optional<std::string> UnitWord(std::string_view word, UnitMode mode) {
  const std::string w = Lowered(word);
  for (const auto& unit : kUnits) {
    if (w == unit.abbrev || w == unit.full) {
      return std::string(mode == UnitMode::kAbbrev ? unit.abbrev : unit.full);
    }
  }
  return std::nullopt;
}

std::string Verbalize(const NumberToken& token, FormatLabel label,
                      const VerbalizationStyle& style, std::string_view next_word) {
  if (token.digit_groups.empty()) throw ContractError("number token without digits");
  const auto kind = ShapeOf(token).kind;
  if (kind == ShapeKind::kCurrencyPrefixed && label != FormatLabel::kCurrency) {
    Incompatible(token, label, "'RM' marks a currency amount");
  }
  switch (label) {
    case FormatLabel::kDate:
      return VerbalizeDate(token, style, next_word);
    case FormatLabel::kTime:
      return VerbalizeTime(token, next_word);
    case FormatLabel::kPhone:
      return VerbalizePhone(token);
    case FormatLabel::kCurrency:
      return VerbalizeCurrency(token, style, next_word);
    case FormatLabel::kMeasurement: {
      std::string out = VerbalizeQuantity(token, label);
      if (auto unit = UnitWord(next_word, style.unit_mode)) out += " " + *unit;
      return out;
    }
    case FormatLabel::kPercentage:
      return VerbalizeQuantity(token, label) + " peratus";
  }
  throw ContractError("unknown label");
}

}  // namespace numctx

#include "carnot/algebra_file.hpp"

#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

namespace carnot {

const char* to_string(ParseErrorKind k) {
  switch (k) {
    case ParseErrorKind::Syntax: return "syntax";
    case ParseErrorKind::Range: return "range";
    case ParseErrorKind::DuplicatePair: return "duplicate-pair";
    case ParseErrorKind::BadFraction: return "bad-fraction";
  }
  return "unknown";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line, const std::string& message)
    : Error(line ? "line " + std::to_string(line) + ": " + message : message), kind_(kind), line_(line) {}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<std::size_t> to_index(std::string_view s) {
  std::size_t v = 0;
  if (s.empty()) return std::nullopt;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

class LineParser {
 public:
  explicit LineParser(std::size_t line) : line_(line) {}

  [[noreturn]] void fail(ParseErrorKind kind, const std::string& msg) const { throw ParseError(kind, line_, msg); }

  std::size_t index(std::string_view tok, std::size_t dim) const {
    auto v = to_index(tok);
    if (!v) fail(ParseErrorKind::Syntax, "expected a basis index, got '" + std::string(tok) + "'");
    if (*v < 1 || *v > dim)
      fail(ParseErrorKind::Range, "index " + std::to_string(*v) + " outside 1.." + std::to_string(dim));
    return *v;
  }

  // sum of [sign] [coef '*'] index terms, or a lone 0
  Vector expression(std::string_view text, std::size_t dim) const {
    Vector out(dim);
    std::string compact;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
    if (compact.empty()) fail(ParseErrorKind::Syntax, "missing right-hand side");
    if (compact == "0") return out;

    std::size_t i = 0;
    bool first = true;
    while (i < compact.size()) {
      int sign = 1;
      if (compact[i] == '+' || compact[i] == '-') {
        sign = compact[i] == '-' ? -1 : 1;
        ++i;
      } else if (!first) {
        fail(ParseErrorKind::Syntax, "expected '+' or '-' between terms");
      }
      std::size_t j = i;
      while (j < compact.size() && compact[j] != '+' && compact[j] != '-') ++j;
      std::string_view term(compact.data() + i, j - i);
      if (term.empty()) fail(ParseErrorKind::Syntax, "empty term");

      Rational coef = 1;
      std::string_view target = term;
      if (auto star = term.find('*'); star != std::string_view::npos) {
        std::string_view c = term.substr(0, star);
        target = term.substr(star + 1);
        try {
          coef = parse_rational(c);
        } catch (const std::invalid_argument& e) {
          fail(c.find('/') != std::string_view::npos ? ParseErrorKind::BadFraction : ParseErrorKind::Syntax,
               "bad coefficient '" + std::string(c) + "'");
        }
      } else if (term.find('/') != std::string_view::npos) {
        fail(ParseErrorKind::Syntax, "fraction '" + std::string(term) + "' needs a '*index' target");
      }
      out[index(target, dim) - 1] += sign * coef;
      i = j;
      first = false;
    }
    return out;
  }

 private:
  std::size_t line_;
};

}  // namespace

std::pair<std::size_t, std::size_t> parse_range(std::string_view text) {
  text = trim(text);
  auto dots = text.find("..");
  auto first = to_index(trim(text.substr(0, dots)));
  auto last = dots == std::string_view::npos ? first : to_index(trim(text.substr(dots + 2)));
  if (!first || !last) throw ParseError(ParseErrorKind::Syntax, 0, "bad range '" + std::string(text) + "'");
  if (*first > *last) throw ParseError(ParseErrorKind::Range, 0, "empty range '" + std::string(text) + "'");
  return {*first, *last};
}

std::string format_ranges(const LayerRanges& ranges) {
  std::string out;
  for (std::size_t i = 0; i < ranges.size(); ++i) {
    if (i) out += "; ";
    out += std::to_string(ranges[i].first) + ".." + std::to_string(ranges[i].second);
  }
  return out;
}

AlgebraFile parse_algebra(std::string_view text) {
  std::optional<std::size_t> dim;
  std::optional<LayerRanges> layers;
  LieAlgebra::Table table;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    LineParser p(line_no);
    auto words = split_ws(line);
    std::string_view keyword = words.front();
    std::string_view rest = trim(line.substr(keyword.size()));

    if (keyword == "dim") {
      if (dim) p.fail(ParseErrorKind::Syntax, "duplicate 'dim' line");
      if (words.size() != 2) p.fail(ParseErrorKind::Syntax, "expected 'dim N'");
      auto n = to_index(words[1]);
      if (!n) p.fail(ParseErrorKind::Syntax, "dimension must be a positive integer");
      if (*n == 0) p.fail(ParseErrorKind::Range, "dimension must be positive");
      dim = n;
    } else if (keyword == "layers") {
      if (!dim) p.fail(ParseErrorKind::Syntax, "'layers' before 'dim'");
      if (layers) p.fail(ParseErrorKind::Syntax, "duplicate 'layers' line");
      LayerRanges ranges;
      std::size_t next = 1;
      std::size_t start = 0;
      while (start <= rest.size()) {
        std::size_t semi = rest.find(';', start);
        if (semi == std::string_view::npos) semi = rest.size();
        std::string_view piece = trim(rest.substr(start, semi - start));
        start = semi + 1;
        if (piece.empty()) p.fail(ParseErrorKind::Syntax, "empty layer range");
        std::pair<std::size_t, std::size_t> r;
        try {
          r = parse_range(piece);
        } catch (const ParseError&) {
          p.fail(ParseErrorKind::Syntax, "bad layer range '" + std::string(piece) + "'");
        }
        if (r.first != next || r.second < r.first || r.second > *dim)
          p.fail(ParseErrorKind::Range, "layer range '" + std::string(piece) + "' must start at " +
                                            std::to_string(next) + " and end by " + std::to_string(*dim));
        next = r.second + 1;
        ranges.push_back(r);
      }
      layers = std::move(ranges);
    } else if (keyword == "bracket") {
      if (!dim) p.fail(ParseErrorKind::Syntax, "'bracket' before 'dim'");
      auto eq = rest.find('=');
      if (eq == std::string_view::npos) p.fail(ParseErrorKind::Syntax, "expected 'bracket a b = ...'");
      auto lhs = split_ws(rest.substr(0, eq));
      if (lhs.size() != 2) p.fail(ParseErrorKind::Syntax, "expected two indices before '='");
      std::size_t a = p.index(lhs[0], *dim);
      std::size_t b = p.index(lhs[1], *dim);
      if (a >= b) p.fail(ParseErrorKind::Range, "bracket indices must satisfy a < b");
      if (table.count({a - 1, b - 1}))
        p.fail(ParseErrorKind::DuplicatePair,
               "pair (" + std::to_string(a) + ", " + std::to_string(b) + ") already given");
      table[{a - 1, b - 1}] = p.expression(rest.substr(eq + 1), *dim);
    } else {
      p.fail(ParseErrorKind::Syntax, "unknown keyword '" + std::string(keyword) + "'");
    }
  }
  if (!dim) throw ParseError(ParseErrorKind::Syntax, 0, "missing 'dim' line");
  return {LieAlgebra::raw(*dim, table), std::move(layers)};
}

std::string emit_algebra(const LieAlgebra& L, const std::optional<LayerRanges>& layers, std::string_view comment) {
  std::ostringstream out;
  std::size_t start = 0;
  while (start < comment.size()) {
    std::size_t end = comment.find('\n', start);
    if (end == std::string_view::npos) end = comment.size();
    std::string_view line = comment.substr(start, end - start);
    out << "#" << (line.empty() ? "" : " ") << line << "\n";
    start = end + 1;
  }
  out << "dim " << L.dim() << "\n";
  if (layers) out << "layers " << format_ranges(*layers) << "\n";
  for (const auto& [key, value] : L.table()) {
    out << "bracket " << key.first + 1 << " " << key.second + 1 << " =";
    bool first = true;
    for (std::size_t k = 0; k < value.size(); ++k) {
      if (sgn(value[k]) == 0) continue;
      Rational mag = abs(value[k]);
      if (first)
        out << (sgn(value[k]) < 0 ? " -" : " ");
      else
        out << (sgn(value[k]) < 0 ? " - " : " + ");
      if (mag != 1) out << to_string(mag) << "*";
      out << k + 1;
      first = false;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace carnot

#include <cctype>
#include <fstream>
#include <sstream>

#include "torikit/fan.hpp"

namespace torikit {

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i > start) line.tokens.push_back({std::string(raw.substr(start, i - start)), start + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

Integer parse_integer(const Line& line, const Token& tok) {
  const std::string& s = tok.text;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool digits = i < s.size();
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) digits = false;
  if (!digits) throw ParseError(line.number, tok.column, "expected an integer, found '" + s + "'");
  return Integer(s[0] == '+' ? s.substr(1) : s, 10);
}

std::size_t parse_count(const Line& line, const Token& tok, const char* what) {
  Integer v = parse_integer(line, tok);
  if (v < 0 || !v.fits_ulong_p())
    throw ParseError(line.number, tok.column, std::string(what) + " must be a nonnegative integer");
  return v.get_ui();
}

class Parser {
 public:
  explicit Parser(std::string_view text) : lines_(tokenize(text)) {}

  ParsedFan run() {
    const std::size_t rank = header("rank");
    if (rank == 0) throw ParseError(last_->number, last_->tokens[1].column, "rank must be positive");

    const std::size_t k = header("rays");
    std::vector<LatticeVector> rays;
    std::vector<std::string> warnings;
    for (std::size_t r = 0; r < k; ++r) {
      const Line& line = next("ray coordinates");
      if (line.tokens.size() != rank)
        throw ParseError(line.number, 0,
                         "ray " + std::to_string(r) + " has " + std::to_string(line.tokens.size()) +
                             " coordinates, expected " + std::to_string(rank));
      IntVector coords;
      for (const auto& tok : line.tokens) coords.push_back(parse_integer(line, tok));
      LatticeVector v(std::move(coords));
      if (v.is_zero()) throw ParseError(line.number, 0, "ray " + std::to_string(r) + " is zero");
      LatticeVector p = primitive(v);
      if (!(p == v))
        warnings.push_back("line " + std::to_string(line.number) + ": ray " + std::to_string(r) + " " +
                           v.to_string() + " is not primitive; normalized to " + p.to_string());
      for (std::size_t j = 0; j < rays.size(); ++j)
        if (rays[j] == p)
          throw ParseError(line.number, 0,
                           "duplicate ray: ray " + std::to_string(r) + " equals ray " + std::to_string(j));
      rays.push_back(std::move(p));
    }

    const std::size_t m = header("maxcones");
    std::vector<RaySet> cones;
    for (std::size_t c = 0; c < m; ++c) {
      const Line& line = next("cone ray indices");
      RaySet cone;
      for (const auto& tok : line.tokens) {
        std::size_t idx = parse_count(line, tok, "ray index");
        if (idx >= k) throw ParseError(line.number, tok.column, "ray index " + tok.text + " out of range");
        for (std::size_t seen : cone)
          if (seen == idx) throw ParseError(line.number, tok.column, "ray index " + tok.text + " repeated");
        cone.push_back(idx);
      }
      cones.push_back(std::move(cone));
    }

    if (pos_ < lines_.size())
      throw ParseError(lines_[pos_].number, lines_[pos_].tokens[0].column, "unexpected content after cone list");

    return {Fan::from_cones(rank, std::move(rays), cones), std::move(warnings)};
  }

 private:
  const Line& next(const std::string& expected) {
    if (pos_ >= lines_.size()) {
      const std::size_t line = lines_.empty() ? 1 : lines_.back().number + 1;
      throw ParseError(line, 0, "unexpected end of input, expected " + expected);
    }
    last_ = &lines_[pos_++];
    return *last_;
  }

  std::size_t header(const char* keyword) {
    const Line& line = next(std::string("'") + keyword + "'");
    if (line.tokens[0].text != keyword)
      throw ParseError(line.number, line.tokens[0].column,
                       std::string("expected '") + keyword + "', found '" + line.tokens[0].text + "'");
    if (line.tokens.size() != 2)
      throw ParseError(line.number, 0, std::string("'") + keyword + "' takes exactly one integer");
    return parse_count(line, line.tokens[1], keyword);
  }

  std::vector<Line> lines_;
  std::size_t pos_ = 0;
  const Line* last_ = nullptr;
};

}  // namespace

ParsedFan parse_fan(std::string_view text) { return Parser(text).run(); }

ParsedFan load_fan(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read '" + path + "'");
  return parse_fan(buf.str());
}

}  // namespace torikit

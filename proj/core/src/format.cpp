#include "pvg/format.hpp"

#include <charconv>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "pvg/error.hpp"

namespace pvg {
namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::optional<std::uint64_t> to_uint(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

// "# <key> <value>" or "#<key> <value>"
std::optional<Token> directive(const std::vector<Token>& tokens, std::string_view key) {
  if (tokens.size() == 3 && tokens[0].text == "#" && tokens[1].text == key) return tokens[2];
  if (tokens.size() == 2 && tokens[0].text.substr(1) == key) return tokens[1];
  return std::nullopt;
}

}  // namespace

ParsedRouteSet parse_route_set(std::string_view text) {
  enum class Expect { kHeader, kMode, kSites, kCarriers };
  Expect expect = Expect::kHeader;
  Mode mode = Mode::kAnonymous;
  std::vector<std::string> site_names;
  std::unordered_map<std::string_view, std::uint32_t> site_index;
  std::vector<CarrierSpec> carriers;
  std::optional<std::uint64_t> bound;
  std::optional<Token> start;
  std::size_t start_line = 0;
  std::size_t last_line = 0;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    ++line_no;

    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens[0].text.front() == '#') {
      if (auto b = directive(tokens, "bound")) {
        if (auto v = to_uint(b->text)) bound = v;
      } else if (auto st = directive(tokens, "start")) {
        start = st;
        start_line = line_no;
      }
      continue;
    }
    last_line = line_no;
    const auto fail = [&](std::size_t col, const std::string& msg) -> ParseError { return {line_no, col, msg}; };

    switch (expect) {
      case Expect::kHeader:
        if (tokens.size() != 2 || tokens[0].text != "pvg") throw fail(tokens[0].column, "expected header 'pvg 1'");
        if (tokens[1].text != "1") throw fail(tokens[1].column, "unsupported format version");
        expect = Expect::kMode;
        break;
      case Expect::kMode:
        if (tokens[0].text != "mode") throw fail(tokens[0].column, "expected 'mode anonymous' or 'mode ids'");
        if (tokens.size() != 2) throw fail(tokens[0].column, "mode takes exactly one value");
        if (tokens[1].text == "anonymous") {
          mode = Mode::kAnonymous;
        } else if (tokens[1].text == "ids") {
          mode = Mode::kWithIds;
        } else {
          throw fail(tokens[1].column, "unknown mode '" + std::string(tokens[1].text) + "'");
        }
        expect = Expect::kSites;
        break;
      case Expect::kSites: {
        if (tokens[0].text != "sites") throw fail(tokens[0].column, "expected 'sites <n> <names...>'");
        if (tokens.size() < 2) throw fail(tokens[0].column + 5, "missing site count");
        auto n = to_uint(tokens[1].text);
        if (!n || *n == 0) throw fail(tokens[1].column, "site count must be a positive integer");
        if (tokens.size() - 2 != *n)
          throw fail(tokens.back().column,
                     "expected " + std::to_string(*n) + " site names, found " + std::to_string(tokens.size() - 2));
        for (std::size_t i = 2; i < tokens.size(); ++i) {
          const auto& t = tokens[i];
          if (t.text == ":") throw fail(t.column, "':' is not a valid site name");
          if (!site_index.emplace(t.text, static_cast<std::uint32_t>(site_names.size())).second)
            throw fail(t.column, "duplicate site name '" + std::string(t.text) + "'");
          site_names.emplace_back(t.text);
        }
        expect = Expect::kCarriers;
        break;
      }
      case Expect::kCarriers: {
        if (tokens[0].text != "carrier") throw fail(tokens[0].column, "expected 'carrier <id> : <sites...>'");
        if (tokens.size() < 2) throw fail(tokens[0].column, "missing carrier id");
        if (tokens.size() < 3 || tokens[2].text != ":")
          throw fail(tokens.size() < 3 ? tokens[1].column + tokens[1].text.size() : tokens[2].column, "expected ':'");
        if (tokens.size() < 4) throw fail(tokens[2].column + 1, "route must contain at least one site");
        for (const auto& c : carriers) {
          if (c.name == tokens[1].text)
            throw fail(tokens[1].column, "duplicate carrier id '" + std::string(tokens[1].text) + "'");
        }
        CarrierSpec spec{std::string(tokens[1].text), {}};
        for (std::size_t i = 3; i < tokens.size(); ++i) {
          auto it = site_index.find(tokens[i].text);
          if (it == site_index.end())
            throw fail(tokens[i].column, "unknown site '" + std::string(tokens[i].text) + "'");
          spec.sites.emplace_back(it->second);
        }
        carriers.push_back(std::move(spec));
        break;
      }
    }
  }

  const std::size_t end_line = line_no == 0 ? 1 : line_no;
  if (expect != Expect::kCarriers) throw ParseError(end_line, 1, "unexpected end of input");
  if (carriers.empty()) throw ParseError(end_line, 1, "no carriers declared");
  std::optional<RouteSet> routes;
  try {
    routes.emplace(std::move(site_names), std::move(carriers), mode);
  } catch (const Error& e) {
    throw ParseError(last_line, 1, e.what());
  }
  std::optional<CarrierId> start_carrier;
  if (start) {
    start_carrier = routes->find_carrier(start->text);
    if (!start_carrier) throw ParseError(start_line, start->column, "unknown start carrier '" + std::string(start->text) + "'");
  }
  return ParsedRouteSet{std::move(*routes), bound, start_carrier};
}

std::string write_route_set(const RouteSet& routes, std::optional<std::uint64_t> bound,
                            std::optional<CarrierId> start) {
  std::ostringstream out;
  out << "pvg 1\n";
  out << "mode " << to_string(routes.mode()) << '\n';
  out << "sites " << routes.num_sites();
  for (const auto& name : routes.site_names()) out << ' ' << name;
  out << '\n';
  for (const auto& c : routes.carriers()) {
    out << "carrier " << c.name << " :";
    for (SiteId s : c.route.sites()) out << ' ' << routes.site_name(s);
    out << '\n';
  }
  if (bound) out << "# bound " << *bound << '\n';
  if (start) out << "# start " << routes.carrier(*start).name << '\n';
  return out.str();
}

}  // namespace pvg

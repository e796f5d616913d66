#include "fssp/grid.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace fssp {

std::string ValidationReport::str() const {
  if (ok) return "ok";
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%s (%d,%d)", rule.c_str(), i, j);
  return buf;
}

void PathConfig::rebuild() {
  cells_.assign(left_.size() + right_.size() + 1, Position{});
  Position p{0, 0};
  int origin = static_cast<int>(left_.size());
  cells_[origin] = p;
  for (std::size_t k = 0; k < left_.size(); ++k) {
    p = step(p, left_[k]);
    cells_[origin - 1 - static_cast<int>(k)] = p;
  }
  p = {0, 0};
  for (std::size_t k = 0; k < right_.size(); ++k) {
    p = step(p, right_[k]);
    cells_[origin + 1 + static_cast<int>(k)] = p;
  }
}

bool PathConfig::contains(Position q) const {
  for (const Position& p : cells_)
    if (p == q) return true;
  return false;
}

int PathConfig::index_of(Position q) const {
  for (std::size_t k = 0; k < cells_.size(); ++k)
    if (cells_[k] == q) return static_cast<int>(k) + r();
  throw std::out_of_range("position not in path configuration");
}

PathConfig PathConfig::transformed(int quarter, bool reflect) const {
  quarter = ((quarter % 4) + 4) % 4;
  auto map = [&](Dir d) {
    int i = static_cast<int>(d);
    if (reflect && (i == 1 || i == 3)) i = (i + 2) % 4;  // reflect across x axis
    return static_cast<Dir>((i + quarter) % 4);
  };
  std::vector<Dir> l(left_), rr(right_);
  for (Dir& d : l) d = map(d);
  for (Dir& d : rr) d = map(d);
  return PathConfig(std::move(l), std::move(rr));
}

std::string PathConfig::serialize() const {
  std::string out = "PATH ";
  if (left_.empty()) {
    out += '.';
  } else {
    for (Dir d : left_) out += dir_char(d);
  }
  out += '|';
  if (right_.empty()) {
    out += '.';
  } else {
    for (Dir d : right_) out += dir_char(d);
  }
  return out;
}

RegionConfig::RegionConfig(std::vector<Position> cells) : cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

bool RegionConfig::contains(Position p) const {
  return std::binary_search(cells_.begin(), cells_.end(), p);
}

std::string RegionConfig::serialize() const {
  std::string out = "REG ";
  for (std::size_t k = 0; k < cells_.size(); ++k) {
    if (k) out += ',';
    out += '(' + std::to_string(cells_[k].x) + ',' + std::to_string(cells_[k].y) + ')';
  }
  return out;
}

const std::vector<Position>& cells_of(const Config& c) {
  if (const auto* p = std::get_if<PathConfig>(&c)) return p->cells();
  return std::get<RegionConfig>(c).cells();
}

bool config_contains(const Config& c, Position p) {
  if (const auto* pc = std::get_if<PathConfig>(&c)) return pc->contains(p);
  return std::get<RegionConfig>(c).contains(p);
}

std::string serialize(const Config& c) {
  if (const auto* p = std::get_if<PathConfig>(&c)) return p->serialize();
  return std::get<RegionConfig>(c).serialize();
}

ValidationReport validate(const PathConfig& c) {
  ValidationReport rep;
  const auto& cells = c.cells();
  int r = c.r();
  int n = static_cast<int>(cells.size());
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (cells[a] == cells[b]) {
        rep.ok = false;
        rep.rule = "duplicate";
        rep.i = a + r;
        rep.j = b + r;
        return rep;
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 2; b < n; ++b) {
      if (adjacent(cells[a], cells[b])) {
        rep.ok = false;
        rep.rule = "touching";
        rep.i = a + r;
        rep.j = b + r;
        return rep;
      }
    }
  }
  return rep;
}

ValidationReport validate(const RegionConfig& c) {
  ValidationReport rep;
  if (!c.contains({0, 0})) {
    rep.ok = false;
    rep.rule = "missing-origin";
    return rep;
  }
  // Connectivity by BFS from the origin.
  std::unordered_set<std::uint64_t> seen;
  std::deque<Position> queue{{0, 0}};
  seen.insert(cell_key({0, 0}));
  while (!queue.empty()) {
    Position p = queue.front();
    queue.pop_front();
    for (Dir d : kAllDirs) {
      Position q = step(p, d);
      if (c.contains(q) && seen.insert(cell_key(q)).second) queue.push_back(q);
    }
  }
  if (seen.size() != c.cells().size()) {
    rep.ok = false;
    rep.rule = "disconnected";
    for (const Position& p : c.cells()) {
      if (!seen.count(cell_key(p))) {
        rep.i = p.x;
        rep.j = p.y;
        break;
      }
    }
  }
  return rep;
}

ValidationReport validate(const Config& c) {
  if (const auto* p = std::get_if<PathConfig>(&c)) return validate(*p);
  return validate(std::get<RegionConfig>(c));
}

namespace {

std::vector<Dir> parse_moves(const std::string& text, std::size_t begin, std::size_t end) {
  std::vector<Dir> moves;
  if (end - begin == 1 && text[begin] == '.') return moves;
  for (std::size_t k = begin; k < end; ++k) {
    auto d = dir_from_char(text[k]);
    if (!d) throw ParseError("expected one of E,N,W,S or '.'", k);
    moves.push_back(*d);
  }
  return moves;
}

RegionConfig parse_region(const std::string& text, std::size_t at) {
  std::vector<Position> cells;
  while (at < text.size()) {
    if (text[at] != '(') throw ParseError("expected '('", at);
    ++at;
    std::size_t used = 0;
    int x = 0, y = 0;
    try {
      x = std::stoi(text.substr(at), &used);
    } catch (const std::exception&) {
      throw ParseError("expected integer", at);
    }
    at += used;
    if (at >= text.size() || text[at] != ',') throw ParseError("expected ','", at);
    ++at;
    try {
      y = std::stoi(text.substr(at), &used);
    } catch (const std::exception&) {
      throw ParseError("expected integer", at);
    }
    at += used;
    if (at >= text.size() || text[at] != ')') throw ParseError("expected ')'", at);
    ++at;
    cells.push_back({x, y});
    if (at == text.size()) break;
    if (text[at] != ',') throw ParseError("expected ',' between cells", at);
    ++at;
  }
  if (cells.empty()) throw ParseError("empty region", at);
  return RegionConfig(std::move(cells));
}

}  // namespace

Config parse_config(const std::string& text) {
  if (text.rfind("PATH ", 0) == 0) {
    std::size_t body = 5;
    std::size_t bar = text.find('|', body);
    if (bar == std::string::npos) throw ParseError("expected '|'", text.size());
    PathConfig c(parse_moves(text, body, bar), parse_moves(text, bar + 1, text.size()));
    ValidationReport rep = validate(c);
    if (!rep.ok) throw ValidityError(rep);
    return c;
  }
  if (text.rfind("REG ", 0) == 0) {
    RegionConfig c = parse_region(text, 4);
    ValidationReport rep = validate(c);
    if (!rep.ok) throw ValidityError(rep);
    return c;
  }
  throw ParseError("expected 'PATH ' or 'REG ' record", 0);
}

BoundaryCondition boundary_condition(const Config& c, Position p) {
  if (!config_contains(c, p)) throw std::out_of_range("position not in configuration");
  BoundaryCondition bc;
  for (Dir d : kAllDirs)
    if (config_contains(c, step(p, d))) bc.set(d);
  return bc;
}

BoundaryCondition boundary_condition(const PathConfig& c, Position p) {
  Config cfg = c;
  return boundary_condition(cfg, p);
}

int distance(const Config& c, Position p, Position q) {
  if (!config_contains(c, p) || !config_contains(c, q))
    throw std::out_of_range("position not in configuration");
  if (const auto* pc = std::get_if<PathConfig>(&c))
    return std::abs(pc->index_of(p) - pc->index_of(q));
  if (p == q) return 0;
  std::unordered_map<std::uint64_t, int> dist;
  std::deque<Position> queue{p};
  dist[cell_key(p)] = 0;
  while (!queue.empty()) {
    Position u = queue.front();
    queue.pop_front();
    int du = dist[cell_key(u)];
    for (Dir d : kAllDirs) {
      Position v = step(u, d);
      if (!config_contains(c, v)) continue;
      if (dist.emplace(cell_key(v), du + 1).second) {
        if (v == q) return du + 1;
        queue.push_back(v);
      }
    }
  }
  throw std::logic_error("unreachable cell in validated configuration");
}

int radius(const PathConfig& c) { return std::max(-c.r(), c.s()); }

int radius(const Config& c) {
  if (const auto* p = std::get_if<PathConfig>(&c)) return radius(*p);
  int best = 0;
  for (const Position& p : cells_of(c)) best = std::max(best, distance(c, {0, 0}, p));
  return best;
}

std::string canonical(const PathConfig& c) {
  return std::min(c.serialize(), c.mirrored().serialize());
}

std::string canonical(const Config& c) {
  if (const auto* p = std::get_if<PathConfig>(&c)) return canonical(*p);
  return serialize(c);
}

std::string render_ascii(const Config& c) {
  const auto& cells = cells_of(c);
  int xmin = cells[0].x, xmax = cells[0].x, ymin = cells[0].y, ymax = cells[0].y;
  for (const Position& p : cells) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  std::string out;
  for (int y = ymax; y >= ymin; --y) {
    for (int x = xmin; x <= xmax; ++x) {
      Position p{x, y};
      if (p == Position{0, 0})
        out += 'G';
      else if (config_contains(c, p))
        out += '#';
      else
        out += '.';
    }
    if (y > ymin) out += '\n';
  }
  return out;
}

}  // namespace fssp

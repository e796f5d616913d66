#ifndef FSSP_GRID_HPP
#define FSSP_GRID_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

// Grid geometry and configuration representation. A configuration is either
// a path through the origin (the general sits at index 0) or a finite
// connected region containing the origin. Paths are stored as two move
// strings: `left` walks from p_0 toward p_r, `right` from p_0 toward p_s.

namespace fssp {

struct Position {
  int x = 0;
  int y = 0;

  friend bool operator==(Position a, Position b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(Position a, Position b) { return !(a == b); }
  friend bool operator<(Position a, Position b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  }
};

inline std::uint64_t cell_key(Position p) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.x)) << 32) |
         static_cast<std::uint32_t>(p.y);
}

struct PositionHash {
  std::size_t operator()(Position p) const {
    std::uint64_t k = cell_key(p);
    k ^= k >> 33;
    k *= 0xff51afd7ed558ccdULL;
    k ^= k >> 33;
    return static_cast<std::size_t>(k);
  }
};

// Directions indexed 0..3 = E,N,W,S; indices compose modulo 4.
enum class Dir : std::uint8_t { E = 0, N = 1, W = 2, S = 3 };

constexpr std::array<Dir, 4> kAllDirs = {Dir::E, Dir::N, Dir::W, Dir::S};

inline Position offset(Dir d) {
  switch (d) {
    case Dir::E: return {1, 0};
    case Dir::N: return {0, 1};
    case Dir::W: return {-1, 0};
    case Dir::S: return {0, -1};
  }
  return {0, 0};
}

inline Position step(Position p, Dir d) {
  Position o = offset(d);
  return {p.x + o.x, p.y + o.y};
}

inline Dir opposite(Dir d) {
  return static_cast<Dir>((static_cast<int>(d) + 2) % 4);
}

inline char dir_char(Dir d) { return "ENWS"[static_cast<int>(d)]; }

inline std::optional<Dir> dir_from_char(char c) {
  switch (c) {
    case 'E': return Dir::E;
    case 'N': return Dir::N;
    case 'W': return Dir::W;
    case 'S': return Dir::S;
    default: return std::nullopt;
  }
}

inline bool adjacent(Position a, Position b) {
  int dx = a.x - b.x, dy = a.y - b.y;
  return (dx == 0 && (dy == 1 || dy == -1)) || (dy == 0 && (dx == 1 || dx == -1));
}

// Direction from a to the adjacent cell b.
inline Dir dir_to(Position a, Position b) {
  for (Dir d : kAllDirs)
    if (step(a, d) == b) return d;
  throw std::invalid_argument("cells not adjacent");
}

// 4-bit neighbor occupancy vector, bit i set iff p + eps_i is in the
// configuration; index order E,N,W,S.
struct BoundaryCondition {
  std::uint8_t bits = 0;

  bool has(Dir d) const { return (bits >> static_cast<int>(d)) & 1; }
  void set(Dir d) { bits |= static_cast<std::uint8_t>(1u << static_cast<int>(d)); }

  friend bool operator==(BoundaryCondition a, BoundaryCondition b) { return a.bits == b.bits; }
  friend bool operator!=(BoundaryCondition a, BoundaryCondition b) { return a.bits != b.bits; }

  std::string str() const {
    std::string s = "(";
    for (int i = 0; i < 4; ++i) {
      s += has(static_cast<Dir>(i)) ? '1' : '0';
      if (i < 3) s += ',';
    }
    return s + ")";
  }
};

struct ParseError : std::runtime_error {
  std::size_t pos;
  ParseError(std::string msg, std::size_t at) : std::runtime_error(std::move(msg)), pos(at) {}
};

// First violated invariant, with the offending path indices when they exist.
struct ValidationReport {
  bool ok = true;
  std::string rule;  // "duplicate", "touching", "disconnected", "missing-origin"
  int i = 0, j = 0;

  std::string str() const;
};

struct ValidityError : std::runtime_error {
  ValidationReport report;
  explicit ValidityError(ValidationReport rep)
      : std::runtime_error(rep.str()), report(std::move(rep)) {}
};

// Indexed position sequence p_r .. p_s with p_0 = (0,0). The move strings are
// the canonical representation; coordinates are derived.
class PathConfig {
 public:
  PathConfig() { rebuild(); }
  PathConfig(std::vector<Dir> left, std::vector<Dir> right)
      : left_(std::move(left)), right_(std::move(right)) {
    rebuild();
  }

  const std::vector<Dir>& left_moves() const { return left_; }
  const std::vector<Dir>& right_moves() const { return right_; }

  int r() const { return -static_cast<int>(left_.size()); }
  int s() const { return static_cast<int>(right_.size()); }
  int size() const { return static_cast<int>(left_.size() + right_.size() + 1); }

  Position at(int idx) const { return cells_[idx - r()]; }
  const std::vector<Position>& cells() const { return cells_; }  // p_r .. p_s

  bool contains(Position p) const;
  // Path index of p; requires p in the configuration.
  int index_of(Position p) const;

  // Swap the two hands: the mirrored path has p'_k = p_{-k}.
  PathConfig mirrored() const { return PathConfig(right_, left_); }

  // One of the 8 grid symmetries: rotate by 90*quarter degrees, then
  // optionally reflect across the x axis.
  PathConfig transformed(int quarter, bool reflect) const;

  std::string serialize() const;

 private:
  void rebuild();

  std::vector<Dir> left_, right_;
  std::vector<Position> cells_;
};

// Finite connected set of positions containing the origin. Cells are kept
// sorted so serialization is unique.
class RegionConfig {
 public:
  RegionConfig() : cells_{{0, 0}} {}
  explicit RegionConfig(std::vector<Position> cells);

  const std::vector<Position>& cells() const { return cells_; }
  int size() const { return static_cast<int>(cells_.size()); }
  bool contains(Position p) const;

  std::string serialize() const;

 private:
  std::vector<Position> cells_;
};

using Config = std::variant<PathConfig, RegionConfig>;

const std::vector<Position>& cells_of(const Config& c);
bool config_contains(const Config& c, Position p);
std::string serialize(const Config& c);

ValidationReport validate(const PathConfig& c);
ValidationReport validate(const RegionConfig& c);
ValidationReport validate(const Config& c);

// Parses one record of the text format: "PATH <left>|<right>" with move
// strings over ENWS ('.' for empty), or "REG (x1,y1),(x2,y2),...".
// Throws ParseError on syntax errors and ValidityError on invariant
// violations; parse(serialize(C)) round-trips byte-exactly.
Config parse_config(const std::string& text);

BoundaryCondition boundary_condition(const Config& c, Position p);
BoundaryCondition boundary_condition(const PathConfig& c, Position p);

// Shortest-path length between p and q inside C (|X|-1 for a shortest path X).
int distance(const Config& c, Position p, Position q);
int radius(const Config& c);
int radius(const PathConfig& c);

std::string render_ascii(const Config& c);

// Identity key for configurations. A path and its reversal represent the
// same configuration (left/right come from the representation, not the
// object), so the key is the lexicographic minimum over both readings.
std::string canonical(const Config& c);
std::string canonical(const PathConfig& c);

}  // namespace fssp

#endif  // FSSP_GRID_HPP

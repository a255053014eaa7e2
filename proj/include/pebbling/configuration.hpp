#pragma once

#include <pebbling/errors.hpp>
#include <pebbling/graph.hpp>

#include <charconv>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pebbling {

using PebbleCount = std::uint32_t;

/// Pebble counts per vertex, with the total cached. Value type: moves produce
/// new configurations rather than mutating.
class Configuration {
 public:
  /// Per-vertex ceiling unless overridden.
  static constexpr PebbleCount kDefaultCap = PebbleCount{1} << 16;

  Configuration() = default;

  explicit Configuration(std::vector<PebbleCount> counts, PebbleCount cap = kDefaultCap)
      : counts_(std::move(counts)), cap_(cap) {
    for (std::size_t v = 0; v < counts_.size(); ++v) {
      if (counts_[v] > cap_) {
        throw limit_error("pebble count " + std::to_string(counts_[v]) + " on vertex " +
                          std::to_string(v) + " exceeds cap " + std::to_string(cap_));
      }
      total_ += counts_[v];
    }
  }

  std::size_t size() const noexcept { return counts_.size(); }
  std::uint64_t total() const noexcept { return total_; }
  PebbleCount cap() const noexcept { return cap_; }
  std::span<const PebbleCount> counts() const noexcept { return counts_; }

  PebbleCount operator[](VertexId v) const { return at(v.index()); }
  PebbleCount at(std::uint32_t v) const {
    if (v >= counts_.size()) throw usage_error("vertex " + std::to_string(v) + " outside configuration");
    return counts_[v];
  }

  /// Copy with `extra` more pebbles on v.
  Configuration with_added(VertexId v, PebbleCount extra = 1) const {
    auto counts = counts_;
    if (v.index() >= counts.size()) throw usage_error("vertex outside configuration");
    counts[v.index()] += extra;
    return Configuration(std::move(counts), cap_);
  }

  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.counts_ == b.counts_;
  }

 private:
  std::vector<PebbleCount> counts_;
  std::uint64_t total_ = 0;
  PebbleCount cap_ = kDefaultCap;
};

struct Move {
  VertexId source;
  VertexId destination;

  friend constexpr bool operator==(const Move&, const Move&) = default;
};

enum class GoalMode { AtLeastOne, ExactlyOne };

inline std::string to_string(GoalMode mode) {
  return mode == GoalMode::AtLeastOne ? "at-least-one" : "exactly-one";
}

inline std::optional<GoalMode> parse_goal_mode(std::string_view text) {
  if (text == "at-least-one") return GoalMode::AtLeastOne;
  if (text == "exactly-one") return GoalMode::ExactlyOne;
  return std::nullopt;
}

inline std::string to_string(const Move& m) {
  return "(" + std::to_string(m.source.index()) + "→" + std::to_string(m.destination.index()) + ")";
}

inline void check_sized_for(const Graph& g, const Configuration& c) {
  if (c.size() != g.order()) {
    throw usage_error("configuration has " + std::to_string(c.size()) + " entries but graph has " +
                      std::to_string(g.order()) + " vertices");
  }
}

/// Ascending source, then ascending destination.
inline std::vector<Move> legal_moves(const Graph& g, const Configuration& c) {
  check_sized_for(g, c);
  std::vector<Move> out;
  for (std::uint32_t u = 0; u < g.order(); ++u) {
    if (c.at(u) < 2) continue;
    for (VertexId v : neighbors(g, VertexId{u})) out.push_back({VertexId{u}, v});
  }
  return out;
}

inline bool is_legal(const Graph& g, const Configuration& c, const Move& m) {
  check_sized_for(g, c);
  return m.source.index() < g.order() && m.destination.index() < g.order() &&
         m.source != m.destination && g.adjacent(m.source, m.destination) && c[m.source] >= 2;
}

inline Configuration apply_move(const Graph& g, const Configuration& c, const Move& m) {
  if (!is_legal(g, c, m)) throw usage_error("illegal move " + to_string(m));
  std::vector<PebbleCount> counts(c.counts().begin(), c.counts().end());
  counts[m.source.index()] -= 2;
  counts[m.destination.index()] += 1;
  return Configuration(std::move(counts), c.cap());
}

inline bool is_goal(const Configuration& c, VertexId target, GoalMode mode) {
  const PebbleCount on_target = c[target];
  return mode == GoalMode::AtLeastOne ? on_target >= 1 : on_target == 1;
}

/// "c0,c1,..." with index = vertex label.
inline std::string format_configuration(std::span<const PebbleCount> counts) {
  std::string out;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(counts[i]);
  }
  return out;
}

inline std::string format_configuration(const Configuration& c) { return format_configuration(c.counts()); }

inline Configuration parse_configuration(std::string_view text,
                                         PebbleCount cap = Configuration::kDefaultCap) {
  std::vector<PebbleCount> counts;
  std::size_t pos = 0;
  while (true) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    std::uint64_t value = 0;
    const char* first = text.data() + pos;
    auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), value);
    if (ec == std::errc::result_out_of_range) throw parse_error("configuration: count too large", pos);
    if (ec != std::errc{} || ptr == first) throw parse_error("configuration: expected a count", pos);
    if (value > cap) {
      throw limit_error("pebble count " + std::to_string(value) + " exceeds cap " + std::to_string(cap));
    }
    counts.push_back(static_cast<PebbleCount>(value));
    pos = static_cast<std::size_t>(ptr - text.data());
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos == text.size()) break;
    if (text[pos] != ',') throw parse_error("configuration: expected ','", pos);
    ++pos;
  }
  return Configuration(std::move(counts), cap);
}

/// Pins counts[target] to a fixed value during enumeration.
struct TargetConstraint {
  VertexId target;
  PebbleCount count = 0;
};

/// Walks all compositions of `total` into `n` nonnegative parts in descending
/// lexicographic order ([t,0,...] first, [...,0,t] last), optionally with one
/// coordinate pinned.
class CompositionCursor {
 public:
  CompositionCursor(std::uint32_t n, std::uint64_t total, std::optional<TargetConstraint> constraint = {})
      : counts_(n, 0) {
    if (n < 1) throw usage_error("configurations need at least one vertex");
    std::uint64_t free_total = total;
    for (std::uint32_t v = 0; v < n; ++v) {
      if (constraint && constraint->target.index() == v) continue;
      free_.push_back(v);
    }
    if (constraint) {
      if (constraint->target.index() >= n) throw usage_error("constraint vertex out of range");
      if (constraint->count > total) {
        done_ = true;
        return;
      }
      counts_[constraint->target.index()] = constraint->count;
      free_total -= constraint->count;
    }
    if (free_.empty()) {
      done_ = free_total != 0;
      return;
    }
    if (free_total > Configuration::kDefaultCap) {
      throw limit_error("configuration size too large to enumerate");
    }
    counts_[free_.front()] = static_cast<PebbleCount>(free_total);
  }

  bool done() const noexcept { return done_; }
  std::span<const PebbleCount> counts() const noexcept { return counts_; }

  void advance() {
    if (free_.size() < 2) {
      done_ = true;
      return;
    }
    // Rightmost free slot (other than the last) holding a pebble.
    std::size_t j = free_.size() - 1;
    while (j-- > 0) {
      if (counts_[free_[j]] > 0) break;
    }
    if (j == static_cast<std::size_t>(-1)) {
      done_ = true;
      return;
    }
    PebbleCount moved = 1;
    counts_[free_[j]] -= 1;
    for (std::size_t k = j + 1; k < free_.size(); ++k) {
      moved += counts_[free_[k]];
      counts_[free_[k]] = 0;
    }
    counts_[free_[j + 1]] = moved;
  }

 private:
  std::vector<PebbleCount> counts_;
  std::vector<std::uint32_t> free_;
  bool done_ = false;
};

/// Restartable input range over configurations of size t on n vertices.
class ConfigurationRange {
 public:
  ConfigurationRange(std::uint32_t n, std::uint64_t t, std::optional<TargetConstraint> constraint = {})
      : n_(n), t_(t), constraint_(constraint) {}

  class iterator {
   public:
    using value_type = Configuration;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(CompositionCursor cursor) : cursor_(std::move(cursor)) {}

    Configuration operator*() const {
      auto c = cursor_->counts();
      return Configuration(std::vector<PebbleCount>(c.begin(), c.end()));
    }
    iterator& operator++() {
      cursor_->advance();
      return *this;
    }
    void operator++(int) { ++*this; }
    bool operator==(std::default_sentinel_t) const { return !cursor_ || cursor_->done(); }

   private:
    std::optional<CompositionCursor> cursor_;
  };

  iterator begin() const { return iterator(CompositionCursor(n_, t_, constraint_)); }
  std::default_sentinel_t end() const { return {}; }

 private:
  std::uint32_t n_;
  std::uint64_t t_;
  std::optional<TargetConstraint> constraint_;
};

inline ConfigurationRange enumerate_configurations(std::uint32_t n, std::uint64_t t,
                                                   std::optional<TargetConstraint> constraint = {}) {
  return ConfigurationRange(n, t, constraint);
}

}  // namespace pebbling

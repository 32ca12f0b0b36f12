#include "gsembed/hset.hpp"

#include <algorithm>
#include <cstddef>
#include <queue>
#include <string>
#include <utility>

#include "gsembed/errors.hpp"

namespace gsembed {

namespace {

// Shortlex on serializations: length first, then byte order.  This is the
// canonical order restricted to sets.
bool shortlex_less(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

HSet HSet::atom(int index) {
  if (index < 0) throw input_error("atom index is negative");
  HSet h;
  h.atom_ = index;
  h.ser_ = "A" + std::to_string(index);
  return h;
}

HSet HSet::set(std::vector<HSet> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  std::string ser = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) ser += ",";
    ser += members[i].ser_;
  }
  ser += "}";
  HSet h;
  h.members_ = std::move(members);
  h.ser_ = std::move(ser);
  return h;
}

const HSet& HSet::empty_set() {
  static const HSet empty = HSet::set({});
  return empty;
}

bool HSet::contains(const HSet& member) const {
  return std::binary_search(members_.begin(), members_.end(), member);
}

bool HSet::operator<(const HSet& other) const {
  if (is_atom() != other.is_atom()) return is_atom();  // atoms precede sets
  if (is_atom()) return atom_ < other.atom_;
  return shortlex_less(ser_, other.ser_);
}

bool has_level(const HSet& h, int n) {
  if (h.is_atom()) return n == 0;
  if (n < 1) return false;
  for (const HSet& m : h.members())
    if (!has_level(m, n - 1)) return false;
  return true;
}

HSet apply_bijection(const HSet& h, const Perm& f) {
  if (!is_permutation(f))
    throw input_error("atom relabeling is not a bijection");
  struct Rec {
    const Perm& f;
    HSet run(const HSet& h) const {
      if (h.is_atom()) {
        if (h.atom_index() >= static_cast<int>(f.size()))
          throw input_error("atom index outside the bijection's domain");
        return HSet::atom(f[h.atom_index()]);
      }
      std::vector<HSet> members;
      members.reserve(h.members().size());
      for (const HSet& m : h.members()) members.push_back(run(m));
      return HSet::set(std::move(members));
    }
  };
  return Rec{f}.run(h);
}

HSet act(int g, const HSet& h, const GSet& m) {
  if (g < 0 || g >= m.group()->order())
    throw input_error("group element out of range");
  return apply_bijection(h, m.action()[g]);
}

HSet kuratowski_pair(const HSet& a, const HSet& b) {
  return HSet::set({HSet::set({a}), HSet::set({a, b})});
}

HSet wrap_singletons(const HSet& h, int k) {
  if (k < 0) throw input_error("negative wrap count");
  HSet out = h;
  for (int i = 0; i < k; ++i) out = HSet::set({std::move(out)});
  return out;
}

std::string canonical_serialize(const HSet& h) { return h.serialization(); }

namespace {

HSet parse_rec(const std::string& text, std::size_t& pos) {
  if (pos >= text.size()) throw input_error("unexpected end of hset text");
  if (text[pos] == 'A') {
    ++pos;
    std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == start) throw input_error("atom without an index");
    return HSet::atom(std::stoi(text.substr(start, pos - start)));
  }
  if (text[pos] == '{') {
    ++pos;
    std::vector<HSet> members;
    if (pos < text.size() && text[pos] == '}') {
      ++pos;
      return HSet::set({});
    }
    while (true) {
      members.push_back(parse_rec(text, pos));
      if (pos >= text.size()) throw input_error("unterminated set");
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (text[pos] == '}') {
        ++pos;
        return HSet::set(std::move(members));
      }
      throw input_error("unexpected character in set at position " +
                        std::to_string(pos));
    }
  }
  throw input_error("unexpected character at position " + std::to_string(pos));
}

}  // namespace

HSet parse_hset(const std::string& text) {
  std::size_t pos = 0;
  HSet h = parse_rec(text, pos);
  if (pos != text.size())
    throw input_error("trailing characters after hset text");
  return h;
}

std::optional<int> PowerGSet::index_of(const HSet& h) const {
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i] == h) return static_cast<int>(i);
  return std::nullopt;
}

PowerGSet base_power(const GSet& m) {
  PowerGSet out;
  out.gset = m;
  out.points.reserve(m.size());
  for (int p = 0; p < m.size(); ++p) out.points.push_back(HSet::atom(p));
  out.level = 0;
  return out;
}

PowerGSet power_object(const PowerGSet& y, int max_points) {
  const int n = y.gset.size();
  if (n >= 31 || (1 << n) > max_points)
    throw capacity_error("power object would have 2^" + std::to_string(n) +
                         " points, beyond the guard of " +
                         std::to_string(max_points));
  const int size = 1 << n;
  const GroupPtr& group = y.gset.group();

  std::vector<HSet> points;
  points.reserve(size);
  for (int mask = 0; mask < size; ++mask) {
    std::vector<HSet> members;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) members.push_back(y.points[i]);
    points.push_back(HSet::set(std::move(members)));
  }

  std::vector<std::vector<int>> action(group->order(),
                                       std::vector<int>(size));
  for (int g = 0; g < group->order(); ++g)
    for (int mask = 0; mask < size; ++mask) {
      int image = 0;
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) image |= 1 << y.gset.act(g, i);
      action[g][mask] = image;
    }

  std::vector<std::string> labels;
  labels.reserve(size);
  for (const HSet& p : points) labels.push_back(p.serialization());

  PowerGSet out;
  out.gset = GSet::make(group, size, std::move(action), std::move(labels));
  out.points = std::move(points);
  out.level = y.level + 1;
  return out;
}

std::vector<HSet> level_universe(int m, int level, int max_points) {
  if (m < 0 || level < 0) throw input_error("negative universe parameters");
  if (level == 0) {
    std::vector<HSet> atoms;
    atoms.reserve(m);
    for (int i = 0; i < m; ++i) atoms.push_back(HSet::atom(i));
    return atoms;
  }
  std::vector<HSet> prev = level_universe(m, level - 1, max_points);
  const int n = static_cast<int>(prev.size());
  if (n >= 31 || (1 << n) > max_points)
    throw capacity_error("level " + std::to_string(level) +
                         " universe would have 2^" + std::to_string(n) +
                         " elements, beyond the guard");
  std::vector<HSet> out;
  out.reserve(1 << n);
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<HSet> members;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) members.push_back(prev[i]);
    out.push_back(HSet::set(std::move(members)));
  }
  return out;
}

// Lazy enumeration of one level's universe in shortlex order.
//
// The universe of level L >= 1 is the set of all finite subsets of the
// level L-1 universe.  Subsets are generated Dijkstra-style from the empty
// set with two successor moves on the sorted member-position list
// {p_1 < ... < p_r} over the child stream:
//
//   extend:  append position p_r + 1
//   bump:    replace p_r by p_r + 1
//
// Every subset is reachable exactly once (the predecessor is recovered by
// undoing the move that produced p_r), and both moves strictly increase
// the shortlex key of the serialization because the child stream itself is
// nondecreasing in shortlex.  Popping a min-heap keyed by the serialization
// therefore yields the universe in shortlex order, materializing only what
// is pulled.
struct LevelEnumerator::Impl {
  int m = 0;
  int level = 0;
  std::vector<HSet> memo;
  bool exhausted = false;

  // level >= 1 machinery
  std::unique_ptr<LevelEnumerator> child;
  struct State {
    std::vector<int> positions;
    std::vector<HSet> members;  // aligned with positions
    HSet value;
  };
  struct StateOrder {
    bool operator()(const State& a, const State& b) const {
      // std::priority_queue is a max-heap; invert for shortlex-min first.
      return shortlex_less(b.value.serialization(), a.value.serialization());
    }
  };
  std::priority_queue<State, std::vector<State>, StateOrder> heap;

  Impl(int m_in, int level_in) : m(m_in), level(level_in) {
    if (level >= 1) {
      child = std::make_unique<LevelEnumerator>(m, level - 1);
      heap.push(State{{}, {}, HSet::empty_set()});
    }
  }

  void push_with(const State& base, bool bump, const HSet& next_member) {
    State s;
    s.positions = base.positions;
    s.members = base.members;
    if (bump) {
      s.positions.back() += 1;
      s.members.back() = next_member;
    } else {
      s.positions.push_back(base.positions.empty() ? 0
                                                   : base.positions.back() + 1);
      s.members.push_back(next_member);
    }
    s.value = HSet::set(s.members);
    heap.push(std::move(s));
  }

  void produce_next() {
    if (level == 0) {
      if (static_cast<int>(memo.size()) >= m) {
        exhausted = true;
        return;
      }
      memo.push_back(HSet::atom(static_cast<int>(memo.size())));
      return;
    }
    if (heap.empty()) {
      exhausted = true;
      return;
    }
    State top = heap.top();
    heap.pop();
    memo.push_back(top.value);
    const int next_pos =
        top.positions.empty() ? 0 : top.positions.back() + 1;
    std::optional<HSet> next_member = child->at(next_pos);
    if (next_member) {
      push_with(top, /*bump=*/false, *next_member);
      if (!top.positions.empty()) push_with(top, /*bump=*/true, *next_member);
    }
  }
};

LevelEnumerator::LevelEnumerator(int m, int level)
    : impl_(std::make_unique<Impl>(m, level)) {
  if (m < 0 || level < 0) throw input_error("negative enumerator parameters");
}

LevelEnumerator::~LevelEnumerator() = default;
LevelEnumerator::LevelEnumerator(LevelEnumerator&&) noexcept = default;
LevelEnumerator& LevelEnumerator::operator=(LevelEnumerator&&) noexcept =
    default;

std::optional<HSet> LevelEnumerator::at(std::size_t i) {
  while (impl_->memo.size() <= i && !impl_->exhausted) impl_->produce_next();
  if (i < impl_->memo.size()) return impl_->memo[i];
  return std::nullopt;
}

}  // namespace gsembed

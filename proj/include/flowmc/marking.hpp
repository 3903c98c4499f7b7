#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace flowmc {

// Set of occupied places of a safe net, as a bitset over place indices.
class Marking {
 public:
  Marking() = default;
  explicit Marking(std::size_t nplaces) : n_(nplaces), w_((nplaces + 63) / 64, 0) {}

  std::size_t size() const { return n_; }

  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  void set(std::size_t i, bool v = true) {
    std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (v)
      w_[i >> 6] |= bit;
    else
      w_[i >> 6] &= ~bit;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w_) c += static_cast<std::size_t>(__builtin_popcountll(x));
    return c;
  }

  // Occupied indices in increasing order.
  std::vector<int> indices() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < n_; ++i)
      if (test(i)) out.push_back(static_cast<int>(i));
    return out;
  }

  bool operator==(const Marking& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const Marking& o) const { return !(*this == o); }

  std::size_t hash() const {
    std::size_t h = n_;
    for (auto x : w_) h = h * 1099511628211ull ^ x;
    return h;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct MarkingHash {
  std::size_t operator()(const Marking& m) const { return m.hash(); }
};

}  // namespace flowmc

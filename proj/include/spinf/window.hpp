#pragma once

#include <stdexcept>
#include <vector>

namespace spinf {

// Symmetric nonzero-index window {-N,...,-1,1,...,N}. Slot layout is negatives
// ascending first, then positives ascending: slot(-N)=0, slot(-1)=N-1,
// slot(1)=N, slot(N)=2N-1. Index 0 does not exist.
class ModeWindow {
 public:
  explicit ModeWindow(int N) : N_(N) {
    if (N < 1) throw std::invalid_argument("ModeWindow: N must be >= 1");
  }

  int N() const { return N_; }
  int size() const { return 2 * N_; }

  int slot(int m) const {
    check_index(m);
    return m < 0 ? m + N_ : N_ + m - 1;
  }

  int index_at(int s) const {
    if (s < 0 || s >= 2 * N_) throw std::out_of_range("ModeWindow: bad slot");
    return s < N_ ? s - N_ : s - N_ + 1;
  }

  bool contains(int m) const { return m != 0 && m >= -N_ && m <= N_; }

  void check_index(int m) const {
    if (!contains(m)) throw std::out_of_range("ModeWindow: index outside window");
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(2 * N_);
    for (int m = -N_; m <= N_; ++m)
      if (m != 0) out.push_back(m);
    return out;
  }

  bool operator==(const ModeWindow& o) const { return N_ == o.N_; }
  bool operator!=(const ModeWindow& o) const { return N_ != o.N_; }

 private:
  int N_;
};

inline int sgn(int m) { return m > 0 ? 1 : (m < 0 ? -1 : 0); }

}  // namespace spinf

#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cpmc {

// Exact weight of the form c0 + c1*eps + c2*eps^2 + ... for a formal
// infinitesimal eps > 0, plus a distinguished Infinite element that
// absorbs addition and dominates every finite value.  Comparison is
// lexicographic on the coefficient vector, which equals the numeric
// order of the polynomials for every sufficiently small eps.
//
// Only +, -, min and comparisons are ever needed (augmenting-path flow,
// Dijkstra, subset sums), so coefficients stay integral and exact.
class PerturbedWeight {
 public:
  PerturbedWeight() : coeffs_{0} {}

  static PerturbedWeight finite(std::int64_t base) {
    PerturbedWeight w;
    w.coeffs_[0] = base;
    return w;
  }

  // base + eps^rank, rank >= 1.
  static PerturbedWeight with_eps(std::int64_t base, int rank) {
    if (rank < 1) throw std::invalid_argument("eps rank must be >= 1");
    PerturbedWeight w;
    w.coeffs_.assign(static_cast<std::size_t>(rank) + 1, 0);
    w.coeffs_[0] = base;
    w.coeffs_[static_cast<std::size_t>(rank)] = 1;
    return w;
  }

  static PerturbedWeight infinite() {
    PerturbedWeight w;
    w.infinite_ = true;
    w.coeffs_.clear();
    return w;
  }

  static PerturbedWeight zero() { return finite(0); }

  bool is_infinite() const { return infinite_; }
  bool is_zero() const { return !infinite_ && coeffs_.size() == 1 && coeffs_[0] == 0; }
  bool is_positive() const {
    if (infinite_) return true;
    for (std::int64_t c : coeffs_)
      if (c != 0) return c > 0;
    return false;
  }
  bool is_negative() const { return !infinite_ && !is_zero() && !is_positive(); }

  std::int64_t base() const {
    if (infinite_) throw std::logic_error("base() of infinite weight");
    return coeffs_[0];
  }

  std::int64_t coeff(int rank) const {
    if (infinite_) throw std::logic_error("coeff() of infinite weight");
    if (rank < 0) throw std::invalid_argument("negative rank");
    auto r = static_cast<std::size_t>(rank);
    return r < coeffs_.size() ? coeffs_[r] : 0;
  }

  int max_rank() const {
    if (infinite_) throw std::logic_error("max_rank() of infinite weight");
    return static_cast<int>(coeffs_.size()) - 1;
  }

  // Sparse (rank, coeff) pairs with nonzero coeff, rank >= 1.
  std::vector<std::pair<int, std::int64_t>> eps_terms() const {
    if (infinite_) throw std::logic_error("eps_terms() of infinite weight");
    std::vector<std::pair<int, std::int64_t>> out;
    for (std::size_t r = 1; r < coeffs_.size(); ++r)
      if (coeffs_[r] != 0) out.emplace_back(static_cast<int>(r), coeffs_[r]);
    return out;
  }

  PerturbedWeight& operator+=(const PerturbedWeight& o) {
    if (infinite_ || o.infinite_) {
      *this = infinite();
      return *this;
    }
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  // Infinite - finite stays Infinite; finite - Infinite has no meaning here.
  PerturbedWeight& operator-=(const PerturbedWeight& o) {
    if (o.infinite_) {
      if (!infinite_) throw std::logic_error("finite minus infinite");
      return *this;  // infinite - infinite: keep infinite (only used to cancel saturation)
    }
    if (infinite_) return *this;
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  friend PerturbedWeight operator+(PerturbedWeight a, const PerturbedWeight& b) {
    a += b;
    return a;
  }
  friend PerturbedWeight operator-(PerturbedWeight a, const PerturbedWeight& b) {
    a -= b;
    return a;
  }

  friend bool operator==(const PerturbedWeight& a, const PerturbedWeight& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.coeffs_ == b.coeffs_;  // both trimmed
  }
  friend bool operator!=(const PerturbedWeight& a, const PerturbedWeight& b) { return !(a == b); }

  friend bool operator<(const PerturbedWeight& a, const PerturbedWeight& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t ca = i < a.coeffs_.size() ? a.coeffs_[i] : 0;
      std::int64_t cb = i < b.coeffs_.size() ? b.coeffs_[i] : 0;
      if (ca != cb) return ca < cb;
    }
    return false;
  }
  friend bool operator>(const PerturbedWeight& a, const PerturbedWeight& b) { return b < a; }
  friend bool operator<=(const PerturbedWeight& a, const PerturbedWeight& b) { return !(b < a); }
  friend bool operator>=(const PerturbedWeight& a, const PerturbedWeight& b) { return !(a < b); }

  std::string to_string() const {
    if (infinite_) return "inf";
    std::string s = std::to_string(coeffs_[0]);
    for (std::size_t r = 1; r < coeffs_.size(); ++r) {
      if (coeffs_[r] == 0) continue;
      s += coeffs_[r] > 0 ? "+" : "-";
      std::int64_t c = coeffs_[r] > 0 ? coeffs_[r] : -coeffs_[r];
      if (c != 1) s += std::to_string(c);
      s += "e" + std::to_string(r);
    }
    return s;
  }

 private:
  void trim() {
    while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<std::int64_t> coeffs_;  // empty iff infinite
  bool infinite_ = false;
};

inline const PerturbedWeight& min(const PerturbedWeight& a, const PerturbedWeight& b) {
  return b < a ? b : a;
}

}  // namespace cpmc

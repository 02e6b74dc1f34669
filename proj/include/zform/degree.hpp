#ifndef ZFORM_DEGREE_HPP
#define ZFORM_DEGREE_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace zform {

struct degree_mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Element of Z_2^n. The length n is fixed at construction; all binary
/// operations require equal lengths.
class Degree {
public:
  Degree() = default;
  explicit Degree(std::vector<uint8_t> bits) : bits_(std::move(bits)) {
    for (auto &b : bits_) b &= 1;
  }
  Degree(std::initializer_list<int> bits) {
    bits_.reserve(bits.size());
    for (int b : bits) bits_.push_back(static_cast<uint8_t>(b & 1));
  }
  static Degree zero(int n) { return Degree(std::vector<uint8_t>(n, 0)); }

  int size() const { return static_cast<int>(bits_.size()); }
  int bit(int i) const { return bits_[i]; }
  bool is_zero() const {
    for (auto b : bits_) if (b) return false;
    return true;
  }

  Degree operator+(const Degree &o) const {
    check(o);
    std::vector<uint8_t> r(bits_.size());
    for (size_t i = 0; i < bits_.size(); ++i) r[i] = bits_[i] ^ o.bits_[i];
    return Degree(std::move(r));
  }

  /// Standard scalar product over the integers (not mod 2).
  int dot(const Degree &o) const {
    check(o);
    int s = 0;
    for (size_t i = 0; i < bits_.size(); ++i) s += bits_[i] * o.bits_[i];
    return s;
  }

  bool operator==(const Degree &o) const { return bits_ == o.bits_; }
  /// Lexicographic order: for n=2 this is (0,0) < (0,1) < (1,0) < (1,1).
  std::strong_ordering operator<=>(const Degree &o) const {
    return bits_ <=> o.bits_;
  }

  std::string str() const;

private:
  void check(const Degree &o) const {
    if (bits_.size() != o.bits_.size())
      throw degree_mismatch("degree length mismatch: " + std::to_string(bits_.size()) +
                            " vs " + std::to_string(o.bits_.size()));
  }
  std::vector<uint8_t> bits_;
};

/// (-1)^{<a,b>}
inline int koszul_sign(const Degree &a, const Degree &b) {
  return (a.dot(b) % 2 == 0) ? 1 : -1;
}

/// A coordinate of degree a squares to zero iff <a,a> is odd.
inline bool is_nilpotent_degree(const Degree &a) { return a.dot(a) % 2 == 1; }

} // namespace zform

#endif

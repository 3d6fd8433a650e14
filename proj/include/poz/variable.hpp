#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

namespace poz {

/// Kind of a polynomial variable. Particles are the physical variables z^(a)_i;
/// offsets are the relative coordinates xi_i introduced by a fusion; scratch
/// variables are fresh indeterminates used internally (translations, order
/// probes).
enum class VarKind : std::uint8_t { particle = 0, offset = 1, scratch = 2 };

/// A variable identified by (kind, weight, index), packed into one 64-bit key
/// whose natural integer order is the canonical variable order: particles
/// first by descending weight then ascending index, then offsets, then
/// scratch variables.
class Variable {
public:
  static constexpr std::uint32_t kMaxWeight = (1u << 24) - 1;
  static constexpr std::uint32_t kMaxIndex = (1u << 31) - 1;

  constexpr Variable() = default;

  static Variable particle(std::uint32_t weight, std::uint32_t index);
  static Variable offset(std::uint32_t index);
  static Variable scratch(std::uint32_t index);
  static constexpr Variable from_key(std::uint64_t key) { return Variable(key); }

  constexpr std::uint64_t key() const { return key_; }
  constexpr VarKind kind() const { return static_cast<VarKind>(key_ >> 56); }
  constexpr std::uint32_t weight() const {
    return kind() == VarKind::particle
               ? kMaxWeight - static_cast<std::uint32_t>((key_ >> 32) & kMaxWeight)
               : 0;
  }
  constexpr std::uint32_t index() const { return static_cast<std::uint32_t>(key_ & 0xffffffffu); }
  constexpr bool is_particle() const { return kind() == VarKind::particle; }

  /// Textual form used by the printer and accepted by the parser:
  /// z[i] (weight 1), z[a,i], xi[i], t[i].
  std::string name() const;

  friend constexpr auto operator<=>(Variable, Variable) = default;

private:
  constexpr explicit Variable(std::uint64_t key) : key_(key) {}
  std::uint64_t key_ = 0;
};

inline Variable z(std::uint32_t index) { return Variable::particle(1, index); }
inline Variable z(std::uint32_t weight, std::uint32_t index) {
  return Variable::particle(weight, index);
}

} // namespace poz

template <>
struct std::hash<poz::Variable> {
  std::size_t operator()(poz::Variable v) const noexcept {
    return std::hash<std::uint64_t>{}(v.key());
  }
};

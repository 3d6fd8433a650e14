#include "poz/variable.hpp"

#include "poz/errors.hpp"

namespace poz {

namespace {

std::uint64_t pack(VarKind kind, std::uint32_t weight_field, std::uint32_t index) {
  return (static_cast<std::uint64_t>(kind) << 56) |
         (static_cast<std::uint64_t>(weight_field) << 32) | index;
}

void check_index(std::uint32_t index) {
  if (index > Variable::kMaxIndex) throw PreconditionError("variable index out of range");
}

} // namespace

Variable Variable::particle(std::uint32_t weight, std::uint32_t index) {
  if (weight < 1 || weight > kMaxWeight) throw PreconditionError("particle weight must be >= 1");
  check_index(index);
  return Variable(pack(VarKind::particle, kMaxWeight - weight, index));
}

Variable Variable::offset(std::uint32_t index) {
  check_index(index);
  return Variable(pack(VarKind::offset, 0, index));
}

Variable Variable::scratch(std::uint32_t index) {
  check_index(index);
  return Variable(pack(VarKind::scratch, 0, index));
}

std::string Variable::name() const {
  switch (kind()) {
  case VarKind::particle:
    if (weight() == 1) return "z[" + std::to_string(index()) + "]";
    return "z[" + std::to_string(weight()) + "," + std::to_string(index()) + "]";
  case VarKind::offset:
    return "xi[" + std::to_string(index()) + "]";
  case VarKind::scratch:
    return "t[" + std::to_string(index()) + "]";
  }
  return "?";
}

} // namespace poz

#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace confal {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class VarKind { Del, Lam, Param };

// Three disjoint id ranges: 0 is the derivation symbol d, 1..12 is the fixed
// pool of formal lambda variables (x, y, z, w, v4..v11), ids from kParamBase up
// are symbolic parameters interned in a Context.
struct VarId {
  std::uint32_t id = 0;
  auto operator<=>(const VarId&) const = default;
};

inline constexpr std::uint32_t kLamCount = 12;
inline constexpr std::uint32_t kParamBase = 32;

inline VarKind var_kind(VarId v) {
  if (v.id == 0) return VarKind::Del;
  if (v.id <= kLamCount) return VarKind::Lam;
  return VarKind::Param;
}

// Naming table shared by every expression of one algebra/universe. The d and
// lambda names are fixed; parameters are interned append-only, so a Context
// copy is a cheap shared handle and pointers into it stay valid.
class Context {
 public:
  Context() = default;  // empty: no parameters, compatible with anything
  static Context make() { return Context(std::make_shared<Impl>()); }

  VarId del() const { return VarId{0}; }
  VarId lam(std::uint32_t i) const;

  VarId param(const std::string& name);           // interns
  std::optional<VarId> find(const std::string& name) const;

  std::string name(VarId v) const;
  std::size_t param_count() const { return impl_ ? impl_->names.size() : 0; }
  VarId param_at(std::size_t i) const { return VarId{kParamBase + static_cast<std::uint32_t>(i)}; }

  bool same(const Context& o) const { return impl_ == o.impl_; }
  bool empty() const { return param_count() == 0; }

  // True when one context's parameter list is a prefix of the other's, so the
  // same id always means the same name.
  static bool compatible(const Context& a, const Context& b);
  // The richer of two compatible contexts; throws on a clash.
  static Context join(const Context& a, const Context& b);

  // Interns every parameter of other into *this; returns the id remapping for
  // parameters whose id changed.
  std::map<std::uint32_t, std::uint32_t> absorb(const Context& other);

  static bool reserved(const std::string& name);
  static bool valid_identifier(const std::string& name);

 private:
  struct Impl {
    std::vector<std::string> names;
    std::map<std::string, std::uint32_t> index;
  };
  explicit Context(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<Impl> impl_;
};

}  // namespace confal

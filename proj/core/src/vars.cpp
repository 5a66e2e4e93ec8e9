#include "confal/vars.hpp"

#include <array>

namespace confal {

namespace {
const std::array<std::string, kLamCount> kLamNames = {
    "x", "y", "z", "w", "v4", "v5", "v6", "v7", "v8", "v9", "v10", "v11"};
}

VarId Context::lam(std::uint32_t i) const {
  if (i >= kLamCount) throw Error("lambda variable pool exhausted");
  return VarId{i + 1};
}

VarId Context::param(const std::string& name) {
  if (!valid_identifier(name)) throw Error("invalid parameter name: " + name);
  if (reserved(name)) throw Error("reserved variable name used as parameter: " + name);
  if (!impl_) throw Error("cannot intern parameter into the empty context");
  auto it = impl_->index.find(name);
  if (it != impl_->index.end()) return VarId{kParamBase + it->second};
  std::uint32_t idx = static_cast<std::uint32_t>(impl_->names.size());
  impl_->names.push_back(name);
  impl_->index.emplace(name, idx);
  return VarId{kParamBase + idx};
}

std::optional<VarId> Context::find(const std::string& name) const {
  if (name == "d") return VarId{0};
  for (std::uint32_t i = 0; i < kLamCount; ++i)
    if (name == kLamNames[i]) return VarId{i + 1};
  if (!impl_) return std::nullopt;
  auto it = impl_->index.find(name);
  if (it == impl_->index.end()) return std::nullopt;
  return VarId{kParamBase + it->second};
}

std::string Context::name(VarId v) const {
  if (v.id == 0) return "d";
  if (v.id <= kLamCount) return kLamNames[v.id - 1];
  std::size_t idx = v.id - kParamBase;
  if (!impl_ || idx >= impl_->names.size()) throw Error("variable id not in context");
  return impl_->names[idx];
}

bool Context::compatible(const Context& a, const Context& b) {
  if (a.impl_ == b.impl_ || !a.impl_ || !b.impl_) return true;
  const auto& na = a.impl_->names;
  const auto& nb = b.impl_->names;
  const auto& shorter = na.size() <= nb.size() ? na : nb;
  const auto& longer = na.size() <= nb.size() ? nb : na;
  for (std::size_t i = 0; i < shorter.size(); ++i)
    if (shorter[i] != longer[i]) return false;
  return true;
}

Context Context::join(const Context& a, const Context& b) {
  if (!compatible(a, b)) throw Error("mixing incompatible variable contexts");
  if (!a.impl_) return b;
  if (!b.impl_) return a;
  return a.param_count() >= b.param_count() ? a : b;
}

std::map<std::uint32_t, std::uint32_t> Context::absorb(const Context& other) {
  std::map<std::uint32_t, std::uint32_t> remap;
  for (std::size_t i = 0; i < other.param_count(); ++i) {
    VarId old = other.param_at(i);
    VarId fresh = param(other.name(old));
    if (fresh != old) remap[old.id] = fresh.id;
  }
  return remap;
}

bool Context::reserved(const std::string& name) {
  if (name == "d") return true;
  for (const auto& n : kLamNames)
    if (name == n) return true;
  return false;
}

bool Context::valid_identifier(const std::string& name) {
  if (name.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
  for (char c : name)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

}  // namespace confal

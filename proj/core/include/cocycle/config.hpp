#pragma once

// Pair and cocycle configuration files: `key = "value"` or `key = 123` lines,
// '#' comments. Matrix-valued keys use the matrix literal grammar.
//
//   dimension = 2
//   ring = "ratfun"                  # optional default working ring
//   beta  = "0, i*A, -i*A^-1, 0"     # row: beta(e_i⊗e_j)
//   gamma = "0; i*A; -i*A^-1; 0"     # column; optional, defaults to the inverse form
//   a = "A"                          # optional skein coefficients
//   b = "A^-1"
//
// A cocycle file holds `phi1` (one row of d^2 entries) and `phi2` (d^2 rows),
// or for the bracket pair the four coordinates beta1_xx, beta1_xy, beta1_yx,
// beta1_yy, from which gamma1 follows.

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "cocycle/matrix_io.hpp"
#include "cocycle/switchback.hpp"

namespace cocycle {

class KeyValueConfig {
 public:
  static KeyValueConfig parse(std::string_view text, const std::string& source = "<string>");
  static KeyValueConfig load(const std::string& path);

  bool has(const std::string& key) const { return values_.count(key) > 0; }
  /// Throws Error naming the source when the key is absent.
  const std::string& get(const std::string& key) const;
  std::optional<std::string> find(const std::string& key) const;
  int get_int(const std::string& key) const;
  const std::string& source() const { return source_; }
  /// Throws Error on any key outside `allowed`.
  void require_keys_within(std::initializer_list<std::string_view> allowed) const;

 private:
  std::string source_;
  std::map<std::string, std::string> values_;
  std::map<std::string, std::size_t> lines_;
};

/// The `ring` key of a pair config with any dual prefix dropped, since
/// deformation adds t itself.
std::optional<RingTag> config_ring(const KeyValueConfig& cfg);

template <class S>
struct PairConfig {
  SwitchbackPair<S> pair;
  std::optional<S> a, b;
};

template <class S>
PairConfig<S> pair_from_config(const KeyValueConfig& cfg) {
  cfg.require_keys_within({"dimension", "ring", "beta", "gamma", "a", "b"});
  config_ring(cfg);
  const int d = cfg.get_int("dimension");
  if (d < 1) throw Error(cfg.source() + ": dimension must be positive");
  auto beta = parse_map<S>(cfg.get("beta"), MapShape{d, 2, 0});
  PairConfig<S> out;
  if (auto g = cfg.find("gamma")) {
    out.pair = make_switchback_pair(std::move(beta), parse_map<S>(*g, MapShape{d, 0, 2}));
  } else {
    require_field<S>("deriving gamma from beta");
    out.pair = pair_from_form(Matrix<S>(static_cast<std::size_t>(d), static_cast<std::size_t>(d), beta.matrix().data()));
  }
  if (auto a = cfg.find("a")) out.a = parse_scalar<S>(*a);
  if (auto b = cfg.find("b")) out.b = parse_scalar<S>(*b);
  if (out.a.has_value() != out.b.has_value()) throw Error(cfg.source() + ": give both a and b or neither");
  return out;
}

template <class S>
Cochain2<S> cocycle_from_config(const KeyValueConfig& cfg, int d) {
  cfg.require_keys_within({"phi1", "phi2", "beta1_xx", "beta1_xy", "beta1_yx", "beta1_yy"});
  if (cfg.has("beta1_xx") || cfg.has("beta1_xy") || cfg.has("beta1_yx") || cfg.has("beta1_yy")) {
    if (cfg.has("phi1") || cfg.has("phi2")) throw Error(cfg.source() + ": give phi1/phi2 or the beta1_* coordinates, not both");
    if (d != 2) throw ShapeError(cfg.source() + ": beta1_* coordinates describe a cocycle of the 2-dimensional bracket pair");
    if constexpr (HasVariableA<S>) {
      auto at = [&](const char* k) { return parse_scalar<S>(cfg.get(k)); };
      return bracket_cocycle(at("beta1_xx"), at("beta1_xy"), at("beta1_yx"), at("beta1_yy"));
    } else {
      throw Error(cfg.source() + ": beta1_* coordinates need a ring containing A");
    }
  }
  return Cochain2<S>{parse_map<S>(cfg.get("phi1"), MapShape{d, 2, 0}), parse_map<S>(cfg.get("phi2"), MapShape{d, 0, 2})};
}

}  // namespace cocycle

#pragma once

#include "wshift/measure.hpp"
#include "wshift/weights.hpp"

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace wshift {

// Base sequences. Polynomial coefficients are listed lowest degree first.
struct RationalTailBase {
    std::vector<Rational> numerator;
    std::vector<Rational> denominator;
    std::vector<Rational> prefix;
    long offset = 0;
};

struct MeasureBase {
    std::vector<Atom> atoms;
    std::vector<DensityTerm> density;
};

struct ConstantBase {
    Rational value;
};

struct ExplicitBase {
    std::vector<Rational> prefix;
    Rational then;
};

using BaseSpec = std::variant<RationalTailBase, MeasureBase, ConstantBase, ExplicitBase>;

struct FamilyConfig;

struct BackstepStep {
    Rational s;
};

/// Splits the family into `power` pieces; later transforms act on each.
struct PowerStep {
    std::size_t power;
};

struct PacketStep {
    std::size_t length;
    std::size_t index;
};

struct SchurStep {
    std::shared_ptr<const FamilyConfig> other;
};

using Transform = std::variant<BackstepStep, PowerStep, PacketStep, SchurStep>;

/// A shift family as written in a config file.
struct FamilyConfig {
    BaseSpec base;
    std::vector<Transform> transforms;
};

/// Parses the JSON config format. Every rational is a "p" or "p/q" string.
/// Throws ParseError naming the line (syntax) or the field path (schema).
FamilyConfig parse_family_config(std::string_view text);
FamilyConfig load_family_config(const std::filesystem::path& path);

/// Canonical JSON text; parse_family_config(serialize(c)) reproduces c.
std::string serialize(const FamilyConfig& config);

/// The sequences a config denotes: one, or one per power piece.
struct Family {
    std::vector<WeightSequenceSq> pieces;
};

/// Throws InvalidFamilyError when the config violates a sequence invariant.
Family build_family(const FamilyConfig& config);

/// The Berger measure of the base when it is recognisable and the config has
/// no transforms: measure bases, constant c <= 1 (delta_c), and rational
/// tails (n+c)/(n+c+1) with c > 0 and no prefix (measure c t^(c-1) dt).
std::optional<Measure> known_measure(const FamilyConfig& config);

/// True for the untransformed Bergman tail (n+2)/(n+3) (or its measure 2t dt).
bool is_bergman_family(const FamilyConfig& config);

} // namespace wshift

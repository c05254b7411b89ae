#pragma once

#include <optional>
#include <string>

#include "eqobs/germ.hpp"
#include "eqobs/global.hpp"
#include "eqobs/local.hpp"

namespace eqobs {

/// A germ file, fully built. Warnings from validation are preserved;
/// errors throw ValidationError/ParseError during loading.
struct LoadedGerm {
  std::shared_ptr<const StratGermData> germ;
  std::optional<FormSingularityData> form;
  ValidationReport report;
};

LoadedGerm load_germ_json(const std::string& json_text, const Bounds& bounds = {});
LoadedGerm load_germ_file(const std::string& path, const Bounds& bounds = {});

/// Canonical serialization; parses back to an identical in-memory value.
std::string serialize_germ(const StratGermData& germ, const FormSingularityData* form = nullptr);

struct LoadedVariety {
  std::shared_ptr<const CompactStratVariety> variety;
  std::optional<GlobalFormData> form;
  ValidationReport report;
};

LoadedVariety load_variety_json(const std::string& json_text, const Bounds& bounds = {});
LoadedVariety load_variety_file(const std::string& path, const Bounds& bounds = {});
std::string serialize_variety(const CompactStratVariety& v, const GlobalFormData* form = nullptr);

/// True when the JSON document uses the variety schema (a `kind` field or
/// per-stratum `quotient_euler`).
bool looks_like_variety_json(const std::string& json_text);

/// Burnside ring expressions over a fixed group: integers, `[G/H<o>_<k>]`
/// atoms, `+`, `-`, `*` and parentheses; whitespace-insensitive.
/// A bare integer n means n times the unit class.
BurnsideElement parse_element_expr(const std::string& text, GroupPtr group,
                                   const Bounds& bounds = {});

std::string read_text_file(const std::string& path);

} // namespace eqobs

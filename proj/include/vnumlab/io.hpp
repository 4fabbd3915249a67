#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "vnumlab/compliance.hpp"
#include "vnumlab/filtration.hpp"
#include "vnumlab/ideal.hpp"
#include "vnumlab/subquotient.hpp"
#include "vnumlab/vnumber.hpp"

namespace vnumlab {

using Json = nlohmann::json;

struct FamilyDoc {
  FamilyKind kind = FamilyKind::InModIn1N;
  std::string I;
  std::string a = "1";
  std::optional<std::string> J;
  int n_max = 8;
};

// Input for the `ideal` command: op in {sum, product, intersect, colon,
// saturate, power}; power uses `exponent`, the rest take two ideal names.
struct OperationDoc {
  std::string op;
  std::vector<std::string> args;
  std::uint32_t exponent = 1;
};

struct OptionsDoc {
  int window = 3;
  int s_max = 8;
  std::optional<std::int64_t> degree_bound;
  std::string format = "json";
  std::optional<std::string> out;
};

/// A parsed and fully resolved problem description. Ideal names "1" and "0"
/// are reserved for the unit and zero ideals.
struct ProblemDocument {
  RingPtr ring;
  MonomialIdeal num;
  MonomialIdeal den;
  std::int64_t shift = 0;
  std::map<std::string, MonomialIdeal> ideals;
  std::optional<FamilyDoc> family;
  std::optional<OperationDoc> operation;
  OptionsDoc options;

  // Resolves an ideal name including the reserved ones; Error("unknown-ideal").
  MonomialIdeal ideal(const std::string& name) const;
  Subquotient module() const;
  // Error("missing-family") when the document has no family section.
  FamilySpec family_spec() const;
};

/// Parses a JSON problem document. Failures raise ParseError with a code in
/// {syntax-error, schema-error, unknown-field, unknown-variable,
/// unknown-ideal, unknown-kind, non-positive-weight, invalid-ring,
/// invalid-spec} and the 1-based line/column of the offending token.
ProblemDocument parse_input(std::string_view text);

/// Canonical JSON form: explicit weights, minimal generators in canonical
/// order, sorted keys. parse_input(to_json(d).dump()) reproduces d.
Json to_json(const ProblemDocument& doc);

// ±inf as "inf"/"-inf".
Json to_json(const ExtInt& value);
ExtInt ext_int_from_json(const Json& value);

// Primes as lists of variable names; [] is the zero prime.
Json to_json(const GradedRing& ring, const MonomialPrime& p);
Json to_json(const GradedRing& ring, const AssSet& ass);
Json to_json(const GradedRing& ring, const VReport& report);
Json to_json(const GradedRing& ring, const SeriesPoint& point);
Json to_json(const GradedRing& ring, const InvariantSeries& series);
Json to_json(const LinearLaw& law);
Json to_json(const GradedRing& ring, const DeltaProbe& probe);
Json to_json(const GradedRing& ring, const ComplianceReport& report);

// Inverse of to_json(ring, series); throws on malformed input.
InvariantSeries series_from_json(const GradedRing& ring, const Json& j);

// "(X,Y)"; "(0)" for the zero prime.
std::string prime_label(const GradedRing& ring, const MonomialPrime& p);

// RFC 4180 field quoting.
std::string csv_field(std::string_view text);
// Columns n,indeg,v,ass,v_p:<prime>...,colon_stable with one v_p column per
// prime occurring anywhere in the series.
std::string series_csv(const GradedRing& ring, const InvariantSeries& series);

/// Cache identity: canonical document without n_max and output options.
std::string cache_key(const ProblemDocument& doc);
// 64-bit FNV-1a as 16 hex digits.
std::string fnv1a_hex(std::string_view text);

struct CachedSeries {
  InvariantSeries series;
  int reused_points = 0;  // points taken from the cache
  bool hit = false;
};

/// Evaluates the family of `doc` through an on-disk cache. A cached prefix is
/// extended; entries that fail to parse or belong to another key are ignored.
/// Writes are atomic (temporary file, then rename).
CachedSeries cached_series(const ProblemDocument& doc, const std::filesystem::path& dir);

}  // namespace vnumlab

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "unitri/exotic.hpp"

namespace unitri {

// Insertion-ordered so that output is byte-stable.
using Json = nlohmann::ordered_json;

Json to_json(const Field& field);
// {"m": conductor, "coeffs": [rational strings]}.
Json to_json(const CyclotomicNumber& x);
Json to_json(Position pos);
// [[i, j, c], ...] with c the integer encoding of the field element.
Json to_json(const Functional& lambda);
// {"dim", "basis": [[[i, j, c], ...], ...], "zero_positions": [[i, j], ...]}.
Json subspace_json(const Subspace& s, int n);
Json to_json(const SetPartition& partition);
Json chain_json(const ChainResult& chain, int n);
// Value table with element entries.
Json to_json(const ClassFunction& f);
Json to_json(const LinearityReport& rep);
Json to_json(const ValueField& vf);
Json to_json(const TechnicalReport& rep);
Json to_json(const ASubalgebraReport& rep);
Json to_json(const KappaReport& rep);
Json to_json(const ExoticReport& rep);
Json to_json(const TorusReport& rep);

CyclotomicNumber cyclotomic_from_json(const Json& j);

struct FieldSpec {
  int p = 2;
  int e = 1;
  std::optional<std::vector<int>> modulus;

  Field build() const { return Field::make(p, e, modulus); }
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

// One batch job. Commands: chain, exotic, verify, kappa, orbit, table.
struct JobSpec {
  std::string command;
  FieldSpec field;
  std::optional<int> n;
  std::optional<std::vector<std::array<int, 2>>> pattern;
  std::vector<std::array<long long, 3>> lambda;  // [i, j, c]
  std::optional<int> r;
  std::optional<std::string> which;
  std::optional<std::uint64_t> cap;
  std::optional<std::string> out;

  friend bool operator==(const JobSpec&, const JobSpec&) = default;
};

Json to_json(const JobSpec& job);
// Throws std::invalid_argument on malformed input.
JobSpec job_from_json(const Json& j);

// Entries of lambda for an algebra; validates positions and field encodings.
std::vector<Entry> lambda_entries(const std::vector<std::array<long long, 3>>& raw, const Algebra& algebra);

}  // namespace unitri

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

#include "json.hpp"

#include "bdcoh/brauer.hpp"
#include "bdcoh/cohomology.hpp"
#include "bdcoh/rmatrix.hpp"
#include "bdcoh/triples.hpp"

namespace bdcoh {

using json = nlohmann::ordered_json;

// JSON encodings.
json to_json(const Rational& x);
json to_json(const QuadRational& x);
json to_json(const AdmissibleTriple& t);
json to_json(const RMatrix& r);
json to_json(const CohomologyReport& rep);
json to_json(const BrauerClassDescriptor& desc);
json to_json(const SquareClass& c);

template <class Scalar, int Legs>
json to_json(const Tensor<Scalar, Legs>& t) {
  json out = json::array();
  for (const auto& [k, c] : t.terms()) out.push_back({{"indices", k}, {"scalar", to_json(c)}});
  return out;
}

enum class OutputFormat { Text, Json };

struct CommandRequest {
  std::string subcommand;  // triples, rmatrix, cohomology, total, brauer
  int n = 0;
  bool twistable_only = false;
  std::string triple;
  bool verify = false;
  std::string field = "Q";
  std::string d;
  int classes = 3;
  long d_bound = 10;
  std::string b;
  std::optional<std::pair<std::string, std::string>> compare;
  OutputFormat format = OutputFormat::Text;
  unsigned seed = 1;
};

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerification = 2;

struct Report {
  json request;
  json result;
  json verification = json::array();  // {claim, check, passed}
  std::string text;                   // human-readable rendering
  int exit_code = kExitOk;

  void claim(const std::string& what, const std::string& check, bool passed);
  std::string render(OutputFormat format) const;
};

/// Runs a validated request. Bad arguments throw bdcoh::Error.
Report run(const CommandRequest& request);

/// Full command-line entry point (argument parsing, errors, exit codes).
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bdcoh

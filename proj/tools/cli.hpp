#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "witt/constructions.hpp"
#include "witt/spacefile.hpp"

namespace witt::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "1.0.0";

enum ExitCode : int { kPass = 0, kParse = 2, kValidation = 3, kOutOfReach = 4, kCheckFailed = 5 };

/// Runs one command line; the report goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Simplex ceiling from WITT_SIMPLEX_CEILING (default 5e6).
std::size_t simplex_ceiling();
/// Total simplex count of sd(x), from the f-vector.
std::size_t subdivision_estimate(const SimplicialComplex& x);

/// `make` grammar: sphere(n) | rp2 | rp3 | torus | klein | genus(g) | cp2 | s1 |
/// cone(E) | susp(E) | wedge(E,E) | prod(E,E) | glue(E@v,E@w) | pinch(E@v,w) | sd(E).
/// Throws ParseError with the column of the offending token, OutOfReachError
/// above the ceiling.
SimplicialComplex evaluate_expression(const std::string& expr, std::size_t ceiling);

std::string sha256_hex(const std::string& data);

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};
Json report_json(const std::string& command, const std::string& digest, Json result, const std::vector<Check>& checks);

/// Writes W.scx, one .scx per boundary piece and manifest.json into `dir`.
void write_certificate(const BordismCertificate& cert, const std::filesystem::path& dir);
BordismCertificate read_certificate(const std::filesystem::path& w_file, const std::filesystem::path& manifest);

struct RefereeOptions {
  bool mutate_bockstein = false;
  /// Field for the field-independence subchecks.
  CoefficientSpec coeff = CoefficientSpec::f2();
  std::uint64_t seed = 1;
  bool timing = false;
};
struct RefereeItem {
  int criterion = 0;
  Check check;
  double seconds = 0;
};
/// Replays acceptance items 1 to 13; `progress` (may be null) gets one line per item.
std::vector<RefereeItem> referee(const RefereeOptions& options, std::ostream* progress);

}  // namespace witt::cli

#pragma once

// Verification suites binding the modules to reference data.

#include "pvs/codec.hpp"
#include "pvs/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pvs::verify {

class UnknownSuite : public Error {
 public:
  using Error::Error;
};

enum class Status { Pass, Fail, Mismatch };

struct Outcome {
  std::string suite;
  std::string name;
  int criterion = 0;  ///< acceptance criterion this check feeds, 0 for supporting checks
  Status status = Status::Pass;
  std::string detail;
  json diff;  ///< entry- or term-level differences when status != Pass
  double seconds = 0;
};

struct Options {
  int covariance_samples = 20;
  bool covariance_untransported = true;  ///< also factor each sample without a transport
  std::uint64_t seed = 20261016;
  int random_inputs = 10;
  int oracle_vectors = 1000;
};

const std::vector<std::string>& suite_names();  ///< without "all"
std::vector<Outcome> run(const std::string& suite, const Options& opt = {});

const char* status_name(Status s);
bool all_pass(const std::vector<Outcome>& outcomes);
json to_json(const Outcome& o);

}  // namespace pvs::verify

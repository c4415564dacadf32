#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ore {

struct CheckRecord {
  std::string name;
  std::string instance;
  std::string expected;
  std::string got;
  bool pass = true;
};

// A deterministic check report: individual records for failures (capped per
// check name) plus one aggregate record per check name.  finalize() sorts
// records canonically by (name, instance).
struct Report {
  std::string command;
  std::uint64_t seed = 0;
  std::vector<CheckRecord> records;

  void note(std::string name, std::string instance, std::string expected,
            std::string got, bool pass);
  // Tallies an instance; records detail only on failure (up to 100 per name).
  void check(const std::string &name, const std::string &instance, bool pass,
             const std::string &expected = "true", const std::string &got = "false");
  void merge(const Report &other);
  void finalize();
  bool all_pass() const;
  std::uint64_t total() const;
  std::uint64_t failed() const;

 private:
  struct Tally {
    std::uint64_t pass = 0, fail = 0;
  };
  std::map<std::string, Tally> tallies_;
  bool finalized_ = false;
};

}  // namespace ore

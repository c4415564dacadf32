#include "ore/report.hpp"

#include <algorithm>

namespace ore {

void Report::note(std::string name, std::string instance, std::string expected,
                  std::string got, bool pass) {
  Tally &t = tallies_[name];
  (pass ? t.pass : t.fail)++;
  records.push_back({std::move(name), std::move(instance), std::move(expected),
                     std::move(got), pass});
}

void Report::check(const std::string &name, const std::string &instance, bool pass,
                   const std::string &expected, const std::string &got) {
  Tally &t = tallies_[name];
  if (pass) {
    t.pass++;
    return;
  }
  t.fail++;
  if (t.fail <= 100) records.push_back({name, instance, expected, got, false});
}

void Report::merge(const Report &other) {
  for (const auto &[name, t] : other.tallies_) {
    tallies_[name].pass += t.pass;
    tallies_[name].fail += t.fail;
  }
  for (const CheckRecord &r : other.records) records.push_back(r);
}

void Report::finalize() {
  if (finalized_) return;
  finalized_ = true;
  for (const auto &[name, t] : tallies_) {
    records.push_back({name, "aggregate",
                       std::to_string(t.pass + t.fail) + " pass",
                       std::to_string(t.pass) + " pass, " +
                           std::to_string(t.fail) + " fail",
                       t.fail == 0});
  }
  std::sort(records.begin(), records.end(), [](const auto &a, const auto &b) {
    if (a.name != b.name) return a.name < b.name;
    return a.instance < b.instance;
  });
}

bool Report::all_pass() const {
  for (const auto &[_, t] : tallies_)
    if (t.fail) return false;
  for (const CheckRecord &r : records)
    if (!r.pass) return false;
  return true;
}

std::uint64_t Report::total() const {
  std::uint64_t n = 0;
  for (const auto &[_, t] : tallies_) n += t.pass + t.fail;
  return n;
}

std::uint64_t Report::failed() const {
  std::uint64_t n = 0;
  for (const auto &[_, t] : tallies_) n += t.fail;
  return n;
}

}  // namespace ore

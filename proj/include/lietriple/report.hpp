#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lietriple/exactla.hpp"

namespace lietriple {

struct Witness {
  std::vector<std::size_t> tuple;
  Vector defect;
};

struct AxiomEntry {
  std::string label;
  bool passed = true;
  std::size_t failures = 0;
  std::vector<Witness> witnesses;
};

struct CheckOptions {
  bool exhaustive = false;
};

class AxiomReport {
 public:
  std::vector<AxiomEntry> entries;

  bool passed() const;
  const AxiomEntry* find(const std::string& label) const;
  bool passed(const std::string& label) const;
  std::vector<std::string> failed_labels() const;

  AxiomEntry& open(const std::string& label);
  void record(AxiomEntry& e, const std::vector<std::size_t>& tuple, const Vector& defect,
              const CheckOptions& opt) const;
  // Appends a sub-report as one entry carrying its first failing witness.
  void absorb(const std::string& label, const AxiomReport& sub);
  void append(const AxiomReport& other, const std::string& prefix = "");
};

std::string format_tuple(const std::vector<std::size_t>& tuple);
// "label at (i,j,...)" for each failing entry, comma separated
std::string failure_list(const AxiomReport& r);

}  // namespace lietriple

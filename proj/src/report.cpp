#include "lietriple/report.hpp"

namespace lietriple {

bool AxiomReport::passed() const {
  for (const auto& e : entries)
    if (!e.passed) return false;
  return true;
}

const AxiomEntry* AxiomReport::find(const std::string& label) const {
  for (const auto& e : entries)
    if (e.label == label) return &e;
  return nullptr;
}

bool AxiomReport::passed(const std::string& label) const {
  const AxiomEntry* e = find(label);
  return e == nullptr || e->passed;
}

std::vector<std::string> AxiomReport::failed_labels() const {
  std::vector<std::string> out;
  for (const auto& e : entries)
    if (!e.passed) out.push_back(e.label);
  return out;
}

AxiomEntry& AxiomReport::open(const std::string& label) {
  entries.push_back(AxiomEntry{label, true, 0, {}});
  return entries.back();
}

void AxiomReport::record(AxiomEntry& e, const std::vector<std::size_t>& tuple, const Vector& defect,
                         const CheckOptions& opt) const {
  if (is_zero(defect)) return;
  e.passed = false;
  ++e.failures;
  if (e.witnesses.empty() || opt.exhaustive) e.witnesses.push_back(Witness{tuple, defect});
}

void AxiomReport::absorb(const std::string& label, const AxiomReport& sub) {
  AxiomEntry e{label, true, 0, {}};
  for (const auto& s : sub.entries) {
    if (s.passed) continue;
    if (e.passed && !s.witnesses.empty()) e.witnesses.push_back(s.witnesses.front());
    e.passed = false;
    e.failures += s.failures;
  }
  entries.push_back(std::move(e));
}

void AxiomReport::append(const AxiomReport& other, const std::string& prefix) {
  for (auto e : other.entries) {
    e.label = prefix + e.label;
    entries.push_back(std::move(e));
  }
}

std::string format_tuple(const std::vector<std::size_t>& tuple) {
  std::string s = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(tuple[i]);
  }
  return s + ")";
}

std::string failure_list(const AxiomReport& r) {
  std::string s;
  for (const auto& e : r.entries) {
    if (e.passed) continue;
    if (!s.empty()) s += ", ";
    s += e.label;
    if (!e.witnesses.empty()) s += " at " + format_tuple(e.witnesses.front().tuple);
  }
  return s;
}

}  // namespace lietriple

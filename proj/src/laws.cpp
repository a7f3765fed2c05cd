#include "fibrenrich/laws.hpp"

#include <map>
#include <sstream>

namespace fibrenrich {

std::string law_anchor(const std::string& law) {
  // Anchors group law identifiers by the axiom family they belong to; the
  // frontend surfaces them so report consumers can bucket findings without
  // parsing identifiers. "plumbing" covers reference and shape errors.
  static const std::map<std::string, std::string> exact = {
      {"budget.exceeded", "plumbing"},
  };
  auto it = exact.find(law);
  if (it != exact.end()) return it->second;

  static const std::vector<std::pair<std::string, std::string>> by_prefix = {
      {"ref.", "plumbing"},
      {"category.", "category-laws"},
      {"functor.", "functor-laws"},
      {"nat.", "naturality"},
      {"adjunction.", "triangle-identities"},
      {"padj.", "parameterized-adjunction"},
      {"square.", "commuting-square"},
      {"squareadj.", "map-of-adjunctions"},
      {"winskel.", "adjoint-cartesian-preservation"},
      {"totaladj.", "fibred-adjunction"},
      {"cartesian.", "cartesian-universal-property"},
      {"fib.", "fibration"},
      {"cell.", "fibred-cell"},
      {"ix.", "grothendieck"},
      {"monoidal.", "monoidal-coherence"},
      {"monfun.", "monoidal-functor"},
      {"monfib.", "monoidal-fibration"},
      {"action.", "action-coherence"},
      {"closedfib.", "closed-structure"},
      {"rep.", "action-compatibility"},
      {"enr.", "enriched-category-laws"},
      {"enrfib.", "enriched-fibration"},
      {"enrfun.", "enriched-functor"},
      {"workspace.", "plumbing"},
  };
  for (const auto& [prefix, anchor] : by_prefix) {
    if (law.rfind(prefix, 0) == 0) return anchor;
  }
  return "plumbing";
}

bool LawReport::has(const std::string& law) const { return find(law) != nullptr; }

const Finding* LawReport::find(const std::string& law) const {
  for (const auto& f : findings) {
    if (f.law == law) return &f;
  }
  return nullptr;
}

void LawReport::add(Severity sev, const std::string& law, std::vector<std::string> witness,
                    std::string detail) {
  findings.push_back(Finding{sev, law, law_anchor(law), std::move(witness), std::move(detail)});
}

void LawReport::malformed(const std::string& law, std::vector<std::string> witness,
                          std::string detail) {
  add(Severity::Malformed, law, std::move(witness), std::move(detail));
}

void LawReport::violation(const std::string& law, std::vector<std::string> witness,
                          std::string detail) {
  add(Severity::Violation, law, std::move(witness), std::move(detail));
}

void LawReport::merge(const LawReport& other) {
  findings.insert(findings.end(), other.findings.begin(), other.findings.end());
}

void LawReport::merge_as(const std::string& prefix, const LawReport& other) {
  for (Finding f : other.findings) {
    // The anchor stays what the inner validator assigned: it names the axiom
    // family that actually failed, while the prefix records the call site.
    f.law = prefix + "." + f.law;
    findings.push_back(std::move(f));
  }
}

std::string LawReport::summary() const {
  std::ostringstream out;
  for (const auto& f : findings) {
    out << (f.severity == Severity::Malformed   ? "[malformed] "
            : f.severity == Severity::Budget    ? "[budget] "
                                                : "[violation] ")
        << f.law << " (";
    for (size_t i = 0; i < f.witness.size(); ++i) {
      if (i) out << ", ";
      out << f.witness[i];
    }
    out << ") " << f.detail << "\n";
  }
  return out.str();
}

}  // namespace fibrenrich

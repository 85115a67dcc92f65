#ifndef MEADOW_REPORT_HPP
#define MEADOW_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "meadow/congruence.hpp"
#include "meadow/modelcheck.hpp"
#include "meadow/numberfield.hpp"
#include "meadow/signexp.hpp"

namespace meadow::report {

/// Insertion-ordered JSON so identical reports serialize byte-identically.
using Json = nlohmann::ordered_json;

Json witness(const Meadow& m, const Witness& w);
/// {equation, status, witness?, assignments_checked}; `label` is added when
/// non-empty.
Json verdict(const Meadow& m, const std::string& label, const std::string& equation, const Verdict& v);

/// {operation, meadow, <subject_key>: subject, mode, seed?, verdicts: []}.
Json envelope(const std::string& operation, const std::string& meadow, const std::string& subject_key,
              const std::string& subject, const CheckMode& mode);

Json check(const Meadow& m, const Equation& e, const CheckMode& mode, const Verdict& v);
Json inverse_law(const Meadow& m, const CheckMode& mode, const Verdict& v);
Json theory(const std::string& operation, const Meadow& m, const TheoryReport& r, const CheckMode& mode);
Json combine(const std::vector<Equation>& inputs, const Equation& combined,
             const std::optional<std::pair<const Meadow*, Verdict>>& equivalence);
Json initial_spec(const std::vector<Equation>& eqs, const InitialSpecReport& r);
Json separating_prime(const SeparatingPrimeReport& r);
Json ek(const EkReport& r);
Json initial_equality(const Term& s, const Term& t, const InitialEqualityReport& r);
Json congruences(const Meadow& m, const FiniteAlgebra& alg, const std::string& signature,
                 const std::vector<Congruence>& lattice, bool simple, const SubdirectIrreducibility& si,
                 const std::optional<SubdirectDecomposition>& decomposition,
                 const std::optional<std::pair<std::string, Congruence>>& principal);
Json single_spec(const SingleSpecReport& r);
Json presentation(const PresentationReport& r, std::uint64_t trials);
Json signs(const SignSuiteReport& r, const std::vector<LawReport>& order, const std::optional<TheoryReport>& efr,
           const MeadowPtr& m);
Json eq_meadow(const EqMeadowReport& r);

/// Two-space indented text with a trailing newline.
std::string dump(const Json& j);

}  // namespace meadow::report

#endif  // MEADOW_REPORT_HPP

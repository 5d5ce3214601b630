#pragma once
// Per-dimension elimination pipelines (n = 2..7) producing replayable
// EliminationCertificates. Every arithmetic step records its inputs and the
// evidence recomputed from them; external geometric facts appear only as
// named axiom steps and can be toggled off.

#include "hirz/dioph.hpp"
#include "hirz/genera.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace hirz {

enum class Verdict {
    ProjectiveSpace,
    BallQuotient,
    Eliminated,
    Unresolved,
    EliminatedByExternalAxiom,
};

std::string verdict_name(Verdict v);

// One certificate step. `kind` is one of: congruence, divisor-search,
// square-test, quadratic-roots, inequality, integrality, external-axiom.
// Re-executing `kind` on `inputs` must reproduce `evidence` bit-for-bit.
// `divergence` marks steps where a re-derived quantity disagrees with the
// quoted source value; both versions then appear in the evidence.
struct EliminationStep {
    std::string kind;
    std::string candidate;  // "c1=-8", or "shared" for common steps
    std::string description;
    nlohmann::json inputs;
    nlohmann::json evidence;
    std::string citation;
    bool divergence = false;

    nlohmann::json to_json() const;
    static EliminationStep from_json(const nlohmann::json& j);
};

struct EliminationCertificate {
    int dimension = 0;
    std::vector<Int> raw_candidates;  // divisor/parity/bound list
    std::vector<Int> candidates;      // after any composed modular step
    std::vector<EliminationStep> steps;
    std::map<std::string, std::string> verdicts;  // "c1" -> verdict name
    std::map<std::string, std::string> notes;     // per-candidate remarks
    std::vector<std::string> divergences;
    bool external_axioms_used = true;

    nlohmann::json to_json() const;
    static EliminationCertificate from_json(const nlohmann::json& j);
    std::string render_text() const;
};

// Recompute the evidence for a step kind from its inputs alone. Pure and
// deterministic; certificate generation and replay both go through here.
nlohmann::json execute_step(const std::string& kind,
                            const nlohmann::json& inputs);

struct ReplayResult {
    bool ok = true;
    std::vector<std::string> mismatches;  // step index + field summary
};

ReplayResult replay(const EliminationCertificate& cert);

// Divisors (both signs) of n(n+1)^2/2 consistent with the parity of n+1 and
// the upper bound c1 <= n+1 on the positive side; for n = 2 the stronger
// equality c1^2 = 9, and for n = 5, 7 composed with the first modular step
// (9 | c1 resp. 7 | c1 excluded). Ascending order.
std::vector<Int> initial_c1_candidates(int n);

// Quadratic in c3 obtained from the two dimension-6 elimination equations:
// a2*c3^2 + a1*c3 + a0 = 0 with the source's quoted coefficients, and
// R = c1^2(6758 c1^6 - 40186125), the remainder of 1125*a0 upon division by
// 15 c2 + 8 c1^2 (computed from the re-derived a0; the quoted a2 and a0
// contain typos that the certificate reports).
struct Dim6Quadratic {
    Int a2;   // quoted: 2(15 + 8 c1^2)
    Poly a1;  // -4 c1 c2 (15 c2 + 8 c1^2), polynomial in c2
    Poly a0;  // quoted constant term, polynomial in c2
    Int R;
};

Dim6Quadratic dim6_quadratic_setup(const Int& c1);

// Eq0: -c1^3 c3 + 3 c1 c2 c3 + c1^2 c4 - 3 c3^2 + 3 c2 c4 - 3675 = 0 and
// Eq1: 2 c1^6 - ... - 9 c2 c4 - 60760 = 0, re-derived from genus_table(6)
// with c6 = 7 and c1 c5 = 147 folded in. Over chern_vars(6).
std::pair<Poly, Poly> dim6_elimination_equations();

// The three dimension-7 displays re-derived from genus machinery with
// c7 = 8 and c1 c6 = 224 folded in; lm is 60480 chi(L^m) over
// chern_vars(7, {"m"}).
struct Dim7Equations {
    Poly eq75;
    Poly eq77;
    Poly lm;
};

Dim7Equations dim7_equations();

EliminationCertificate run_dimension(int n, bool use_external_axioms = true);

}  // namespace hirz

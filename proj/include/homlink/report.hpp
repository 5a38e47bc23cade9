#pragma once

#include "homlink/hecke.hpp"
#include "homlink/linkbetti.hpp"

#include <string>
#include <vector>

namespace homlink {

/* Full pipeline output for one closed braid. */
struct LinkReport {
    BraidWord word;
    int strands = 1;
    int components = 0;
    int writhe = 0;
    BettiTable4 betti;
    BettiTable4 betti_reduced;
    PdResult pd;
    PoincarePolynomial P; // unreduced
    std::vector<SplitVerdict> split; // verdicts for n = 1..m
};

LinkReport analyze(const BraidWord& w, int jobs = 1);

std::string report_json(const LinkReport& r);
std::string report_csv(const BettiTable4& t);
std::string report_text(const LinkReport& r, bool reduced);

/* Fit-then-predict against the Hecke oracle. The monomial change of
 * variables is fitted on the unknot and the Hopf link (the unknot pins the
 * global monomial of the transform, the Hopf the rest together with the
 * component-count sign); predictions are then checked exactly on the
 * trefoil and on Hopf ⊔ unknot, where split diagrams carry the documented
 * loop correction (1 - a^-2)^(pieces-1). */
struct OracleFitReport {
    bool pass = false;
    std::string detail;
    std::vector<std::string> lines;
};
OracleFitReport oracle_fit_then_predict();

/* Full oracle-check for one braid: euler identities plus the fitted-oracle
 * comparison on the braid itself. */
OracleFitReport oracle_check(const BraidWord& w, int cutoff = 30);

} // namespace homlink

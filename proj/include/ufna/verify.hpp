#ifndef UFNA_VERIFY_HPP
#define UFNA_VERIFY_HPP

// End-to-end verification pipeline: build the quiver of a presentation
// and machine-check every structural statement the construction rests
// on, degree by degree, emitting a deterministic JSON report. The
// verdict is "pass" iff every theorem-check passed; growth-consistency
// of the coefficient window is reported but is a heuristic, not a
// theorem-check.

#include <cstdint>
#include <string>

#include <json.hpp>

#include "ufna/language.hpp"
#include "ufna/presentation.hpp"

namespace ufna {

struct VerifyOptions {
    int max_degree = 10;
    int m_max = -1;             // -1 means max_degree
    std::uint64_t cap = kDefaultCap;
    std::uint64_t seed = 0;
    int mult_samples = 100;     // random word pairs for the homomorphism check
    int cyclic_samples = 100;   // random paths for the torsion probe
};

struct VerifyResult {
    nlohmann::ordered_json report;
    bool pass = false;
};

// Takes the presentation as parsed (normalization happens inside and is
// echoed in the report). Throws ResourceCapError when a basis outgrows
// opts.cap; never throws on a failed check - that is the verdict's job.
VerifyResult run_verify(const Presentation& input, const VerifyOptions& opts = {});

// Canonical serialized form, newline terminated; two runs with equal
// inputs and options are byte-identical.
std::string report_text(const nlohmann::ordered_json& report);

} // namespace ufna

#endif

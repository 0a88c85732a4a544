#ifndef ARTIN_RENDER_HPP
#define ARTIN_RENDER_HPP

#include <string>

#include "artin/thickening.hpp"
#include "artin/twisted.hpp"
#include "artin/word_problem.hpp"

namespace artin {

// Renderings are deterministic; JSON uses insertion-ordered keys so that a
// parse/re-render round trip is byte-identical.

std::string verdict_line(const PresentationGraph& g, const Verdict& v);
std::string verdict_json(const PresentationGraph& g, const Verdict& v);
Verdict verdict_from_json(const PresentationGraph& g, const std::string& text);

std::string certainty_line(const Certainty& c);
std::string certainty_json(const Certainty& c);

std::string trace_text(const PresentationGraph& g,
                       const std::vector<RewriteStep>& trace);

std::string eligibility_line(const PresentationGraph& g,
                             const EligibilityReport& rep);
std::string eligibility_json(const PresentationGraph& g,
                             const EligibilityReport& rep);

int verdict_exit_code(const Verdict& v);
int certainty_exit_code(const Certainty& c);

}  // namespace artin

#endif

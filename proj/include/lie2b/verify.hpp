#pragma once

#include "lie2b/io.hpp"
#include "lie2b/lie2.hpp"
#include "lie2b/report.hpp"

#include <memory>
#include <optional>
#include <string>

namespace lie2b {

inline constexpr const char* report_schema = "lie2b-report/1";

std::string route_name(Route r);
/// "unfolded", "bracket" or "both"; throws std::invalid_argument otherwise.
Route parse_route(const std::string& text);

/// Runs the declared verification of a structure and records the elapsed time.
/// Kinds without two routes ignore `route` and say so in the notes.
Report verify_structure(const Structure& s, Route route);

/// Re-evaluates reported violations from scratch: unfolded identities through
/// their Identity lists, bracket identities through the coefficient of {e,e}.
class WitnessOracle
{
  public:
	explicit WitnessOracle(const Structure& s);
	/// The recomputed residual, or nullopt for identities without a basis tuple
	/// ("route.agreement") and for unknown names.
	std::optional<std::string> residual(const Violation& v) const;

	struct Data; ///< opaque: the structure and the identity lists built on it

  private:
	std::shared_ptr<const Data> data_;
};

/// Human-readable report.
std::string report_text(const Report& r, const std::string& kind, Route route);
/// Versioned JSON report: schema, structure, route, verdict, classification,
/// violations [{identity, tuple, residual}], notes, seconds. Sorted keys.
std::string report_machine(const Report& r, const std::string& kind, Route route);

} // namespace lie2b

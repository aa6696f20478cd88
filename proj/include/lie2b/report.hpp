#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace lie2b {

/// One failed instance of a named identity.
struct Violation
{
	std::string identity;
	std::vector<std::string> tuple; ///< basis labels, e.g. {"x0", "u1"}
	std::string residual;           ///< exact nonzero residual, canonical text

	friend bool operator==(const Violation&, const Violation&) = default;
};

struct Report
{
	bool pass = true;
	std::string classification; ///< "weak" / "quasi" / "strict" where meaningful
	std::vector<Violation> violations;
	std::vector<std::string> notes;
	double seconds = 0;

	void add(Violation v);
	/// Folds `other` in; the verdict is the conjunction.
	void merge(const Report& other);
	/// Sorts violations by identity name, then tuple.
	void finalize();
	bool has_violation(const std::string& identity) const;
};

/// A family of basis indices an identity ranges over, e.g. {"x", 3}.
struct Slot
{
	std::string prefix;
	std::size_t count = 0;
};

/// A universally quantified identity over basis tuples. `residual` returns the
/// canonical text of lhs - rhs, "0" when the identity holds at that tuple.
struct Identity
{
	std::string name;
	std::vector<Slot> slots;
	std::function<std::string(std::span<const std::size_t>)> residual;
};

/// Renames every identity to prefix + name. Each residual also holds `keepalive`,
/// for identities that reference data by address.
std::vector<Identity> with_prefix(std::vector<Identity> ids, const std::string& prefix,
                                  std::shared_ptr<const void> keepalive = {});

/// Evaluates every identity on every basis tuple. Violations come back sorted.
Report run_identities(const std::vector<Identity>& ids);

/// Re-evaluates a reported violation; nullopt-like empty string if the identity or tuple is unknown.
std::string reevaluate(const std::vector<Identity>& ids, const Violation& v);

/// "x3" -> 3 given the slot prefix; throws on mismatch.
std::size_t parse_label(const std::string& label, const std::string& prefix);

} // namespace lie2b

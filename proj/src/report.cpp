#include "lie2b/report.hpp"

#include "lie2b/parallel.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace lie2b {

void Report::add(Violation v)
{
	pass = false;
	violations.push_back(std::move(v));
}

void Report::merge(const Report& other)
{
	pass = pass && other.pass;
	violations.insert(violations.end(), other.violations.begin(), other.violations.end());
	notes.insert(notes.end(), other.notes.begin(), other.notes.end());
	seconds += other.seconds;
}

void Report::finalize()
{
	std::stable_sort(violations.begin(), violations.end(), [](const Violation& a, const Violation& b) {
		if (a.identity != b.identity)
			return a.identity < b.identity;
		return a.tuple < b.tuple;
	});
}

bool Report::has_violation(const std::string& identity) const
{
	return std::any_of(violations.begin(), violations.end(),
	                   [&](const Violation& v) { return v.identity == identity; });
}

namespace {

std::vector<std::string> labels(const Identity& id, std::span<const std::size_t> t)
{
	std::vector<std::string> out;
	for (std::size_t i = 0; i < t.size(); ++i)
		out.push_back(id.slots[i].prefix + std::to_string(t[i]));
	return out;
}

} // namespace

std::vector<Identity> with_prefix(std::vector<Identity> ids, const std::string& prefix,
                                  std::shared_ptr<const void> keepalive)
{
	for (auto& id : ids) {
		id.name = prefix + id.name;
		if (keepalive)
			id.residual = [f = std::move(id.residual), keepalive](std::span<const std::size_t> t) { return f(t); };
	}
	return ids;
}

Report run_identities(const std::vector<Identity>& ids)
{
	Report rep;
	for (const auto& id : ids) {
		std::size_t total = 1;
		for (const auto& s : id.slots)
			total *= s.count;
		if (total == 0)
			continue;
		std::vector<std::string> results(total);
		const long n = static_cast<long>(total);
		// Each tuple is independent; results land in fixed slots so output order is deterministic.
#pragma omp parallel for schedule(dynamic, 8) num_threads(thread_count()) if (n >= 64)
		for (long f = 0; f < n; ++f) {
			std::vector<std::size_t> t(id.slots.size());
			auto rest = static_cast<std::size_t>(f);
			for (std::size_t r = id.slots.size(); r-- > 0;) {
				t[r] = rest % id.slots[r].count;
				rest /= id.slots[r].count;
			}
			results[static_cast<std::size_t>(f)] = id.residual(t);
		}
		for (std::size_t f = 0; f < total; ++f) {
			if (results[f] == "0")
				continue;
			std::vector<std::size_t> t(id.slots.size());
			auto rest = f;
			for (std::size_t r = id.slots.size(); r-- > 0;) {
				t[r] = rest % id.slots[r].count;
				rest /= id.slots[r].count;
			}
			rep.add({id.name, labels(id, t), results[f]});
		}
	}
	rep.finalize();
	return rep;
}

std::size_t parse_label(const std::string& label, const std::string& prefix)
{
	if (label.size() <= prefix.size() || label.compare(0, prefix.size(), prefix) != 0)
		throw std::invalid_argument("label '" + label + "' does not start with '" + prefix + "'");
	std::size_t v = 0;
	const char* b = label.data() + prefix.size();
	const char* e = label.data() + label.size();
	auto [p, ec] = std::from_chars(b, e, v);
	if (ec != std::errc() || p != e)
		throw std::invalid_argument("bad label '" + label + "'");
	return v;
}

std::string reevaluate(const std::vector<Identity>& ids, const Violation& v)
{
	for (const auto& id : ids) {
		if (id.name != v.identity || id.slots.size() != v.tuple.size())
			continue;
		std::vector<std::size_t> t;
		for (std::size_t i = 0; i < v.tuple.size(); ++i) {
			std::size_t k = parse_label(v.tuple[i], id.slots[i].prefix);
			if (k >= id.slots[i].count)
				return {};
			t.push_back(k);
		}
		return id.residual(t);
	}
	return {};
}

} // namespace lie2b

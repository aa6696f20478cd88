#pragma once

// Corrupt-and-detect support: change one independent structure constant of a
// structure file. Alternating tensors are edited through their stored entry, so the
// perturbed file still describes alternating data.

#include "lie2b/coboundary.hpp"
#include "lie2b/encoding.hpp"
#include "lie2b/io.hpp"
#include "lie2b/verify.hpp"

#include <json.hpp>

#include <optional>
#include <random>

namespace testing_util {

struct Perturbation
{
	std::string tensor;
	std::vector<std::size_t> index;
	lie2b::Scalar delta;
	std::string text;                       ///< the perturbed file
	std::optional<lie2b::Structure> parsed; ///< empty if the file is rejected on load
	std::string load_error;
};

/// Every storable index of a field: all tuples, with increasing indices after the
/// first for alternating fields.
inline std::vector<std::vector<std::size_t>> storable_indices(const lie2b::TensorField& f)
{
	std::vector<std::vector<std::size_t>> out;
	std::vector<std::size_t> idx(f.shape.size(), 0);
	for (;;) {
		bool ok = true;
		if (f.alternating)
			for (std::size_t r = 2; r < idx.size(); ++r)
				ok = ok && idx[r - 1] < idx[r];
		if (ok)
			out.push_back(idx);
		std::size_t r = idx.size();
		while (r > 0 && ++idx[r - 1] == f.shape[r - 1])
			idx[--r] = 0;
		if (r == 0)
			return out;
	}
}

/// Fields with at least one storable entry.
inline std::vector<lie2b::TensorField> perturbable_fields(const lie2b::Structure& s)
{
	auto doc = nlohmann::json::parse(lie2b::serialize(s));
	const auto& dims = doc.at("dims");
	std::size_t n = dims.contains("L") ? dims.at("L").get<std::size_t>() : dims.at("g").get<std::size_t>();
	std::size_t m = dims.contains("theta") ? dims.at("theta").get<std::size_t>() : 0;
	std::vector<lie2b::TensorField> out;
	for (auto& f : lie2b::tensor_fields(lie2b::kind_name(s), n, m)) {
		bool ok = true;
		for (auto d : f.shape)
			ok = ok && d > 0;
		if (f.alternating)
			for (std::size_t r = 1; r < f.shape.size(); ++r)
				ok = ok && f.shape[r] >= f.shape.size() - 1;
		if (ok)
			out.push_back(std::move(f));
	}
	return out;
}

inline Perturbation perturb(std::mt19937& rng, const lie2b::Structure& s)
{
	using nlohmann::json;
	static const lie2b::Scalar deltas[] = {1, -1, 2, -2, lie2b::Scalar(1, 2), lie2b::Scalar(-1, 3)};
	// uniform over all independent constants
	std::vector<std::pair<std::string, std::vector<std::size_t>>> slots;
	for (const auto& f : perturbable_fields(s))
		for (auto& idx : storable_indices(f))
			slots.emplace_back(f.name, std::move(idx));
	const auto& [name, index] = slots.at(std::uniform_int_distribution<std::size_t>(0, slots.size() - 1)(rng));
	Perturbation p{name, index, deltas[std::uniform_int_distribution<int>(0, 5)(rng)], {}, {}, {}};

	auto doc = json::parse(lie2b::serialize(s));
	auto& entries = doc["tensors"][p.tensor]["entries"];
	if (entries.is_null())
		entries = json::array();
	bool found = false;
	for (std::size_t e = 0; e < entries.size(); ++e) {
		std::vector<std::size_t> idx(entries[e].begin(), entries[e].end() - 1);
		if (idx != p.index)
			continue;
		found = true;
		auto v = lie2b::parse_scalar(entries[e].back().get<std::string>()) + p.delta;
		if (lie2b::is_zero(v))
			entries.erase(e);
		else
			entries[e].back() = lie2b::to_string(v);
		break;
	}
	if (!found) {
		json row(p.index);
		row.push_back(lie2b::to_string(p.delta));
		entries.push_back(row);
	}
	p.text = doc.dump(2) + "\n";
	try {
		p.parsed = lie2b::parse_structure(p.text);
	} catch (const lie2b::InputError& e) {
		p.load_error = e.what();
	}
	return p;
}

enum class Outcome { Detected, Preserved, Missed, Rejected };

/// The independent second verdict: the bracket route where the kind has one, otherwise
/// the bracket route of an equivalent encoded structure.
inline bool second_route_passes(const lie2b::Structure& s)
{
	using namespace lie2b;
	if (auto* cm = std::get_if<CrossedModuleData>(&s))
		return verify_weak_lie2_algebra(to_lie2_algebra(*cm), Route::Bracket).pass;
	if (auto* r = std::get_if<RMatrix>(&s)) {
		if (!verify_weak_lie2_algebra(to_lie2_algebra(r->cm), Route::Bracket).pass)
			return false;
		auto t = coboundary_triple(*r);
		return t.eta.is_zero() && check_quasi_triple(t, Route::Bracket).pass;
	}
	return verify_structure(s, Route::Bracket).pass;
}

inline bool has_bracket_route(const lie2b::Structure& s)
{
	return !std::holds_alternative<lie2b::CrossedModuleData>(s) && !std::holds_alternative<lie2b::RMatrix>(s);
}

/// Detected: the primary verification fails and every reported violation with a basis
/// tuple is reproduced exactly by re-evaluating the named identity.
inline Outcome classify(const Perturbation& p)
{
	using namespace lie2b;
	if (!p.parsed)
		return Outcome::Rejected;
	const auto& s = *p.parsed;
	auto rep = verify_structure(s, has_bracket_route(s) ? Route::Unfolded : Route::Both);
	if (rep.pass)
		return second_route_passes(s) ? Outcome::Preserved : Outcome::Missed;
	WitnessOracle oracle(s);
	bool named = false;
	for (const auto& v : rep.violations) {
		if (v.tuple.empty())
			continue;
		auto r = oracle.residual(v);
		if (!r || *r != v.residual)
			return Outcome::Missed;
		named = true;
	}
	return named ? Outcome::Detected : Outcome::Missed;
}

} // namespace testing_util

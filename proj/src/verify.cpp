#include "lie2b/verify.hpp"

#include "lie2b/encoding.hpp"

#include <json.hpp>

#include <chrono>
#include <iomanip>
#include <map>
#include <sstream>

namespace lie2b {

struct WitnessOracle::Data
{
	Structure s;
	WeakLie2Algebra dual; ///< g* -> theta* algebra of a coalgebra, referenced by address
	std::vector<Identity> ids;
	std::map<std::string, SElement> squares; ///< identity name -> element e of {e,e} = 0
	std::map<std::string, std::pair<SElement, SElement>> products; ///< identity name -> (a, b) of {a,b} = 0
};

namespace {

template <class... F> struct Overload : F...
{
	using F::operator()...;
};
template <class... F> Overload(F...) -> Overload<F...>;

void append(std::vector<Identity>& ids, std::vector<Identity> more)
{
	ids.insert(ids.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

// The identity lists below mirror the verifiers name for name; they reference `d`
// by address, so `d` must not move afterwards.
void build(WitnessOracle::Data& d)
{
	std::visit(Overload{
	               [&](const WeakLie2Algebra& a) {
		               d.ids = weak_lie2_algebra_identities(a);
		               d.squares["bracket.ss"] = encode(a);
	               },
	               [&](const WeakLie2Coalgebra& c) {
		               d.dual = dual_algebra(c);
		               d.ids = weak_lie2_algebra_identities(d.dual, "dual-lie2", "k", "xi");
		               d.squares["bracket.cc"] = encode(c);
	               },
	               [&](const WeakLie2Bialgebra& b) {
		               d.ids = weak_lie2_algebra_identities(b.algebra);
		               d.dual = dual_algebra(b.coalgebra);
		               append(d.ids, weak_lie2_algebra_identities(d.dual, "dual-lie2", "k", "xi"));
		               if (b.algebra.is_strict()) {
			               auto cm = to_crossed_module(b.algebra);
			               if (is_crossed_module(cm).pass)
				               append(d.ids, quasi_triple_identities(to_quasi_triple(cm, b.coalgebra)));
		               }
		               d.squares["bracket.tt"] = encode(b);
		               d.products["lie2bialg.compatibility"] = {encode(b.algebra), encode(b.coalgebra)};
	               },
	               [&](const CrossedModuleData& cm) { d.ids = crossed_module_identities(cm); },
	               [&](const LieBialgebraCrossedModule& b) {
		               d.ids = bicrossed_identities(b);
		               d.squares["bracket.tt"] = encode(to_strict_bialgebra(b));
	               },
	               [&](const LieBialgebraPair& p) {
		               d.ids = lie_algebra_identities(p.L, "lie", "e");
		               append(d.ids, lie_bialgebra_identities(p.L, p.Lstar));
	               },
	               [&](const QuasiTriple& t) {
		               d.ids = quasi_triple_identities(t);
		               d.squares["bracket.oc"] = encode(to_bialgebra(t));
	               },
	               [&](const InfinitesimalPair& p) { d.ids = id_identities(p); },
	               [&](const RMatrix& r) {
		               d.ids = crossed_module_identities(r.cm);
		               append(d.ids, r_matrix_identities(r));
	               },
	               [&](const KDifferentialData& k) {
		               d.ids = lie_algebra_identities(k.L, "lie", "e");
		               append(d.ids, k_differential_identities(k.d, k.L, k.d.degree));
	               },
	               [&](const LieAlgebraData& L) { d.ids = lie_algebra_identities(L, "lie", "e"); },
	               [&](const CocycleData& c) {
		               d.ids = crossed_module_identities(c.cm);
		               append(d.ids, cocycle_identities(c.lambda, c.cm));
	               },
	               [&](const ElementSet& es) {
		               for (const auto& [name, e] : es.elements)
			               d.squares["bracket." + name] = e;
	               },
	           },
	           d.s);
}

std::shared_ptr<WitnessOracle::Data> make_data(const Structure& s)
{
	auto d = std::make_shared<WitnessOracle::Data>();
	d->s = s;
	build(*d);
	return d;
}

Report with_route(Report unfolded, Report bracket, Route route, const char* what)
{
	if (route == Route::Unfolded)
		return unfolded;
	if (route == Route::Bracket)
		return bracket;
	bool agree = unfolded.pass == bracket.pass;
	unfolded.merge(bracket);
	if (!agree)
		unfolded.add({"route.agreement", {}, what});
	unfolded.finalize();
	return unfolded;
}

} // namespace

std::string route_name(Route r)
{
	switch (r) {
	case Route::Unfolded:
		return "unfolded";
	case Route::Bracket:
		return "bracket";
	default:
		return "both";
	}
}

Route parse_route(const std::string& text)
{
	if (text == "unfolded")
		return Route::Unfolded;
	if (text == "bracket")
		return Route::Bracket;
	if (text == "both")
		return Route::Both;
	throw std::invalid_argument("unknown route '" + text + "'");
}

Report verify_structure(const Structure& s, Route route)
{
	auto start = std::chrono::steady_clock::now();
	bool two_routes = false;
	Report rep = std::visit(
	    Overload{
	        [&](const WeakLie2Algebra& a) {
		        two_routes = true;
		        return verify_weak_lie2_algebra(a, route);
	        },
	        [&](const WeakLie2Coalgebra& c) {
		        two_routes = true;
		        return verify_weak_lie2_coalgebra(c, route);
	        },
	        [&](const WeakLie2Bialgebra& b) {
		        two_routes = true;
		        return verify_weak_lie2_bialgebra(b, route);
	        },
	        [&](const LieBialgebraCrossedModule& b) {
		        two_routes = true;
		        Report u, k;
		        if (route != Route::Bracket)
			        u = is_lie_bialgebra_crossed_module(b);
		        if (route != Route::Unfolded)
			        k = bracket_square_report(encode(to_strict_bialgebra(b)), "bracket.tt");
		        auto r = with_route(u, k, route, "crossed-module and bracket verdicts differ");
		        r.classification = "strict";
		        return r;
	        },
	        [&](const QuasiTriple& t) {
		        two_routes = true;
		        return check_quasi_triple(t, route);
	        },
	        [&](const InfinitesimalPair& p) {
		        auto r = check_ID(p);
		        r.classification = "A" + std::to_string(p.k);
		        return r;
	        },
	        [&](const ElementSet& es) {
		        Report r;
		        for (const auto& [name, e] : es.elements)
			        r.merge(bracket_square_report(e, "bracket." + name));
		        r.finalize();
		        return r;
	        },
	        [&](const auto&) { return run_identities(make_data(s)->ids); },
	    },
	    s);
	if (!two_routes && route != Route::Both)
		rep.notes.push_back("route ignored: this structure has a single criterion");
	rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
	return rep;
}

WitnessOracle::WitnessOracle(const Structure& s)
    : data_(make_data(s))
{
}

std::optional<std::string> WitnessOracle::residual(const Violation& v) const
{
	if (auto it = data_->squares.find(v.identity); it != data_->squares.end())
		return bracket_square_residual(it->second, v);
	if (auto it = data_->products.find(v.identity); it != data_->products.end())
		return bracket_product_residual(it->second.first, it->second.second, v);
	for (const auto& id : data_->ids)
		if (id.name == v.identity) {
			auto r = reevaluate(data_->ids, v);
			if (r.empty())
				return std::nullopt;
			return r;
		}
	return std::nullopt;
}

std::string report_text(const Report& r, const std::string& kind, Route route)
{
	std::ostringstream os;
	os << "structure: " << kind << "\n";
	os << "route: " << route_name(route) << "\n";
	os << "verdict: " << (r.pass ? "PASS" : "FAIL") << "\n";
	if (!r.classification.empty())
		os << "classification: " << r.classification << "\n";
	os << "violations: " << r.violations.size() << "\n";
	for (const auto& v : r.violations) {
		os << "  " << v.identity;
		if (!v.tuple.empty()) {
			os << " (";
			for (std::size_t i = 0; i < v.tuple.size(); ++i)
				os << (i ? ", " : "") << v.tuple[i];
			os << ")";
		}
		os << ": " << v.residual << "\n";
	}
	for (const auto& n : r.notes)
		os << "note: " << n << "\n";
	os << "time: " << std::fixed << std::setprecision(3) << r.seconds << " s\n";
	return os.str();
}

std::string report_machine(const Report& r, const std::string& kind, Route route)
{
	using nlohmann::json;
	json vs = json::array();
	for (const auto& v : r.violations)
		vs.push_back(json{{"identity", v.identity}, {"tuple", v.tuple}, {"residual", v.residual}});
	json doc{{"schema", report_schema},
	         {"structure", kind},
	         {"route", route_name(route)},
	         {"verdict", r.pass ? "pass" : "fail"},
	         {"classification", r.classification},
	         {"violations", vs},
	         {"notes", r.notes},
	         {"seconds", r.seconds}};
	return doc.dump(2) + "\n";
}

} // namespace lie2b

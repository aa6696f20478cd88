// Acceptance run: one PASS/FAIL line per criterion, with counts and timing.
// Usage: acceptance [--criterion N]...   (default: all). Exit status 1 if any selected
// criterion fails.

#include "lie2b/catalog.hpp"
#include "lie2b/coboundary.hpp"
#include "lie2b/encoding.hpp"
#include "lie2b/infinitesimal.hpp"
#include "lie2b/io.hpp"
#include "lie2b/linalg.hpp"
#include "lie2b/verify.hpp"
#include "lie_examples.hpp"
#include "perturb.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace lie2b;
using namespace testing_util;

namespace {

struct Outcome8
{
	int detected = 0, preserved = 0, missed = 0, rejected = 0;
};

struct Result
{
	bool pass = true;
	std::ostringstream detail;

	void require(bool ok, const std::string& what)
	{
		if (!ok && pass)
			detail << "first failure: " << what << "; ";
		pass = pass && ok;
	}
};

bool odd(int d) { return (d % 2 + 2) % 2 == 1; }

// ---- 1: big-bracket laws ----------------------------------------------------------

void big_bracket_laws(Result& res)
{
	std::mt19937 rng(101);
	int checked = 0;
	for (int t = 0; checked < 240; ++t) {
		std::size_t m = 1 + t % 3, n = 1 + (t / 3) % 3;
		int d1 = -2 - t % 5, d2 = -2 - (t / 5) % 5, d3 = -2 - (t / 25) % 4;
		auto a = rand_homogeneous_selement(rng, m, n, d1);
		auto b = rand_homogeneous_selement(rng, m, n, d2);
		auto c = rand_homogeneous_selement(rng, m, n, d3);
		if (a.is_zero() || b.is_zero() || c.is_zero())
			continue;
		++checked;
		int p = *a.degree(), q = *b.degree();
		auto ab = big_bracket(a, b);
		Scalar anti = odd((p + 3) * (q + 3)) ? 1 : -1;
		res.require(ab == anti * big_bracket(b, a), "antisymmetry");
		res.require(ab.is_zero() || ab.degree() == p + q + 3, "degree");
		Scalar leib = odd((p + 3) * q) ? -1 : 1;
		res.require(big_bracket(a, odot(b, c)) == odot(ab, c) + leib * odot(b, big_bracket(a, c)), "Leibniz");
		Scalar jac = odd((p + 3) * (q + 3)) ? -1 : 1;
		res.require(big_bracket(a, big_bracket(b, c)) == big_bracket(ab, c) + jac * big_bracket(b, big_bracket(a, c)),
		            "Jacobi");
	}
	res.detail << checked << " triples, dims <= 3";
}

// ---- 2: encoding equivalence --------------------------------------------------------

WeakLie2Algebra candidate_algebra(std::mt19937& rng, int t)
{
	std::size_t m = 1 + t % 2, n = 1 + (t / 2) % 2;
	if (t % 3 == 0)
		return rand_weak_candidate(rng, m, n);
	auto a = to_lie2_algebra(identity_crossed_module(rand_lie_algebra(rng, n)));
	if (t % 3 == 2) {
		// one constant replaced by another value in [-2, 2]
		auto& tensor = (t % 6 == 2) ? a.phi : a.action;
		tensor.flat(std::uniform_int_distribution<std::size_t>(0, tensor.size() - 1)(rng)) =
		    std::uniform_int_distribution<int>(-2, 2)(rng);
	}
	return a;
}

void encoding_equivalence(Result& res)
{
	std::mt19937 rng(202);
	int alg[2] = {0, 0}, coalg[2] = {0, 0};
	for (int t = 0; t < 120; ++t) {
		auto a = candidate_algebra(rng, t);
		bool u = verify_weak_lie2_algebra(a, Route::Unfolded).pass;
		res.require(u == verify_weak_lie2_algebra(a, Route::Bracket).pass, "algebra " + encode(a).to_string());
		alg[u]++;
		auto c = dual_coalgebra(candidate_algebra(rng, t + 1));
		bool uc = verify_weak_lie2_coalgebra(c, Route::Unfolded).pass;
		res.require(uc == verify_weak_lie2_coalgebra(c, Route::Bracket).pass, "coalgebra " + encode(c).to_string());
		coalg[uc]++;
	}
	res.require(alg[0] > 0 && alg[1] > 0 && coalg[0] > 0 && coalg[1] > 0, "both verdicts represented");
	res.detail << "algebras " << alg[1] << " pass / " << alg[0] << " fail, coalgebras " << coalg[1] << " pass / "
	           << coalg[0] << " fail, verdicts identical";
}

// ---- 3: catalog -----------------------------------------------------------------------

void catalog_regression(Result& res)
{
	int n = 0;
	for (const auto& name : catalog_names()) {
		auto s = parse_structure(serialize(catalog_entry(name).structure));
		res.require(verify_structure(s, Route::Both).pass, name);
		++n;
	}
	res.require(n >= 7, "at least 7 entries");
	res.detail << n << " entries verify on both routes";
}

// ---- 4: seven-condition equivalence -------------------------------------------------

void seven_conditions(Result& res)
{
	std::mt19937 rng(404);
	auto cms = sample_modules();
	int verdict[2] = {0, 0};
	auto compare = [&](const QuasiTriple& tr) {
		bool u = check_quasi_triple(tr, Route::Unfolded).pass;
		res.require(u == check_quasi_triple(tr, Route::Bracket).pass, "triple");
		verdict[u]++;
	};
	for (int t = 0; t < 120; ++t) {
		const auto& cm = cms[static_cast<std::size_t>(t) % cms.size()];
		auto tr = cocycle_triple(cm, random_cocycle(rng, cm, 2));
		const Space s = cm.space();
		int mode = t % 4;
		if (mode == 1)
			tr.pair.delta.images[std::uniform_int_distribution<std::size_t>(0, s.g_dim - 1)(rng)] +=
			    project_bigrade(rand_homogeneous(rng, s, 2, 1), 1, 1);
		else if (mode == 2)
			tr.pair.omega.images[s.theta_index(std::uniform_int_distribution<std::size_t>(0, s.theta_dim - 1)(rng))] +=
			    project_bigrade(rand_homogeneous(rng, s, 2, 1), 0, 2);
		else if (mode == 3 && s.theta_dim >= 3)
			tr.eta.images[std::uniform_int_distribution<std::size_t>(0, s.g_dim - 1)(rng)] +=
			    project_bigrade(rand_homogeneous(rng, s, 3, 2), 0, 3);
		compare(tr);
	}
	// coboundary triples of arbitrary r, r-matrices or not
	for (const auto& cm : {examples::gl2_to_sl2(), examples::sl2_ideal_in_gl2()})
		for (int t = 0; t < 20; ++t) {
			Multivector r(cm.space());
			for (std::size_t a = 0; a < cm.theta.dim(); ++a)
				for (std::size_t b = a + 1; b < cm.theta.dim(); ++b)
					r += rand_scalar(rng, -2, 2, false) * wedge(theta_vector(cm, a), theta_vector(cm, b));
			compare(coboundary_triple({cm, r}));
		}
	res.require(verdict[0] > 0 && verdict[1] > 0, "both verdicts represented");
	res.detail << verdict[0] + verdict[1] << " triples (" << verdict[1] << " pass, " << verdict[0]
	           << " fail), verdicts identical";
}

// ---- 5: r-matrix pipeline -----------------------------------------------------------

struct Pipeline
{
	bool r_matrix = false, eta_zero = false, dual = false, square = false;
	bool all() const { return r_matrix && eta_zero && dual && square; }
};

Pipeline pipeline(const RMatrix& r)
{
	Pipeline p;
	p.r_matrix = is_r_matrix(r).pass;
	p.eta_zero = coboundary_triple(r).eta.is_zero();
	try {
		auto d = dual_crossed_module(r);
		p.dual = is_lie_bialgebra_crossed_module(d).pass;
		// the strict t assembled from the dual crossed module
		p.square = bracket_square_report(encode(to_strict_bialgebra(d)), "bracket.tt").pass;
	} catch (const std::invalid_argument&) {
		// dual_crossed_module refuses an r that is not an r-matrix
	}
	return p;
}

// r = t a + Id ^ b with b in sl2 and a spanning the kernel of [b, .] on wedge^2 sl2.
Multivector sampled_r_matrix(std::mt19937& rng, const CrossedModuleData& cm)
{
	auto u = [&](std::size_t a) { return theta_vector(cm, a); };
	const std::vector<Multivector> sl = {u(0) - u(3), u(1), u(2)};
	std::vector<Scalar> bc(3);
	for (auto& c : bc)
		c = rand_scalar(rng, -2, 2, false);
	const std::vector<Scalar> bt = {bc[0], bc[1], bc[2], -bc[0]}; // theta coordinates of b
	Multivector b = bc[0] * sl[0] + bc[1] * sl[1] + bc[2] * sl[2];
	std::vector<Multivector> wedges = {wedge(sl[0], sl[1]), wedge(sl[0], sl[2]), wedge(sl[1], sl[2])};
	// [b, w] = phi(b) |> w
	std::vector<Multivector> images;
	for (const auto& w : wedges) {
		Multivector img(cm.space());
		for (std::size_t i = 0; i < cm.g.dim(); ++i) {
			Scalar coeff = 0;
			for (std::size_t a = 0; a < cm.theta.dim(); ++a)
				coeff += bt[a] * cm.phi({i, a});
			img += coeff * act(cm, i, w);
		}
		images.push_back(img);
	}
	std::map<Mask, std::size_t> rows;
	for (const auto& img : images)
		for (const auto& [mask, c] : img.terms())
			rows.emplace(mask, rows.size());
	Matrix M = zero_matrix(rows.size(), wedges.size());
	for (std::size_t j = 0; j < images.size(); ++j)
		for (const auto& [mask, c] : images[j].terms())
			M[rows.at(mask)][j] = c;
	Multivector a(cm.space());
	for (const auto& v : nullspace(M, wedges.size())) {
		auto t = rand_scalar(rng, -2, 2, false);
		for (std::size_t j = 0; j < wedges.size(); ++j)
			a += Scalar(t * v[j]) * wedges[j];
	}
	return a + wedge(u(0) + u(3), b);
}

void r_matrix_pipeline(Result& res)
{
	std::mt19937 rng(505);
	auto cm = examples::gl2_to_sl2();
	int passed = 0, rms = 0, mismatch = 0;
	for (int t = 0; t < 50; ++t) {
		Multivector r(cm.space());
		for (std::size_t a = 0; a < 4; ++a)
			for (std::size_t b = a + 1; b < 4; ++b)
				r += rand_scalar(rng, -2, 2, false) * wedge(theta_vector(cm, a), theta_vector(cm, b));
		auto p = pipeline({cm, r});
		passed += p.all();
		rms += p.r_matrix;
		// every later stage holds exactly when r is an r-matrix
		mismatch += (p.eta_zero != p.r_matrix) || (p.dual != p.r_matrix) || (p.square != p.r_matrix);
	}
	int subset = 0;
	for (int t = 0; t < 50; ++t)
		subset += pipeline({cm, sampled_r_matrix(rng, cm)}).all();
	res.require(passed == 50, "random r in wedge^2 gl(2) that is not an r-matrix");
	res.detail << passed << "/50 random r pass the full pipeline (" << rms << " are r-matrices, " << mismatch
	           << " stage mismatches); " << subset << "/50 sampled r-matrices (r = a + Id^b, [b,a] = 0) pass. "
	           << "The claim holds for r-matrices only; a generic r has non-invariant [r,r].";
}

// ---- 6: A_k structure -----------------------------------------------------------------

void ak_structure(Result& res)
{
	std::mt19937 rng(606);
	int pairs = 0, brackets = 0, jacobi = 0, partials = 0, squares = 0;
	for (const auto& cm : sample_modules()) {
		auto L = semidirect_product(cm);
		for (int round = 0; round < 3; ++round) {
			std::vector<InfinitesimalPair> ps;
			for (unsigned l : {1u, 2u, 3u}) {
				auto lam = random_cocycle(rng, cm, l);
				auto p = cocycle_pair(cm, lam);
				res.require(check_ID(p).pass, "ID1-ID3 on a coboundary pair");
				auto d = build_partial(p);
				res.require(is_k_differential(d, L, l).pass, "build_partial is a k-differential");
				ps.push_back(p);
				++pairs;
				++partials;
			}
			for (std::size_t i = 0; i < ps.size(); ++i)
				for (std::size_t j = 0; j < ps.size(); ++j) {
					if (ps[i].k + ps[j].k - 1 > 4)
						continue;
					auto br = a_k_bracket(ps[i], ps[j]);
					res.require(check_ID(br).pass, "a_k_bracket closure");
					++brackets;
					auto lhs = differential_commutator(build_partial(ps[i]), build_partial(ps[j]), L);
					res.require(lhs == build_partial(br), "compatibility square");
					++squares;
				}
			const auto& a = ps[0];
			const auto& b = ps[1];
			const auto& c = ps[1];
			int sab = ((a.k - 1) * (b.k - 1)) % 2 ? -1 : 1;
			auto lhs = a_k_bracket(a, a_k_bracket(b, c)).generator_map();
			auto r1 = a_k_bracket(a_k_bracket(a, b), c).generator_map();
			auto r2 = a_k_bracket(b, a_k_bracket(a, c)).generator_map();
			for (std::size_t i = 0; i < lhs.images.size(); ++i)
				res.require(lhs.images[i] == r1.images[i] + Scalar(sab) * r2.images[i], "graded Jacobi");
			++jacobi;
		}
	}
	res.detail << pairs << " coboundary pairs, " << brackets << " brackets, " << jacobi << " Jacobi triples, "
	           << partials << " partials, " << squares << " squares";
}

// ---- 7: contraction lemmas -------------------------------------------------------------

void contraction_lemmas(Result& res)
{
	std::mt19937 rng(707);
	auto cms = sample_modules();
	cms.push_back(examples::gl2_to_sl2());
	cms.push_back(examples::sl2_ideal_in_gl2());
	int skew = 0, proj = 0;
	for (const auto& cm : cms) {
		auto L = semidirect_bracket(cm);
		for (unsigned k = 1; k <= 4; ++k) {
			if (k - 1 > cm.theta.dim())
				continue;
			auto basis = w_k_basis(cm, k);
			for (int rep = 0; rep < 3; ++rep) {
				Multivector w(cm.space());
				for (const auto& b : basis)
					w += rand_scalar(rng) * b;
				res.require(in_W_k(w, k, cm).pass, "W_k sample");
				for (std::size_t z = 0; z < cm.g.dim(); ++z)
					for (unsigned j = 1; j + 1 <= k; ++j) {
						auto a = interior(phi_star_g_dual(cm, z), d_phi_power(cm, w, j - 1));
						auto b = d_phi_power(cm, interior(g_dual(cm, z), w), j);
						auto c = Scalar(1, j + 1) * interior(g_dual(cm, z), d_phi_power(cm, w, j));
						res.require(a == b && b == c, "skew contraction, k=" + std::to_string(k));
						++skew;
					}
				if (k < 2)
					continue;
				auto v = theta_element(rng, cm, k - 1);
				for (std::size_t a = 0; a < cm.theta.dim(); ++a)
					for (unsigned l = 1; l + 1 <= k; ++l) {
						auto lhs = Scalar(l) * d_phi_power(cm, v, l - 1) - d_phi_power(cm, v, l);
						auto pr = project_bigrade(schouten(lhs, theta_vector(cm, a), L), l - 1, k - l);
						res.require(pr.is_zero(), "projection bracket, k=" + std::to_string(k));
						++proj;
					}
			}
		}
	}
	res.detail << skew << " contraction and " << proj << " projection instances, k <= 4";
}

// ---- 8: witnesses, round trip, corrupt-and-detect ---------------------------------------

void corrupt_and_detect(Result& res)
{
	std::mt19937 rng(808);
	std::ostringstream per_entry;
	int witnesses = 0;
	for (const auto& name : catalog_names()) {
		auto s = catalog_entry(name).structure;
		auto text = serialize(s);
		auto back = parse_structure(text);
		res.require(back == s && serialize(back) == text, name + " round trip");
		Outcome8 o;
		for (int t = 0; t < 100; ++t) {
			auto p = perturb(rng, s);
			switch (classify(p)) {
			case Outcome::Detected: o.detected++; break;
			case Outcome::Preserved: o.preserved++; break;
			case Outcome::Missed: o.missed++; break;
			case Outcome::Rejected: o.rejected++; break;
			}
			if (!p.parsed)
				continue;
			// witness fidelity on every route
			auto rep = verify_structure(*p.parsed, Route::Both);
			WitnessOracle oracle(*p.parsed);
			for (const auto& v : rep.violations) {
				if (v.tuple.empty())
					continue;
				auto r = oracle.residual(v);
				res.require(r && *r == v.residual, name + " witness " + v.identity);
				++witnesses;
			}
		}
		res.require(o.missed == 0 && o.rejected == 0, name + ": every perturbation detected or preserved");
		res.require(o.detected >= 95, name + ": detected " + std::to_string(o.detected) + "/100");
		per_entry << " " << name << " " << o.detected << "+" << o.preserved;
		if (o.missed + o.rejected)
			per_entry << " (missed " << o.missed << ", rejected " << o.rejected << ")";
		per_entry << ";";
	}
	res.detail << witnesses << " witnesses reproduced; detected+preserved per 100:" << per_entry.str();
}

struct Criterion
{
	int number;
	const char* title;
	double budget;
	std::function<void(Result&)> run;
};

} // namespace

int main(int argc, char** argv)
{
	CLI::App app{"acceptance criteria"};
	std::vector<int> only;
	app.add_option("--criterion,-c", only, "criterion numbers to run (default: all)")->check(CLI::Range(1, 8));
	CLI11_PARSE(app, argc, argv);

	const std::vector<Criterion> all = {
	    {1, "big-bracket laws", 10, big_bracket_laws},
	    {2, "encoding equivalence", 30, encoding_equivalence},
	    {3, "catalog regression", 10, catalog_regression},
	    {4, "seven-condition equivalence", 30, seven_conditions},
	    {5, "r-matrix pipeline", 60, r_matrix_pipeline},
	    {6, "A_k structure", 60, ak_structure},
	    {7, "contraction lemmas", 10, contraction_lemmas},
	    {8, "witness fidelity, round trip, corrupt-and-detect", 120, corrupt_and_detect},
	};
	bool ok = true;
	for (const auto& c : all) {
		if (!only.empty() && std::find(only.begin(), only.end(), c.number) == only.end())
			continue;
		Result res;
		auto start = std::chrono::steady_clock::now();
		try {
			c.run(res);
		} catch (const std::exception& e) {
			res.require(false, std::string("exception: ") + e.what());
		}
		double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
		res.require(secs < c.budget, "time budget");
		char timing[64];
		std::snprintf(timing, sizeof timing, "%.2f s / %.0f s", secs, c.budget);
		std::cout << "criterion " << c.number << " [" << (res.pass ? "PASS" : "FAIL") << "] " << c.title << ": "
		          << res.detail.str() << " (" << timing << ")" << std::endl;
		ok = ok && res.pass;
	}
	return ok ? 0 : 1;
}

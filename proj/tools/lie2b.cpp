#include "lie2b/catalog.hpp"
#include "lie2b/coboundary.hpp"
#include "lie2b/encoding.hpp"
#include "lie2b/io.hpp"
#include "lie2b/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace lie2b;

namespace {

enum Exit { ok = 0, failed = 1, input_error = 2 };

/// Input problems: reported on stderr, exit 2.
struct UsageError : std::runtime_error
{
	using std::runtime_error::runtime_error;
};

/// A construction whose mathematical precondition fails: exit 1.
struct PreconditionError : std::runtime_error
{
	using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path)
{
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw UsageError("cannot read '" + path + "'");
	std::ostringstream os;
	os << in.rdbuf();
	return os.str();
}

void write_output(const std::string& path, const std::string& text)
{
	if (path.empty() || path == "-") {
		std::cout << text;
		return;
	}
	std::ofstream out(path, std::ios::binary);
	if (!out || !(out << text))
		throw UsageError("cannot write '" + path + "'");
}

Structure load(const std::string& path) { return parse_structure(read_file(path)); }

/// The file's structure seen as `kind`: identical kinds pass through, and strict data
/// converts to its Lie 2-(bi)algebra form.
Structure as_kind(const Structure& s, const std::string& kind)
{
	if (kind.empty() || kind == kind_name(s))
		return s;
	if (kind == "lie2alg") {
		if (auto* cm = std::get_if<CrossedModuleData>(&s))
			return to_lie2_algebra(*cm);
		if (auto* b = std::get_if<WeakLie2Bialgebra>(&s))
			return b->algebra;
	}
	if (kind == "lie2coalg")
		if (auto* b = std::get_if<WeakLie2Bialgebra>(&s))
			return b->coalgebra;
	if (kind == "lie2bialg") {
		if (auto* t = std::get_if<QuasiTriple>(&s))
			return to_bialgebra(*t);
		if (auto* b = std::get_if<LieBialgebraCrossedModule>(&s))
			return to_strict_bialgebra(*b);
	}
	if (kind == "crossed-module") {
		if (auto* b = std::get_if<LieBialgebraCrossedModule>(&s))
			return b->primal;
		if (auto* r = std::get_if<RMatrix>(&s))
			return r->cm;
	}
	throw UsageError("a '" + kind_name(s) + "' file cannot be verified as '" + kind + "'");
}

template <class T> const T& expect(const Structure& s, const std::string& what)
{
	if (auto* p = std::get_if<T>(&s))
		return *p;
	throw UsageError(what + " expects a different structure, got '" + kind_name(s) + "'");
}

const SElement& element(const ElementSet& es, const std::string& name)
{
	auto it = es.elements.find(name);
	if (it == es.elements.end())
		throw UsageError("s-element file has no element '" + name + "'");
	return it->second;
}

Structure construct(const std::string& sub, const Structure& in)
{
	if (sub == "from-r")
		return to_bialgebra(coboundary_triple(expect<RMatrix>(in, sub)));
	if (sub == "from-cocycle") {
		const auto& c = expect<CocycleData>(in, sub);
		auto rep = cocycle_check(c.lambda, c.cm);
		if (!rep.pass)
			throw PreconditionError("lambda is not a 1-cocycle (" + rep.violations.front().identity + ")");
		return to_bialgebra(general_cocycle_triple(c.lambda, c.cm));
	}
	if (sub == "dual-module") {
		const auto& r = expect<RMatrix>(in, sub);
		auto rep = is_r_matrix(r);
		if (!rep.pass)
			throw PreconditionError("r is not an r-matrix (" + rep.violations.front().identity + " at " +
			                        rep.violations.front().tuple.front() + ")");
		return dual_crossed_module(r);
	}
	if (sub == "semidirect") {
		const auto& cm = expect<CrossedModuleData>(in, sub);
		auto rep = is_crossed_module(cm);
		if (!rep.pass)
			throw PreconditionError("not a crossed module (" + rep.violations.front().identity + ")");
		return semidirect_bracket(cm);
	}
	if (sub == "encode") {
		ElementSet es;
		std::visit(
		    [&](const auto& x) {
			    using T = std::decay_t<decltype(x)>;
			    if constexpr (std::is_same_v<T, WeakLie2Algebra> || std::is_same_v<T, WeakLie2Coalgebra>) {
				    es.space = {x.g_dim, x.theta_dim};
				    es.elements["e"] = encode(x);
			    } else if constexpr (std::is_same_v<T, WeakLie2Bialgebra>) {
				    es.space = {x.algebra.g_dim, x.algebra.theta_dim};
				    es.elements["e"] = encode(x);
			    } else if constexpr (std::is_same_v<T, CrossedModuleData>) {
				    es.space = x.space();
				    es.elements["e"] = encode(to_lie2_algebra(x));
			    } else if constexpr (std::is_same_v<T, QuasiTriple>) {
				    es.space = x.pair.cm.space();
				    es.elements["e"] = encode(to_bialgebra(x));
			    } else if constexpr (std::is_same_v<T, LieBialgebraCrossedModule>) {
				    es.space = x.primal.space();
				    es.elements["e"] = encode(to_strict_bialgebra(x));
			    } else {
				    throw UsageError("encode expects a Lie 2-structure, got '" + kind_name(in) + "'");
			    }
		    },
		    in);
		return es;
	}
	if (sub == "decode") {
		const auto& es = expect<ElementSet>(in, sub);
		return decode_bialgebra(element(es, "e"), es.space.theta_dim, es.space.g_dim);
	}
	if (sub == "bracket") {
		const auto& es = expect<ElementSet>(in, sub);
		ElementSet out{es.space, {}};
		out.elements["e"] = big_bracket(element(es, "a"), element(es, "b"));
		return out;
	}
	throw UsageError("unknown construction '" + sub + "'");
}

} // namespace

int main(int argc, char** argv)
{
	CLI::App app{"lie2b: exact verification and construction of Lie 2-bialgebra structures"};
	app.require_subcommand(1);

	std::string input, output, structure, route_text = "both", report = "text";
	auto* verify = app.add_subcommand("verify", "verify a structure file; exit 0 pass, 1 fail, 2 input error");
	verify->add_option("--input,-i", input, "structure file")->required();
	verify->add_option("--structure,-s", structure, "structure kind to verify as (default: the file's own)")
	    ->check(CLI::IsMember(kind_names()));
	verify->add_option("--route,-r", route_text, "unfolded | bracket | both")
	    ->check(CLI::IsMember({"unfolded", "bracket", "both"}));
	verify->add_option("--report", report, "text | machine")->check(CLI::IsMember({"text", "machine"}));

	std::string sub;
	auto* build = app.add_subcommand("construct", "build a structure from another; writes a structure file");
	build->add_option("kind", sub, "from-r | from-cocycle | dual-module | semidirect | encode | decode | bracket")
	    ->required()
	    ->check(CLI::IsMember({"from-r", "from-cocycle", "dual-module", "semidirect", "encode", "decode", "bracket"}));
	build->add_option("--input,-i", input, "input structure file")->required();
	build->add_option("--output,-o", output, "output file (default: stdout)");

	std::string action, name;
	auto* catalog = app.add_subcommand("catalog", "built-in examples");
	catalog->add_option("action", action, "list | export")->required()->check(CLI::IsMember({"list", "export"}));
	catalog->add_option("name", name, "entry to export");
	catalog->add_option("--output,-o", output, "output file (default: stdout)");

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		int code = app.exit(e);
		return code == 0 ? ok : input_error;
	}

	try {
		if (*verify) {
			auto s = as_kind(load(input), structure);
			auto route = parse_route(route_text);
			auto rep = verify_structure(s, route);
			std::cout << (report == "machine" ? report_machine(rep, kind_name(s), route)
			                                  : report_text(rep, kind_name(s), route));
			return rep.pass ? ok : failed;
		}
		if (*build) {
			write_output(output, serialize(construct(sub, load(input))));
			return ok;
		}
		if (action == "list") {
			for (const auto& n : catalog_names()) {
				auto e = catalog_entry(n);
				std::cout << n << "\t" << kind_name(e.structure) << "\t" << e.description << "\n";
			}
			return ok;
		}
		if (name.empty())
			throw UsageError("catalog export needs a name");
		write_output(output, serialize(catalog_entry(name).structure));
		return ok;
	} catch (const PreconditionError& e) {
		std::cerr << "error: " << e.what() << "\n";
		return failed;
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << "\n";
		return input_error;
	}
}

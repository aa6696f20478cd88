#include "lie2b/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

namespace lie2b {

using nlohmann::json;

namespace {

// ---- term parsing -------------------------------------------------------------

struct Term
{
	Scalar coeff;
	std::string monomial; ///< empty for a constant term
};

std::vector<Term> split_terms(std::string_view text)
{
	std::string s;
	for (char c : text)
		if (!std::isspace(static_cast<unsigned char>(c)))
			s += c;
	if (s.empty())
		throw std::invalid_argument("empty expression");
	std::vector<Term> out;
	if (s == "0")
		return out;
	std::size_t pos = 0;
	while (pos < s.size()) {
		int sign = 1;
		if (s[pos] == '+' || s[pos] == '-') {
			sign = s[pos] == '-' ? -1 : 1;
			++pos;
		} else if (pos != 0) {
			throw std::invalid_argument("expected '+' or '-' in '" + std::string(text) + "'");
		}
		auto end = s.find_first_of("+-", pos);
		auto body = std::string_view(s).substr(pos, end == std::string::npos ? std::string::npos : end - pos);
		if (body.empty())
			throw std::invalid_argument("empty term in '" + std::string(text) + "'");
		Term t{Scalar(sign), ""};
		auto star = body.find('*');
		if (star != std::string_view::npos) {
			t.coeff *= parse_scalar(body.substr(0, star));
			t.monomial = std::string(body.substr(star + 1));
			if (t.monomial.empty())
				throw std::invalid_argument("missing monomial after '*'");
		} else if (std::isdigit(static_cast<unsigned char>(body[0]))) {
			t.coeff *= parse_scalar(body);
		} else {
			t.monomial = std::string(body);
		}
		out.push_back(std::move(t));
		pos = end == std::string::npos ? s.size() : end;
	}
	return out;
}

std::size_t parse_index(std::string_view digits, std::string_view label)
{
	if (digits.empty() || digits.size() > 6 || !std::all_of(digits.begin(), digits.end(), [](char c) {
		    return std::isdigit(static_cast<unsigned char>(c));
	    }))
		throw std::invalid_argument("bad basis label '" + std::string(label) + "'");
	return std::stoul(std::string(digits));
}

std::size_t parse_space_label(const Space& space, std::string_view label)
{
	if (label.starts_with("x")) {
		auto i = parse_index(label.substr(1), label);
		if (i >= space.g_dim)
			throw std::invalid_argument("label '" + std::string(label) + "' out of range");
		return i;
	}
	if (label.starts_with("u")) {
		auto a = parse_index(label.substr(1), label);
		if (a >= space.theta_dim)
			throw std::invalid_argument("label '" + std::string(label) + "' out of range");
		return space.theta_index(a);
	}
	throw std::invalid_argument("unknown basis label '" + std::string(label) + "'");
}

// ---- schema -------------------------------------------------------------------

enum class Dims { GTheta, L };

struct TensorSpec
{
	std::string name;
	std::function<std::vector<std::size_t>(std::size_t n, std::size_t m)> shape;
	bool alternating = false; ///< alternating in every slot after the first; stored with increasing indices
};

struct KindSpec
{
	std::string name;
	Dims dims;
	std::vector<std::string> tensors;
	std::vector<std::string> maps;
	bool elements = false; ///< named elements allowed
	std::vector<std::string> params;
};

const std::vector<TensorSpec>& tensor_specs()
{
	using V = std::vector<std::size_t>;
	static const std::vector<TensorSpec> specs = {
	    {"action", [](auto n, auto m) { return V{m, n, m}; }},
	    {"action_star", [](auto n, auto m) { return V{n, m, n}; }},
	    {"bracket", [](auto n, auto) { return V{n, n, n}; }, true},
	    {"bracket_g", [](auto n, auto) { return V{n, n, n}; }, true},
	    {"bracket_g_star", [](auto n, auto) { return V{n, n, n}; }, true},
	    {"bracket_theta", [](auto, auto m) { return V{m, m, m}; }, true},
	    {"bracket_theta_star", [](auto, auto m) { return V{m, m, m}; }, true},
	    {"cobracket", [](auto n, auto) { return V{n, n, n}; }, true},
	    {"delta", [](auto n, auto m) { return V{n, n, m}; }},
	    {"eta", [](auto n, auto m) { return V{n, m, m, m}; }, true},
	    {"h", [](auto n, auto m) { return V{m, n, n, n}; }, true},
	    {"omega", [](auto, auto m) { return V{m, m, m}; }, true},
	    {"phi", [](auto n, auto m) { return V{n, m}; }},
	    {"phi_star", [](auto n, auto m) { return V{m, n}; }},
	};
	return specs;
}

const TensorSpec& tensor_spec(const std::string& name)
{
	for (const auto& t : tensor_specs())
		if (t.name == name)
			return t;
	throw std::logic_error("unknown tensor " + name);
}

const std::vector<std::string> cm_tensors = {"action", "bracket_g", "bracket_theta", "phi"};

std::vector<std::string> cat(std::vector<std::string> a, const std::vector<std::string>& b)
{
	a.insert(a.end(), b.begin(), b.end());
	std::sort(a.begin(), a.end());
	return a;
}

// Order matches the Structure alternatives.
const std::vector<KindSpec>& kind_specs()
{
	static const std::vector<KindSpec> specs = {
	    {"lie2alg", Dims::GTheta, {"action", "bracket_g", "h", "phi"}, {}, false, {}},
	    {"lie2coalg", Dims::GTheta, {"delta", "eta", "omega", "phi"}, {}, false, {}},
	    {"lie2bialg", Dims::GTheta, {"action", "bracket_g", "delta", "eta", "h", "omega", "phi"}, {}, false, {}},
	    {"crossed-module", Dims::GTheta, cm_tensors, {}, false, {}},
	    {"bicrossed-module", Dims::GTheta,
	     cat(cm_tensors, {"action_star", "bracket_g_star", "bracket_theta_star", "phi_star"}), {}, false, {}},
	    {"lie-bialgebra", Dims::L, {"bracket", "cobracket"}, {}, false, {}},
	    {"quasi-triple", Dims::GTheta, cat(cm_tensors, {"delta", "eta", "omega"}), {}, false, {}},
	    {"infinitesimal-pair", Dims::GTheta, cm_tensors, {"delta", "omega"}, false, {"k"}},
	    {"r-matrix", Dims::GTheta, cm_tensors, {}, true, {}},
	    {"k-differential", Dims::L, {"bracket"}, {"d"}, false, {}},
	    {"lie-algebra", Dims::L, {"bracket"}, {}, false, {}},
	    {"cocycle", Dims::GTheta, cm_tensors, {"lambda"}, false, {}},
	    {"s-element", Dims::GTheta, {}, {}, true, {}},
	};
	return specs;
}

// ---- writing ------------------------------------------------------------------

bool increasing_tail(const std::vector<std::size_t>& idx)
{
	for (std::size_t r = 2; r < idx.size(); ++r)
		if (idx[r - 1] >= idx[r])
			return false;
	return true;
}

json tensor_json(const std::string& name, const Tensor& t)
{
	const bool alt = tensor_spec(name).alternating;
	if (alt) {
		Tensor canon(t.shape());
		for (std::size_t f = 0; f < t.size(); ++f) {
			auto idx = t.unflatten(f);
			if (increasing_tail(idx))
				set_alternating(canon, {idx[0]}, {idx.begin() + 1, idx.end()}, t.flat(f));
		}
		if (!(canon == t))
			throw std::invalid_argument(name + " is not alternating and cannot be written");
	}
	json entries = json::array();
	for (std::size_t f = 0; f < t.size(); ++f) {
		if (is_zero(t.flat(f)))
			continue;
		auto idx = t.unflatten(f);
		if (alt && !increasing_tail(idx))
			continue;
		json e = json::array();
		for (auto i : idx)
			e.push_back(i);
		e.push_back(to_string(t.flat(f)));
		entries.push_back(std::move(e));
	}
	return json{{"entries", entries}};
}

json map_json(const LinearMapData& m)
{
	json images = json::object();
	for (std::size_t i = 0; i < m.images.size(); ++i)
		if (!m.images[i].is_zero())
			images[basis_label(m.space, i)] = m.images[i].to_string();
	return json{{"degree", m.degree}, {"images", images}};
}

struct Writer
{
	json doc;

	void dims_gtheta(std::size_t n, std::size_t m) { doc["dims"] = json{{"g", n}, {"theta", m}}; }
	void dims_l(std::size_t n) { doc["dims"] = json{{"L", n}}; }
	void tensor(const std::string& name, const Tensor& t) { doc["tensors"][name] = tensor_json(name, t); }
	void cm(const CrossedModuleData& c)
	{
		dims_gtheta(c.g.dim(), c.theta.dim());
		tensor("action", c.action);
		tensor("bracket_g", c.g.constants());
		tensor("bracket_theta", c.theta.constants());
		tensor("phi", c.phi);
	}
	void coalgebra_tensors(const WeakLie2Coalgebra& c)
	{
		tensor("delta", c.delta);
		tensor("eta", c.eta);
		tensor("omega", c.omega);
	}
};

// ---- reading ------------------------------------------------------------------

std::string key_path(const std::string& base, const std::string& key) { return base + "." + key; }
std::string index_path(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

void require_object(const json& j, const std::string& path)
{
	if (!j.is_object())
		throw InputError(path, "expected an object");
}

void allow_only(const json& j, const std::string& path, const std::vector<std::string>& allowed)
{
	require_object(j, path);
	for (const auto& [k, v] : j.items())
		if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
			throw InputError(key_path(path, k), "unknown field");
}

std::size_t read_size(const json& j, const std::string& path, std::size_t max)
{
	if (!j.is_number_unsigned())
		throw InputError(path, "expected a non-negative integer");
	auto v = j.get<std::uint64_t>();
	if (v > max)
		throw InputError(path, "value " + std::to_string(v) + " exceeds " + std::to_string(max));
	return static_cast<std::size_t>(v);
}

Scalar read_scalar(const json& j, const std::string& path)
{
	if (!j.is_string())
		throw InputError(path, "expected a rational string \"p\" or \"p/q\"");
	try {
		return parse_scalar(j.get<std::string>());
	} catch (const std::exception& e) {
		throw InputError(path, e.what());
	}
}

Tensor read_tensor(const json& j, const std::string& path, std::vector<std::size_t> shape, bool alternating)
{
	allow_only(j, path, {"entries"});
	Tensor t(shape);
	if (!j.contains("entries"))
		throw InputError(key_path(path, "entries"), "missing field");
	const auto& entries = j.at("entries");
	const auto epath = key_path(path, "entries");
	if (!entries.is_array())
		throw InputError(epath, "expected an array");
	std::set<std::vector<std::size_t>> seen;
	for (std::size_t e = 0; e < entries.size(); ++e) {
		const auto& row = entries[e];
		auto rpath = index_path(epath, e);
		if (!row.is_array() || row.size() != shape.size() + 1)
			throw InputError(rpath, "expected " + std::to_string(shape.size()) + " indices and a value");
		std::vector<std::size_t> idx;
		for (std::size_t r = 0; r < shape.size(); ++r) {
			auto i = read_size(row[r], index_path(rpath, r), 1u << 20);
			if (i >= shape[r])
				throw InputError(index_path(rpath, r),
				                 "index " + std::to_string(i) + " out of range (dim " + std::to_string(shape[r]) + ")");
			idx.push_back(i);
		}
		if (!seen.insert(idx).second)
			throw InputError(rpath, "duplicate entry");
		auto v = read_scalar(row[shape.size()], index_path(rpath, shape.size()));
		if (!alternating) {
			t.at(idx) = v;
			continue;
		}
		if (!increasing_tail(idx))
			throw InputError(rpath, "alternating tensor: indices after the first must be strictly increasing");
		set_alternating(t, {idx[0]}, {idx.begin() + 1, idx.end()}, v);
	}
	return t;
}

LinearMapData read_map(const json& j, const std::string& path, const Space& space, Mask domain)
{
	allow_only(j, path, {"degree", "images"});
	if (!j.contains("degree"))
		throw InputError(key_path(path, "degree"), "missing field");
	auto degree = static_cast<unsigned>(read_size(j.at("degree"), key_path(path, "degree"), 32));
	auto m = LinearMapData::zero(space, degree);
	if (j.contains("images")) {
		const auto& images = j.at("images");
		auto ipath = key_path(path, "images");
		require_object(images, ipath);
		for (const auto& [label, text] : images.items()) {
			auto lpath = key_path(ipath, label);
			std::size_t i;
			try {
				i = parse_space_label(space, label);
			} catch (const std::exception& e) {
				throw InputError(lpath, e.what());
			}
			if (!(domain & (Mask{1} << i)))
				throw InputError(lpath, "map is not defined on " + label);
			if (!text.is_string())
				throw InputError(lpath, "expected a multivector string");
			try {
				m.images[i] = parse_multivector(space, text.get<std::string>());
			} catch (const std::exception& e) {
				throw InputError(lpath, e.what());
			}
		}
	}
	try {
		m.check();
	} catch (const std::exception& e) {
		throw InputError(path, e.what());
	}
	return m;
}

struct Reader
{
	const json& doc;
	const KindSpec& spec;
	std::size_t n = 0, m = 0;

	Tensor tensor(const std::string& name) const
	{
		auto shape = tensor_spec(name).shape(n, m);
		if (!doc.contains("tensors") || !doc.at("tensors").contains(name))
			return Tensor(shape);
		return read_tensor(doc.at("tensors").at(name), "$.tensors." + name, shape, tensor_spec(name).alternating);
	}
	bool has_map(const std::string& name) const { return doc.contains("maps") && doc.at("maps").contains(name); }
	LinearMapData map(const std::string& name, const Space& space, Mask domain) const
	{
		return read_map(doc.at("maps").at(name), "$.maps." + name, space, domain);
	}
	CrossedModuleData cm() const
	{
		CrossedModuleData c(LieAlgebraData(tensor("bracket_theta")), LieAlgebraData(tensor("bracket_g")));
		c.phi = tensor("phi");
		c.action = tensor("action");
		return c;
	}
	WeakLie2Coalgebra coalgebra(const Tensor& phi) const
	{
		auto c = WeakLie2Coalgebra::zero(m, n);
		c.phi = phi;
		c.omega = tensor("omega");
		c.delta = tensor("delta");
		c.eta = tensor("eta");
		return c;
	}
	WeakLie2Algebra algebra() const
	{
		auto a = WeakLie2Algebra::zero(m, n);
		a.phi = tensor("phi");
		a.bracket = tensor("bracket_g");
		a.action = tensor("action");
		a.h = tensor("h");
		return a;
	}
};

template <class F> auto checked(F&& f)
{
	try {
		return f();
	} catch (const InputError&) {
		throw;
	} catch (const std::invalid_argument& e) {
		throw InputError("$", e.what());
	} catch (const std::out_of_range& e) {
		throw InputError("$", e.what());
	}
}

} // namespace

const std::vector<std::string>& kind_names()
{
	static const std::vector<std::string> names = [] {
		std::vector<std::string> v;
		for (const auto& k : kind_specs())
			v.push_back(k.name);
		return v;
	}();
	return names;
}

std::string kind_name(const Structure& s) { return kind_specs().at(s.index()).name; }

Multivector parse_multivector(const Space& space, std::string_view text)
{
	Multivector r(space);
	for (const auto& t : split_terms(text)) {
		Multivector term = Multivector::scalar(space, t.coeff);
		if (!t.monomial.empty()) {
			std::size_t start = 0;
			const std::string& mono = t.monomial;
			while (true) {
				auto hat = mono.find('^', start);
				auto label = std::string_view(mono).substr(start, hat == std::string::npos ? std::string::npos : hat - start);
				term = wedge(term, Multivector::basis(space, parse_space_label(space, label)));
				if (hat == std::string::npos)
					break;
				start = hat + 1;
			}
		}
		r += term;
	}
	return r;
}

SElement parse_selement(std::string_view text)
{
	SElement r;
	for (const auto& t : split_terms(text))
		r.add_product(t.monomial.empty() ? SMonomial{} : parse_monomial(t.monomial), t.coeff);
	return r;
}

std::vector<TensorField> tensor_fields(const std::string& kind, std::size_t n, std::size_t m)
{
	for (const auto& k : kind_specs())
		if (k.name == kind) {
			std::vector<TensorField> out;
			for (const auto& t : k.tensors) {
				const auto& spec = tensor_spec(t);
				out.push_back({t, spec.shape(n, m), spec.alternating});
			}
			return out;
		}
	throw std::invalid_argument("unknown structure kind '" + kind + "'");
}

std::string serialize(const Structure& s)
{
	Writer w;
	w.doc["format"] = structure_format;
	w.doc["structure"] = kind_name(s);
	std::visit(
	    [&w](const auto& x) {
		    using T = std::decay_t<decltype(x)>;
		    if constexpr (std::is_same_v<T, WeakLie2Algebra>) {
			    w.dims_gtheta(x.g_dim, x.theta_dim);
			    w.tensor("action", x.action);
			    w.tensor("bracket_g", x.bracket);
			    w.tensor("h", x.h);
			    w.tensor("phi", x.phi);
		    } else if constexpr (std::is_same_v<T, WeakLie2Coalgebra>) {
			    w.dims_gtheta(x.g_dim, x.theta_dim);
			    w.coalgebra_tensors(x);
			    w.tensor("phi", x.phi);
		    } else if constexpr (std::is_same_v<T, WeakLie2Bialgebra>) {
			    w.dims_gtheta(x.algebra.g_dim, x.algebra.theta_dim);
			    w.tensor("action", x.algebra.action);
			    w.tensor("bracket_g", x.algebra.bracket);
			    w.tensor("h", x.algebra.h);
			    w.tensor("phi", x.algebra.phi);
			    w.coalgebra_tensors(x.coalgebra);
		    } else if constexpr (std::is_same_v<T, CrossedModuleData>) {
			    w.cm(x);
		    } else if constexpr (std::is_same_v<T, LieBialgebraCrossedModule>) {
			    w.cm(x.primal);
			    w.tensor("action_star", x.dual.action);
			    w.tensor("bracket_g_star", x.dual.theta.constants());
			    w.tensor("bracket_theta_star", x.dual.g.constants());
			    w.tensor("phi_star", x.dual.phi);
		    } else if constexpr (std::is_same_v<T, LieBialgebraPair>) {
			    w.dims_l(x.L.dim());
			    w.tensor("bracket", x.L.constants());
			    w.tensor("cobracket", x.Lstar.constants());
		    } else if constexpr (std::is_same_v<T, QuasiTriple>) {
			    w.cm(x.pair.cm);
			    w.coalgebra_tensors(to_coalgebra(x));
		    } else if constexpr (std::is_same_v<T, InfinitesimalPair>) {
			    w.cm(x.cm);
			    w.doc["maps"]["omega"] = map_json(x.omega);
			    w.doc["maps"]["delta"] = map_json(x.delta);
			    w.doc["params"]["k"] = x.k;
		    } else if constexpr (std::is_same_v<T, RMatrix>) {
			    w.cm(x.cm);
			    w.doc["elements"]["r"] = x.r.to_string();
		    } else if constexpr (std::is_same_v<T, KDifferentialData>) {
			    w.dims_l(x.L.dim());
			    w.tensor("bracket", x.L.constants());
			    w.doc["maps"]["d"] = map_json(x.d);
		    } else if constexpr (std::is_same_v<T, LieAlgebraData>) {
			    w.dims_l(x.dim());
			    w.tensor("bracket", x.constants());
		    } else if constexpr (std::is_same_v<T, CocycleData>) {
			    w.cm(x.cm);
			    w.doc["maps"]["lambda"] = map_json(x.lambda);
		    } else if constexpr (std::is_same_v<T, ElementSet>) {
			    w.dims_gtheta(x.space.g_dim, x.space.theta_dim);
			    w.doc["elements"] = json::object();
			    for (const auto& [name, e] : x.elements)
				    w.doc["elements"][name] = e.to_string();
		    }
	    },
	    s);
	return w.doc.dump(2) + "\n";
}

Structure parse_structure(std::string_view text)
{
	json doc;
	try {
		doc = json::parse(text.begin(), text.end());
	} catch (const json::parse_error& e) {
		throw InputError("$", std::string("malformed JSON: ") + e.what());
	}
	allow_only(doc, "$", {"dims", "elements", "format", "maps", "params", "structure", "tensors"});
	for (const char* k : {"format", "structure", "dims"})
		if (!doc.contains(k))
			throw InputError(key_path("$", k), "missing field");
	if (!doc.at("format").is_string() || doc.at("format").get<std::string>() != structure_format)
		throw InputError("$.format", std::string("expected \"") + structure_format + "\"");
	if (!doc.at("structure").is_string())
		throw InputError("$.structure", "expected a string");
	const auto kind = doc.at("structure").get<std::string>();
	const auto& specs = kind_specs();
	auto it = std::find_if(specs.begin(), specs.end(), [&](const KindSpec& k) { return k.name == kind; });
	if (it == specs.end())
		throw InputError("$.structure", "unknown structure '" + kind + "'");
	const KindSpec& spec = *it;
	const auto index = static_cast<std::size_t>(it - specs.begin());

	Reader rd{doc, spec};
	if (spec.dims == Dims::GTheta) {
		allow_only(doc.at("dims"), "$.dims", {"g", "theta"});
		for (const char* k : {"g", "theta"})
			if (!doc.at("dims").contains(k))
				throw InputError(key_path("$.dims", k), "missing field");
		rd.n = read_size(doc.at("dims").at("g"), "$.dims.g", 32);
		rd.m = read_size(doc.at("dims").at("theta"), "$.dims.theta", 32);
		if (rd.n + rd.m > 32)
			throw InputError("$.dims", "g and theta together exceed 32 basis vectors");
	} else {
		allow_only(doc.at("dims"), "$.dims", {"L"});
		if (!doc.at("dims").contains("L"))
			throw InputError("$.dims.L", "missing field");
		rd.n = read_size(doc.at("dims").at("L"), "$.dims.L", 32);
	}
	if (doc.contains("tensors"))
		allow_only(doc.at("tensors"), "$.tensors", spec.tensors);
	if (doc.contains("maps"))
		allow_only(doc.at("maps"), "$.maps", spec.maps);
	if (doc.contains("params"))
		allow_only(doc.at("params"), "$.params", spec.params);
	for (const auto& p : spec.params)
		if (!doc.contains("params") || !doc.at("params").contains(p))
			throw InputError("$.params." + p, "missing field");
	if (doc.contains("elements")) {
		if (!spec.elements)
			throw InputError("$.elements", "unknown field");
		require_object(doc.at("elements"), "$.elements");
		for (const auto& [k, v] : doc.at("elements").items())
			if (!v.is_string())
				throw InputError(key_path("$.elements", k), "expected an element string");
	}

	const Space gt{rd.n, rd.m};
	auto element = [&](const std::string& name) -> const json& {
		if (!doc.contains("elements") || !doc.at("elements").contains(name))
			throw InputError("$.elements." + name, "missing field");
		return doc.at("elements").at(name);
	};

	return checked([&]() -> Structure {
		switch (index) {
		case 0: {
			auto a = rd.algebra();
			a.check();
			return a;
		}
		case 1: {
			auto c = rd.coalgebra(rd.tensor("phi"));
			c.check();
			return c;
		}
		case 2: {
			WeakLie2Bialgebra b{rd.algebra(), rd.coalgebra(rd.tensor("phi"))};
			b.check();
			return b;
		}
		case 3: {
			auto c = rd.cm();
			c.check_shapes();
			return c;
		}
		case 4: {
			LieBialgebraCrossedModule b{rd.cm(), CrossedModuleData(LieAlgebraData(rd.tensor("bracket_g_star")),
			                                                       LieAlgebraData(rd.tensor("bracket_theta_star")))};
			b.dual.phi = rd.tensor("phi_star");
			b.dual.action = rd.tensor("action_star");
			b.primal.check_shapes();
			b.dual.check_shapes();
			return b;
		}
		case 5:
			return LieBialgebraPair{LieAlgebraData(rd.tensor("bracket")), LieAlgebraData(rd.tensor("cobracket"))};
		case 6: {
			auto c = rd.cm();
			auto t = to_quasi_triple(c, rd.coalgebra(c.phi));
			t.check();
			return t;
		}
		case 7: {
			auto c = rd.cm();
			auto k = static_cast<unsigned>(read_size(doc.at("params").at("k"), "$.params.k", 32));
			InfinitesimalPair p = InfinitesimalPair::zero(c, k);
			if (rd.has_map("omega"))
				p.omega = rd.map("omega", gt, gt.theta_mask());
			if (rd.has_map("delta"))
				p.delta = rd.map("delta", gt, gt.g_mask());
			p.check();
			return p;
		}
		case 8: {
			RMatrix r{rd.cm(), Multivector(gt)};
			try {
				r.r = parse_multivector(gt, element("r").get<std::string>());
			} catch (const InputError&) {
				throw;
			} catch (const std::exception& e) {
				throw InputError("$.elements.r", e.what());
			}
			if (doc.at("elements").size() != 1)
				throw InputError("$.elements", "only \"r\" is allowed");
			r.check();
			return r;
		}
		case 9: {
			if (!rd.has_map("d"))
				throw InputError("$.maps.d", "missing field");
			const Space ls{rd.n, 0};
			return KDifferentialData{LieAlgebraData(rd.tensor("bracket")), rd.map("d", ls, ls.g_mask())};
		}
		case 10:
			return LieAlgebraData(rd.tensor("bracket"));
		case 11: {
			if (!rd.has_map("lambda"))
				throw InputError("$.maps.lambda", "missing field");
			auto c = rd.cm();
			c.check_shapes();
			return CocycleData{c, rd.map("lambda", gt, gt.g_mask())};
		}
		default: {
			ElementSet es{gt, {}};
			if (doc.contains("elements"))
				for (const auto& [name, v] : doc.at("elements").items()) {
					try {
						auto e = parse_selement(v.get<std::string>());
						for (const auto& [mono, c] : e.terms())
							for (auto g : mono) {
								bool on_g = g.family == Family::G || g.family == Family::GStar;
								if (g.index >= (on_g ? rd.n : rd.m))
									throw std::invalid_argument("generator " + generator_label(g) + " out of range");
							}
						es.elements[name] = std::move(e);
					} catch (const std::exception& e) {
						throw InputError(key_path("$.elements", name), e.what());
					}
				}
			return es;
		}
		}
	});
}

} // namespace lie2b

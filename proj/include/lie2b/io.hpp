#pragma once

#include "lie2b/coboundary.hpp"
#include "lie2b/infinitesimal.hpp"
#include "lie2b/lie_bialgebra.hpp"
#include "lie2b/s_element.hpp"
#include "lie2b/structure_maps.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace lie2b {

/// Lie algebra L with the bracket of L* (the transpose of the cobracket of L).
struct LieBialgebraPair
{
	LieAlgebraData L;
	LieAlgebraData Lstar;
	friend bool operator==(const LieBialgebraPair&, const LieBialgebraPair&) = default;
};

/// Candidate k-differential d on wedge L, k = d.degree.
struct KDifferentialData
{
	LieAlgebraData L;
	LinearMapData d;
	friend bool operator==(const KDifferentialData&, const KDifferentialData&) = default;
};

/// Candidate 1-cocycle lambda: g -> wedge^l theta over a crossed module.
struct CocycleData
{
	CrossedModuleData cm;
	LinearMapData lambda;
	friend bool operator==(const CocycleData&, const CocycleData&) = default;
};

/// Named elements of the big-bracket algebra over g (+) theta.
struct ElementSet
{
	Space space;
	std::map<std::string, SElement> elements;
	friend bool operator==(const ElementSet&, const ElementSet&) = default;
};

/// Everything a structure file can describe. The alternative determines the
/// "structure" field, see kind_name.
using Structure = std::variant<WeakLie2Algebra, WeakLie2Coalgebra, WeakLie2Bialgebra, CrossedModuleData,
                               LieBialgebraCrossedModule, LieBialgebraPair, QuasiTriple, InfinitesimalPair, RMatrix,
                               KDifferentialData, LieAlgebraData, CocycleData, ElementSet>;

/// "lie2alg", "lie2coalg", "lie2bialg", "crossed-module", "bicrossed-module", "lie-bialgebra",
/// "quasi-triple", "infinitesimal-pair", "r-matrix", "k-differential", "lie-algebra",
/// "cocycle", "s-element".
std::string kind_name(const Structure& s);
const std::vector<std::string>& kind_names();

inline constexpr const char* structure_format = "lie2b-structure/1";

/// Schema or content error in a structure file. `path` is a JSON path such as
/// "$.tensors.phi.entries[3][1]", or "$" for document-level errors.
class InputError : public std::runtime_error
{
  public:
	InputError(std::string path, const std::string& message)
	    : std::runtime_error(path + ": " + message)
	    , path_(std::move(path))
	{
	}
	const std::string& path() const { return path_; }

  private:
	std::string path_;
};

/// Exact inverse of Multivector::to_string on `space`. Also accepts unordered labels
/// ("u1^x0") and bare monomials. Throws std::invalid_argument.
Multivector parse_multivector(const Space& space, std::string_view text);
/// Exact inverse of SElement::to_string. Throws std::invalid_argument.
SElement parse_selement(std::string_view text);

/// A tensor field of the file format. Alternating fields store only entries whose
/// indices after the first are strictly increasing.
struct TensorField
{
	std::string name;
	std::vector<std::size_t> shape;
	bool alternating = false;
};
/// The tensor fields of `kind` for dims n (g or L) and m (theta, 0 for L kinds).
/// Throws std::invalid_argument for unknown kinds.
std::vector<TensorField> tensor_fields(const std::string& kind, std::size_t n, std::size_t m);

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string serialize(const Structure& s);
/// Throws InputError on malformed JSON, unknown fields, bad shapes or indices.
Structure parse_structure(std::string_view text);

} // namespace lie2b

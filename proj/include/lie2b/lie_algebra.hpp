#pragma once

#include "lie2b/scalar.hpp"
#include "lie2b/tensor.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace lie2b {

/// Sparse vector in a based space: (basis index, coefficient) pairs, index-sorted, no zeros.
using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

/// Structure constants [e_i, e_j] = sum_k c(k, i, j) e_k.
///
/// Stored data may violate antisymmetry or Jacobi; the verifiers report that.
class LieAlgebraData
{
  public:
	LieAlgebraData() = default;
	explicit LieAlgebraData(std::size_t dim);
	/// Takes a rank-3 tensor with shape {dim, dim, dim}, indexed (k, i, j).
	explicit LieAlgebraData(Tensor constants);

	std::size_t dim() const { return dim_; }
	const Tensor& constants() const { return c_; }

	/// Sets c(k,i,j) = v and c(k,j,i) = -v.
	void set_bracket(std::size_t i, std::size_t j, std::size_t k, const Scalar& v);

	const SparseVector& bracket(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
	std::vector<Scalar> bracket(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;

	bool is_abelian() const { return c_.all_zero(); }
	bool is_antisymmetric() const;
	/// Jacobiator [[e_i,e_j],e_k] + cyclic, as a dense vector.
	std::vector<Scalar> jacobiator(std::size_t i, std::size_t j, std::size_t k) const;

	friend bool operator==(const LieAlgebraData& a, const LieAlgebraData& b) { return a.c_ == b.c_; }

  private:
	void rebuild();

	std::size_t dim_ = 0;
	Tensor c_;
	std::vector<SparseVector> table_;
};

/// Killing-type trace form tr(ad_x ad_y) on basis vectors.
Scalar trace_form(const LieAlgebraData& L, std::size_t i, std::size_t j);

/// Dense vector as text in the basis <prefix>0, <prefix>1, ...; "0" for zero.
std::string dense_text(const std::vector<Scalar>& v, const std::string& prefix);

/// Adds `b` scaled by `s` into dense vector `acc`.
void axpy(std::vector<Scalar>& acc, const Scalar& s, const SparseVector& b);

} // namespace lie2b

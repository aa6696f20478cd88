#pragma once

#include "lie2b/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace lie2b {

/// Dense rank-n array of scalars, row-major. Holds structure constants.
class Tensor
{
  public:
	Tensor() = default;
	explicit Tensor(std::vector<std::size_t> shape)
	    : shape_(std::move(shape))
	{
		std::size_t n = 1;
		for (auto s : shape_)
			n *= s;
		data_.assign(n, Scalar(0));
	}

	const std::vector<std::size_t>& shape() const { return shape_; }
	std::size_t rank() const { return shape_.size(); }
	std::size_t size() const { return data_.size(); }

	Scalar& operator()(std::initializer_list<std::size_t> idx) { return data_[offset(idx)]; }
	const Scalar& operator()(std::initializer_list<std::size_t> idx) const { return data_[offset(idx)]; }
	Scalar& at(const std::vector<std::size_t>& idx) { return data_[offset(idx)]; }
	const Scalar& at(const std::vector<std::size_t>& idx) const { return data_[offset(idx)]; }

	Scalar& flat(std::size_t i) { return data_[i]; }
	const Scalar& flat(std::size_t i) const { return data_[i]; }

	/// Multi-index of flat position i.
	std::vector<std::size_t> unflatten(std::size_t i) const
	{
		std::vector<std::size_t> idx(shape_.size());
		for (std::size_t r = shape_.size(); r-- > 0;) {
			idx[r] = i % shape_[r];
			i /= shape_[r];
		}
		return idx;
	}

	bool all_zero() const
	{
		for (const auto& v : data_)
			if (sgn(v) != 0)
				return false;
		return true;
	}

	friend bool operator==(const Tensor& a, const Tensor& b)
	{
		return a.shape_ == b.shape_ && a.data_ == b.data_;
	}

  private:
	template <class Idx> std::size_t offset(const Idx& idx) const
	{
		if (idx.size() != shape_.size())
			throw std::out_of_range("tensor rank mismatch");
		std::size_t off = 0, r = 0;
		for (auto i : idx) {
			if (i >= shape_[r])
				throw std::out_of_range("tensor index out of range");
			off = off * shape_[r] + i;
			++r;
		}
		return off;
	}

	std::vector<std::size_t> shape_;
	std::vector<Scalar> data_;
};

} // namespace lie2b

#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "flowfn/errors.hpp"
#include "flowfn/types.hpp"

namespace flowfn {

// A named, contiguous slice of the flat parameter vector. Matrices are
// stored column-major; vectors have cols == 1.
struct ParamSegment {
  std::string name;
  Index offset = 0;
  Index rows = 0;
  Index cols = 1;

  Index size() const { return rows * cols; }
};

// Flat 64-bit parameter storage. Segments are appended once at model
// construction; offsets are contiguous and cover the whole array.
class ParamVector {
 public:
  // Returns the index of the new segment.
  int add_segment(std::string name, Index rows, Index cols = 1);

  int segment_index(std::string_view name) const;
  const ParamSegment& segment(int idx) const { return segments_[static_cast<std::size_t>(idx)]; }
  const std::vector<ParamSegment>& segments() const { return segments_; }

  Eigen::Map<const Matrix> matrix(int idx) const;
  Eigen::Map<Matrix> matrix(int idx);
  Eigen::Map<const Vector> vector(int idx) const;
  Eigen::Map<Vector> vector(int idx);

  const Vector& values() const { return values_; }
  Vector& values() { return values_; }
  Index size() const { return values_.size(); }

 private:
  Vector values_;
  std::vector<ParamSegment> segments_;
  std::unordered_map<std::string, int> by_name_;
};

}  // namespace flowfn

#include "flowfn/param_vector.hpp"

namespace flowfn {

int ParamVector::add_segment(std::string name, Index rows, Index cols) {
  if (rows < 1 || cols < 1) throw ShapeError("segment '" + name + "' must have positive shape");
  if (by_name_.count(name)) throw ShapeError("duplicate segment name '" + name + "'");
  ParamSegment seg;
  seg.name = std::move(name);
  seg.offset = values_.size();
  seg.rows = rows;
  seg.cols = cols;
  values_.conservativeResize(seg.offset + seg.size());
  values_.tail(seg.size()).setZero();
  segments_.push_back(seg);
  int idx = static_cast<int>(segments_.size()) - 1;
  by_name_.emplace(segments_.back().name, idx);
  return idx;
}

int ParamVector::segment_index(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) throw ShapeError("unknown segment '" + std::string(name) + "'");
  return it->second;
}

Eigen::Map<const Matrix> ParamVector::matrix(int idx) const {
  const auto& s = segment(idx);
  return {values_.data() + s.offset, s.rows, s.cols};
}

Eigen::Map<Matrix> ParamVector::matrix(int idx) {
  const auto& s = segment(idx);
  return {values_.data() + s.offset, s.rows, s.cols};
}

Eigen::Map<const Vector> ParamVector::vector(int idx) const {
  const auto& s = segment(idx);
  return {values_.data() + s.offset, s.size()};
}

Eigen::Map<Vector> ParamVector::vector(int idx) {
  const auto& s = segment(idx);
  return {values_.data() + s.offset, s.size()};
}

}  // namespace flowfn

#pragma once

#include "xdhh/core/errors.hpp"

namespace xdhh {

// The two knobs every domain heuristic may consult. Both live in [0,1].
class SearchParameters {
 public:
  double intensity_of_mutation() const { return intensity_; }
  double depth_of_search() const { return depth_; }

  void set_intensity_of_mutation(double a) {
    check(a, "intensity_of_mutation");
    intensity_ = a;
  }

  void set_depth_of_search(double b) {
    check(b, "depth_of_search");
    depth_ = b;
  }

 private:
  static void check(double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0))
      raise(Errc::InvalidArgument, std::string(name) + " must be in [0,1]");
  }

  double intensity_ = 0.2;
  double depth_ = 0.2;
};

}  // namespace xdhh

#include "zform/degree.hpp"

namespace zform {

std::string Degree::str() const {
  std::string s = "(";
  for (size_t i = 0; i < bits_.size(); ++i) {
    if (i) s += ",";
    s += bits_[i] ? '1' : '0';
  }
  s += ")";
  return s;
}

} // namespace zform

#pragma once

#include <string_view>
#include <vector>

namespace limcyc::appendix_data {

struct Source {
  std::string_view name;
  std::string_view text;  // infix, variables u, v, g
};

const std::vector<Source>& general();
const std::vector<Source>& displays();

}  // namespace limcyc::appendix_data

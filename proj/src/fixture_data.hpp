#pragma once

#include <string_view>
#include <vector>

namespace clocklattice::detail {

struct EmbeddedFile {
  std::string_view name;
  std::string_view content;
};

const std::vector<EmbeddedFile>& embedded_fixtures();

}  // namespace clocklattice::detail

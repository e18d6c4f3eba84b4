#pragma once

#include <memory>
#include <vector>

#include "hypergrid/numeration.hpp"

namespace hypergrid::detail {

// u_0..u_m with m >= n; the returned table never changes
std::shared_ptr<const std::vector<Natural>> u_table(int p, int n);

}  // namespace hypergrid::detail

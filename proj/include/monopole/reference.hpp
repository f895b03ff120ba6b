#pragma once

#include <string>
#include <vector>

#include "monopole/io.hpp"
#include "monopole/star_product.hpp"

namespace monopole {

/// Directory holding the stored reference tables (set at build time).
std::string default_data_dir();

/// Expands an index-notation operator table into explicit BidiffOperators B_0 .. B_N.
///
/// Each term carries a Gaussian-rational coefficient, a list of field factors ("beta_ij",
/// "dq^k beta_ij") and lists of derivatives ("p_i", "q^i") on the left and right factor;
/// every index letter is summed over 1..3.
std::vector<BidiffOperator> load_operator_table(const io::json& table);
std::vector<BidiffOperator> load_operator_table_file(const std::string& path);

}  // namespace monopole

#pragma once

#include <map>
#include <string>

#include "oppo/query.hpp"

namespace oppo {

/// The shipped example dataset and the row counts its bundled questions must
/// produce. The paths are relative to a data directory the caller supplies.
struct FixtureBundle {
  std::string schema_file;
  std::string data_file;
  std::map<query::CqId, std::size_t> expected_rows;
};

FixtureBundle telegram_fixture(const std::string& data_dir);

}  // namespace oppo

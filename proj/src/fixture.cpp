#include "oppo/fixture.hpp"

namespace oppo {

FixtureBundle telegram_fixture(const std::string& data_dir) {
  return FixtureBundle{
      data_dir + "/oppo_schema.ttl",
      data_dir + "/fixtures/telegram.ttl",
      {
          {query::CqId::CQ1_STORAGE_LOCATION, 2},
          {query::CqId::CQ2_MAX_12_MONTHS, 4},
          {query::CqId::CQ3_SECURITY_BY_DATATYPE, 1},
      },
  };
}

}  // namespace oppo

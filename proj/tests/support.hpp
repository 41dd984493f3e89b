#pragma once

#include <string>

#include "nlwidb/catalog.hpp"
#include "nlwidb/pipeline.hpp"

namespace support {

inline const char* shipped_config_path() { return NLWIDB_SHIPPED_CONFIG; }

inline const nlwidb::Catalog& shipped() {
    static const nlwidb::Catalog c = nlwidb::load_catalog_file(NLWIDB_SHIPPED_CONFIG);
    return c;
}

inline const nlwidb::Engine& engine() {
    static const nlwidb::Engine e(shipped());
    return e;
}

inline const std::string worked_question =
    "What is the year of establishment of department and code of department which department name equals "
    "\"Department of Economics and Management\"?";

inline const std::string q1 = "What are the available names of departments?";
inline const std::string q2 = "What are the available departments?";
inline const std::string q3 = "What are the available departments and faculties?";
inline const std::string q4 = "What is the maximum year of establishment of departments?";
inline const std::string q5 = "What are the department names which year of establishment of department equals \"1997\"?";

} // namespace support

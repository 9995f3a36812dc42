#pragma once

#include <iosfwd>
#include <string>

#include "xdescent/relation.hpp"

namespace xdescent {

/// JSON relation format:
///   {"kind":"pairs","pairs":[[a,b],...]}
///   {"kind":"greater"} | {"kind":"less"}
///   {"kind":"diff","deltas":[d1,...]}                 (nonzero integers)
///   {"kind":"periodic","m":m,"f":[[...],...]}         (m rows of m 0/1 entries)
///   {"kind":"union"|"intersection","parts":[...]}
///   {"kind":"complement","of":{...}}
RelationSpec relation_from_json(const std::string& text);
RelationSpec relation_from_file(const std::string& path);
std::string relation_to_json(const RelationSpec& spec);

}  // namespace xdescent

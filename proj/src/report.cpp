#include "gca/report.hpp"

#include <algorithm>
#include <ostream>

namespace gca {

void Report::add(const std::string& type, const Record& fields) {
  Record r;
  r["record"] = type;
  for (const auto& [k, v] : fields.items()) r[k] = v;
  records_.push_back(std::move(r));
}

void Report::write(std::ostream& os, Format format) const {
  if (format == Format::Machine) {
    for (const auto& r : records_) os << r.dump() << '\n';
    return;
  }
  bool first = true;
  for (const auto& r : records_) {
    if (!first) os << '\n';
    first = false;
    os << "[" << r.at("record").get<std::string>() << "]\n";
    std::size_t width = 0;
    for (const auto& [k, v] : r.items())
      if (k != "record") width = std::max(width, k.size());
    for (const auto& [k, v] : r.items()) {
      if (k == "record") continue;
      os << "  " << k << std::string(width - k.size() + 2, ' ');
      os << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    }
  }
}

}  // namespace gca

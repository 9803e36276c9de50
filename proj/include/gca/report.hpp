#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace gca {

enum class Format { Human, Machine };

/// Ordered list of records. Machine output is one JSON object per line; human output is
/// one key/value table per record.
class Report {
 public:
  using Record = nlohmann::ordered_json;

  /// Prepends {"record": type} to the fields.
  void add(const std::string& type, const Record& fields);
  const std::vector<Record>& records() const { return records_; }
  void write(std::ostream& os, Format format) const;

 private:
  std::vector<Record> records_;
};

}  // namespace gca

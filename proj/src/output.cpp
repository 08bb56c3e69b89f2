#include "schreier/output.hpp"

#include <sstream>

#include "json.hpp"

namespace schreier {

OutputFormat parse_output_format(const std::string& name) {
  if (name == "plain") return OutputFormat::Plain;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "jsonl") return OutputFormat::Jsonl;
  if (name == "bfile") return OutputFormat::Bfile;
  throw Error(ErrorCode::InvalidArgument, "unknown output format '" + name + "'");
}

std::string format_table(const SequenceTable& table, OutputFormat format) {
  std::ostringstream out;
  if (format == OutputFormat::Csv) out << "n,value\n";
  for (std::uint64_t n = 1; n <= table.max_n(); ++n) {
    const std::string value = table.at(n).str();
    switch (format) {
      case OutputFormat::Plain:
      case OutputFormat::Bfile:
        out << n << ' ' << value << '\n';
        break;
      case OutputFormat::Csv:
        out << n << ',' << value << '\n';
        break;
      case OutputFormat::Jsonl:
        out << nlohmann::ordered_json{{"n", n}, {"value", value}}.dump() << '\n';
        break;
    }
  }
  return out.str();
}

std::string set_stream_header(OutputFormat format) {
  return format == OutputFormat::Csv ? "size,elements\n" : "";
}

std::string format_set(const FinSet& set, OutputFormat format) {
  switch (format) {
    case OutputFormat::Plain:
      return set.to_string() + '\n';
    case OutputFormat::Csv: {
      std::string out = std::to_string(set.size()) + ",\"";
      for (std::size_t i = 0; i < set.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(set.elements()[i]);
      }
      return out + "\"\n";
    }
    case OutputFormat::Jsonl: {
      nlohmann::ordered_json j;
      j["size"] = set.size();
      j["elements"] = std::vector<Element>(set.elements().begin(), set.elements().end());
      return j.dump() + '\n';
    }
    case OutputFormat::Bfile:
      break;
  }
  throw Error(ErrorCode::InvalidArgument, "bfile output is only valid for sequence tables");
}

std::string format_report(const VerificationReport& report, OutputFormat format) {
  if (format == OutputFormat::Plain) return to_text(report);
  if (format == OutputFormat::Jsonl) return to_json(report) + '\n';
  throw Error(ErrorCode::InvalidArgument, "reports support plain and jsonl output only");
}

}  // namespace schreier

#pragma once

#include <string>

#include "schreier/finset.hpp"
#include "schreier/sequences.hpp"
#include "schreier/verification.hpp"

namespace schreier {

enum class OutputFormat { Plain, Csv, Jsonl, Bfile };

/// "plain", "csv", "jsonl", "bfile". Throws InvalidArgument otherwise.
OutputFormat parse_output_format(const std::string& name);

/// Whole table, every line LF-terminated.
///   plain  "n value"
///   csv    header "n,value", then "n,value"
///   jsonl  {"n":1,"value":"1"} with the value as a decimal string
///   bfile  "n value", no header: an OEIS b-file body
std::string format_table(const SequenceTable& table, OutputFormat format);

/// Header emitted once before a stream of format_set lines (empty for
/// formats without one).
std::string set_stream_header(OutputFormat format);

/// One set with trailing LF.
///   plain  {a1,a2,...}
///   csv    size,"a1 a2 ..."
///   jsonl  {"size":2,"elements":[2,3]}
/// Bfile is rejected with InvalidArgument.
std::string format_set(const FinSet& set, OutputFormat format);

/// Plain gives the text record, jsonl one JSON line. Others are rejected.
std::string format_report(const VerificationReport& report, OutputFormat format);

}  // namespace schreier

#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "snlab/hop.hpp"
#include "snlab/interp.hpp"
#include "snlab/lethargy.hpp"
#include "snlab/operators.hpp"
#include "snlab/represent.hpp"
#include "snlab/seqspace.hpp"
#include "snlab/snumbers.hpp"

namespace snlab {

/// Malformed matrix or sequence input; what() carries the location.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Matrix JSON: {"rows": m, "cols": n, "data": [[re, im], ...]} row-major.
nlohmann::json matrix_to_json(const ComplexMatrix& t);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

// Matrix CSV: one row per line, cells "re", "re+imj", "re-imj" or "imj".
std::string matrix_to_csv(const ComplexMatrix& t);
ComplexMatrix matrix_from_csv(const std::string& text);
Complex parse_complex_cell(const std::string& cell);

// Sequence CSV: one value per line, complex as "re,im".
std::string sequence_to_csv(const SeqSample& x);
SeqSample sequence_from_csv(const std::string& text);
// Sequence JSON: array of numbers or [re, im] pairs.
nlohmann::json sequence_to_json(const SeqSample& x);
SeqSample sequence_from_json(const nlohmann::json& j);

/// Reads by extension (.json or .csv). Errors name the file and location.
ComplexMatrix read_matrix(const std::filesystem::path& path);
SeqSample read_sequence(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

nlohmann::json to_json(const ExtendedReal& e);
nlohmann::json to_json(const Complex& z);
nlohmann::json to_json(const NormValue& v);
nlohmann::json to_json(const DecayReport& r);
nlohmann::json to_json(const SpectrumResult& s);
nlohmann::json to_json(const SNumberTable& t);
nlohmann::json to_json(const HCertificate& c);
nlohmann::json to_json(const MarkusReport& r);
nlohmann::json to_json(const CorollaryReport& r);
nlohmann::json to_json(const InterpNorm& n);
nlohmann::json to_json(const EmbeddingReport& r);
nlohmann::json to_json(const LorentzIdReport& r);
nlohmann::json to_json(const JacksonBernsteinReport& r);
nlohmann::json to_json(const OperatorApproxNorm& r);
nlohmann::json to_json(const InclusionReport& r);
nlohmann::json to_json(const DyadicDecomposition& d);  // manifest without blocks
nlohmann::json to_json(const RepEquivalenceReport& r);
nlohmann::json to_json(const WidthFloorReport& r);
nlohmann::json to_json(const KernelOperatorSpec& k);

/// CSV with header n,alpha,delta,singular,abs_eigen,exact.
std::string snumber_table_csv(const SNumberTable& t);
/// CSV with header t,K,method.
std::string k_curve_csv(const KCurve& c);

}  // namespace snlab

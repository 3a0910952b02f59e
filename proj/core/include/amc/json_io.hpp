#ifndef AMC_JSON_IO_HPP
#define AMC_JSON_IO_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "amc/clifford.hpp"
#include "amc/diagonal.hpp"
#include "amc/enumeration.hpp"
#include "amc/moebius.hpp"
#include "amc/semilattice.hpp"

namespace amc::io {

using nlohmann::json;

/// Input that is not well-formed JSON or does not follow the schema.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unreadable input file.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text starting with '{' or '[' is parsed as inline JSON, anything else is
/// read as a file path.
json load(const std::string& path_or_inline);

/// {"n": 3, "table": [[..], ..]} or {"n": 3, "hasse": [[s, t], ..]} with s > t,
/// plus optional "labels".
Validated<Semilattice> semilattice_from_json(const json& j);

/// {"skeleton": <semilattice>, "groups": [{"cyclic": [n1, ..]}, ..],
///  "homs": [{"from": s, "to": t, "gen_images": [[..], ..]}, ..]}
/// One group per skeleton element, in element order. Missing groups are
/// trivial; pairs without a listed hom get the trivial one.
Validated<CliffordSemigroup> clifford_from_json(const json& j);

/// "p/q" or "n".
json to_json(const Rational& r);
json to_json(const Matrix& m);
json to_json(const std::vector<Rational>& v);
json to_json(const ValidationReport& r);
json to_json(const Semilattice& s);
json to_json(const DiagonalCheck& c);
json to_json(const std::vector<SpectrumReport>& reports);
json to_json(const GapSearchReport& r);

/// Coefficients of x in the given element order.
json ordered(const L1Vector& x, const std::vector<Element>& order);

/// Nonzero extended Moebius values as [t, s, mu(t, s)] in index order.
json mobius_entries(const Semilattice& s, const MobiusTable& mu);

}  // namespace amc::io

#endif  // AMC_JSON_IO_HPP

// Obstruction reports and their JSON / text serialization.
//
// Requires nlohmann/json's single header "json.hpp" on the include path.

#ifndef KAHLEROBS_REPORT_HPP_
#define KAHLEROBS_REPORT_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <cstdio>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "intlinalg.hpp"

namespace kahlerobs {

  using Json = nlohmann::ordered_json;

  /// Test outcomes. Nothing here ever claims that a group is Kahler.
  enum class Verdict { not_kahler, not_kahler_hom, consistent, inconclusive, caveat };

  inline std::string to_string(Verdict v) {
    switch (v) {
      case Verdict::not_kahler:
        return "not_kahler";
      case Verdict::not_kahler_hom:
        return "not_kahler_hom";
      case Verdict::consistent:
        return "consistent";
      case Verdict::inconclusive:
        return "inconclusive";
      case Verdict::caveat:
        return "caveat";
    }
    return "";
  }

  inline Verdict verdict_from_string(std::string const& s) {
    for (Verdict v : {Verdict::not_kahler, Verdict::not_kahler_hom,
                      Verdict::consistent, Verdict::inconclusive,
                      Verdict::caveat}) {
      if (to_string(v) == s) {
        return v;
      }
    }
    throw InputError("unknown verdict '" + s + "'");
  }

  struct TestRecord {
    std::string name;
    std::string anchor;  // the criterion the test implements
    Verdict     verdict = Verdict::inconclusive;
    Json        witness = Json::object();
  };

  struct ObstructionReport {
    std::string             file;
    std::string             hash;
    std::uint64_t           seed = 0;
    std::string             subject;
    std::vector<TestRecord> tests;

    /// not_kahler if any test says so, then not_kahler_hom, then
    /// inconclusive for an empty battery, else consistent.
    Verdict overall() const {
      if (tests.empty()) {
        return Verdict::inconclusive;
      }
      for (Verdict v : {Verdict::not_kahler, Verdict::not_kahler_hom}) {
        for (auto const& t : tests) {
          if (t.verdict == v) {
            return v;
          }
        }
      }
      return Verdict::consistent;
    }
  };

  /// 64-bit FNV-1a, as 16 hex digits.
  inline std::string fnv1a_hex(std::string const& data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
  }

  ////////////////////////////////////////////////////////////////////////
  // Exact numbers in JSON: integers that fit in a long are numbers,
  // everything else is a decimal string ("-3/4", "123456789012345678901").
  ////////////////////////////////////////////////////////////////////////

  inline Json to_json(mpz_class const& x) {
    if (x.fits_slong_p()) {
      return x.get_si();
    }
    return x.get_str();
  }

  inline Json to_json(mpq_class const& x) {
    if (x.get_den() == 1) {
      return to_json(mpz_class(x.get_num()));
    }
    return x.get_str();
  }

  template <typename T>
  Json to_json(std::vector<T> const& v) {
    Json a = Json::array();
    for (auto const& x : v) {
      a.push_back(to_json(x));
    }
    return a;
  }

  template <typename T>
  Json to_json(Matrix<T> const& m) {
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      a.push_back(to_json(m.row(i)));
    }
    return a;
  }

  inline mpq_class rational_from_json(Json const& j) {
    if (j.is_number_integer()) {
      return mpq_class(mpz_class(j.get<long>()));
    }
    mpq_class q(j.get<std::string>());
    q.canonicalize();
    return q;
  }

  /// Rows of a matrix stored with to_json. Columns are taken from the first
  /// row, so an empty row list needs `cols`.
  inline RatMatrix rational_matrix_from_json(Json const& j, std::size_t cols = 0) {
    std::size_t rows = j.size();
    if (rows > 0) {
      cols = j[0].size();
    }
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t k = 0; k < cols; ++k) {
        m(i, k) = rational_from_json(j[i][k]);
      }
    }
    return m;
  }

  ////////////////////////////////////////////////////////////////////////
  // Reports
  ////////////////////////////////////////////////////////////////////////

  inline Json to_json(ObstructionReport const& r) {
    Json input;
    input["file"]    = r.file;
    input["hash"]    = r.hash;
    input["seed"]    = r.seed;
    input["subject"] = r.subject;
    Json tests       = Json::array();
    for (auto const& t : r.tests) {
      Json o;
      o["name"]    = t.name;
      o["anchor"]  = t.anchor;
      o["verdict"] = to_string(t.verdict);
      o["witness"] = t.witness;
      tests.push_back(std::move(o));
    }
    Json out;
    out["input"]   = std::move(input);
    out["tests"]   = std::move(tests);
    out["overall"] = to_string(r.overall());
    return out;
  }

  inline ObstructionReport report_from_json(Json const& j) {
    ObstructionReport r;
    try {
      r.file    = j.at("input").at("file").get<std::string>();
      r.hash    = j.at("input").at("hash").get<std::string>();
      r.seed    = j.at("input").at("seed").get<std::uint64_t>();
      r.subject = j.at("input").value("subject", "");
      for (auto const& t : j.at("tests")) {
        r.tests.push_back({t.at("name").get<std::string>(),
                           t.at("anchor").get<std::string>(),
                           verdict_from_string(t.at("verdict").get<std::string>()),
                           t.at("witness")});
      }
    } catch (Json::exception const& e) {
      throw InputError(std::string("malformed report: ") + e.what());
    }
    return r;
  }

  enum class ReportFormat { json, text };

  inline std::string emit_report(ObstructionReport const& r, ReportFormat f) {
    if (f == ReportFormat::json) {
      return to_json(r).dump(2) + "\n";
    }
    std::ostringstream os;
    os << "input:   " << r.file << " (fnv1a " << r.hash << ", seed " << r.seed
       << ")\n";
    if (!r.subject.empty()) {
      os << "subject: " << r.subject << "\n";
    }
    for (auto const& t : r.tests) {
      os << "\n[" << to_string(t.verdict) << "] " << t.name << "\n"
         << "  criterion: " << t.anchor << "\n";
      for (auto const& [k, v] : t.witness.items()) {
        os << "  " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
           << "\n";
      }
    }
    os << "\noverall: " << to_string(r.overall()) << "\n";
    return os.str();
  }

}  // namespace kahlerobs

#endif  // KAHLEROBS_REPORT_HPP_

#ifndef SYMPROD_SERIALIZE_HPP
#define SYMPROD_SERIALIZE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "symprod/distinguisher.hpp"
#include "symprod/ind_divisors.hpp"
#include "symprod/partitions.hpp"
#include "symprod/poincare.hpp"

namespace symprod {

/* Canonical tree encoding. Key order is fixed by construction
 * (ordered_json) and every unbounded integer renders as a full decimal
 * string, so serialization is byte-deterministic and exact. Bounded
 * structural fields (n, genus, ranks, degrees, dimensions) stay JSON
 * numbers.
 */
using ojson = nlohmann::ordered_json;

inline constexpr const char* kArtifactVersion = "0.1.0";

std::string integer_str(const Integer& v);
Integer integer_from_str(const std::string& s);

ojson coeffs_json(const PoincarePolynomial& p);
PoincarePolynomial poly_from_coeffs_json(const ojson& j);

ojson partition_json(const Partition& p);
Partition partition_from_json(const ojson& j);

ojson certificate_json(const NonIsoCertificate& c);
NonIsoCertificate certificate_from_json(const ojson& j);

ojson report_json(const ClassificationReport& r);
ClassificationReport report_from_json(const ojson& j);

ojson slope_json(const Slope& s);
Slope slope_from_json(const ojson& j);

ojson quot_index_json(const QuotIndex& q);
QuotIndex quot_index_from_json(const ojson& j);

/// Wraps a result payload with the command name, the echoed input and the
/// artifact version.
ojson make_envelope(const std::string& command, ojson input, ojson result);

} // namespace symprod

#endif

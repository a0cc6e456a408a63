#ifndef QFR_JSON_IO_HPP
#define QFR_JSON_IO_HPP

#include <json.hpp>

#include "qfr/adhm.hpp"
#include "qfr/filtered_rep.hpp"
#include "qfr/invariants.hpp"
#include "qfr/matrix.hpp"
#include "qfr/quiver.hpp"
#include "qfr/stabilizer.hpp"

namespace qfr {

// Insertion-ordered JSON keeps report bytes stable across runs.
using Json = nlohmann::ordered_json;

Json to_json(const Rat& r);
Json to_json(const Mat& m);       // array of row arrays of rational strings
Json matrix_row_major(const Mat& m);  // flat row-major rational strings
Json to_json(const Vec& v);
Json to_json(const Covec& v);
Json to_json(const Quiver& q);
Json to_json(const RepPoint& w);  // { n, matrices: { arrow -> flat row-major } }
RepPoint rep_point_from_json(const Json& j);
Json to_json(const GroupTuple& g);
Json to_json(const ClassificationReport& rep);
Json to_json(const GenericityReport& rep);
Json to_json(const StabilizerReport& rep);
Json to_json(const QuotientDimensionReport& rep);
Json to_json(const Verdict& v);
Json to_json(const SymbolicCertificate& c);
Json to_json(const ADHMData& d);
ADHMData adhm_from_json(const Json& j);
Json to_json(const ReducedPoint& p);
Json to_json(const IsospectralPoint& p);

} // namespace qfr

#endif

#ifndef ALCOMB_JSON_IO_HPP
#define ALCOMB_JSON_IO_HPP

#include <json.hpp>

#include "alcomb/homdim.hpp"
#include "alcomb/oracle.hpp"
#include "alcomb/schur.hpp"
#include "alcomb/symchar.hpp"

// JSON encodings of every report type.  Objects have sorted keys when
// dumped, so identical invocations print byte-identical output, and every
// encoding round-trips through from_json.

namespace alcomb {

using nlohmann::json;

void to_json(json& j, const Weight& w);
void from_json(const json& j, Weight& w);

void to_json(json& j, const Chain& ch);
void from_json(const json& j, Chain& ch);

void to_json(json& j, const ModuleLabel& l);
void from_json(const json& j, ModuleLabel& l);

void to_json(json& j, const DimReport& r);
void from_json(const json& j, DimReport& r);

void to_json(json& j, const ExtDegree& e);
void from_json(const json& j, ExtDegree& e);

void to_json(json& j, const BlockDimRow& r);
void from_json(const json& j, BlockDimRow& r);

void to_json(json& j, const CategoryODims& d);
void from_json(const json& j, CategoryODims& d);

void to_json(json& j, const SchurDimResult& r);
void from_json(const json& j, SchurDimResult& r);

void to_json(json& j, const VerificationReport& r);
void from_json(const json& j, VerificationReport& r);

void to_json(json& j, const PieriReport& r);
void from_json(const json& j, PieriReport& r);

void to_json(json& j, const SaturatedSet& s);
void from_json(const json& j, SaturatedSet& s);

void to_json(json& j, const RegularMax& m);
void from_json(const json& j, RegularMax& m);

}  // namespace alcomb

#endif

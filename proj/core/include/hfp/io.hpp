#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hfp/abelian.hpp"
#include "hfp/int_matrix.hpp"
#include "hfp/lens.hpp"
#include "hfp/obstruct.hpp"
#include "hfp/plumbing_double.hpp"

// Machine-readable emitters. Rationals are always "p/q" strings; JSON keys
// keep a fixed insertion order so output is byte-stable.
namespace hfp::io {

// Correction-term tables: columns kind,i,j,d_b,d_t,extra_summand.
std::string table_csv(const std::vector<DoubleTableRow>& rows);
std::string table_json(const std::vector<DoubleTableRow>& rows);
std::vector<DoubleTableRow> parse_table_csv(std::string_view text);
std::vector<DoubleTableRow> parse_table_json(std::string_view text);

// Lens tables: columns i,d with the orientation stated alongside.
std::string lens_csv(const LensSpace& lens, Orientation o, const std::vector<Rational>& d);
std::string lens_json(const LensSpace& lens, Orientation o, const std::vector<Rational>& d);

std::string verdict_json(const ObstructionVerdict& v);
ObstructionVerdict parse_verdict_json(std::string_view text);
/// One line per violation: spinc,c1sq,bound,orientation; first line is the
/// status.
std::string verdict_csv(const ObstructionVerdict& v);
ObstructionVerdict parse_verdict_csv(std::string_view text);

std::string family_json(const FamilyReport& r);
std::string family_csv(const FamilyReport& r);
std::string cp2_report_json(const Cp2Report& r);

std::string group_json(const FinAbelianGroup& g);
std::string matrix_json(const IntMatrix& m);

}  // namespace hfp::io

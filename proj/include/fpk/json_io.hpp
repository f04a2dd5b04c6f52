#pragma once

#include "json.hpp"

#include "fpk/gaussian.hpp"
#include "fpk/measures.hpp"
#include "fpk/noncrossing.hpp"
#include "fpk/series.hpp"

namespace fpk {

using json = nlohmann::ordered_json;

json to_json(const Rational& r);
Rational rational_from_json(const json& j);

json to_json(const GaussianRational& z);
GaussianRational gaussian_from_json(const json& j);

json to_json(const Seq<Rational>& s);
Seq<Rational> seq_from_json(const json& j);

json to_json(const TruncSeries<Rational>& f);
TruncSeries<Rational> series_from_json(const json& j);

json to_json(const NCPartition& p);
NCPartition ncpartition_from_json(const json& j);

json to_json(const MeasureSpec& spec);
MeasureSpec measure_from_json(const json& j);

json to_json(const CharPair& p);
CharPair charpair_from_json(const json& j);

// {"error": code, "detail": message}
json error_json(const DomainError& e);

} // namespace fpk

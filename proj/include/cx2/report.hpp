#pragma once

#include "cx2/lemmas.hpp"
#include "cx2/serialize.hpp"

namespace cx2 {

Json toJson(const ArrowClassification& c);
Json toJson(const EquivalenceData& e);
Json toJson(const ExactnessReport& r);
Json toJson(const LoopExactness& r);
Json toJson(const PuppeResult& p);
Json toJson(const SnakeResult& s);
Json toJson(const AnacondaResult& a);
Json toJson(const LesResult& l);
Json toJson(const Report3x3& r);
Json toJson(const ShortFiveReport& r);

// The square over the integers with its classification and the failed splitting,
// next to the contrast square over F_2.
Json demoNonSplit();

}  // namespace cx2

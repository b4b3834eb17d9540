#pragma once
#include <stdexcept>
#include <string>

namespace finecurves {

// Base for every domain error raised by the library. The CLI maps these to
// exit code 2 (usage / invalid input), while negative verification verdicts
// and obstructions are ordinary return values mapped to exit code 1.
struct Error : std::runtime_error {
    explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

#define FINECURVES_ERROR(NAME)                                                 \
    struct NAME : Error {                                                      \
        explicit NAME(const std::string& m) : Error(std::string(#NAME ": ") + m) {} \
    }

FINECURVES_ERROR(ParseError);
FINECURVES_ERROR(DegenerateSegment);
FINECURVES_ERROR(DegenerateStar);
FINECURVES_ERROR(InvalidExtents);
FINECURVES_ERROR(MouthPlacement);
FINECURVES_ERROR(UnknownChart);
FINECURVES_ERROR(UnknownLabel);
FINECURVES_ERROR(DuplicateLabel);
FINECURVES_ERROR(OpenCurve);
FINECURVES_ERROR(LegOutsideChart);
FINECURVES_ERROR(LegInMouth);
FINECURVES_ERROR(EmptyLeg);
FINECURVES_ERROR(NotBaseChartCurve);
FINECURVES_ERROR(NotEmbedded);
FINECURVES_ERROR(DuplicateCurve);
FINECURVES_ERROR(UnsupportedSemantics);
FINECURVES_ERROR(BadGraph);
FINECURVES_ERROR(NotRealized);
FINECURVES_ERROR(RuleInapplicable);
FINECURVES_ERROR(OffsetTooLarge);
FINECURVES_ERROR(OffsetExhausted);
FINECURVES_ERROR(NotTouching);
FINECURVES_ERROR(NotABigon);
FINECURVES_ERROR(NotInnermost);
FINECURVES_ERROR(WrongIntersectionCount);
FINECURVES_ERROR(NoEssentialSurgery);
FINECURVES_ERROR(InfiniteIntersection);
FINECURVES_ERROR(NoDominatingVertex);
FINECURVES_ERROR(InvalidSpec);
FINECURVES_ERROR(MalformedGraph6);
FINECURVES_ERROR(MalformedCertificate);
FINECURVES_ERROR(NotSupported);
FINECURVES_ERROR(BudgetExceeded);
FINECURVES_ERROR(CycleBudgetExceeded);
FINECURVES_ERROR(IoFailure);

#undef FINECURVES_ERROR

} // namespace finecurves

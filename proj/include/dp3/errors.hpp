#pragma once

#include <stdexcept>
#include <string>

namespace dp3 {

// Every failure raised by the library derives from Error; `kind()` is a stable tag
// the CLI maps onto exit codes.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
    auto kind() const -> const std::string& { return kind_; }

private:
    std::string kind_;
};

#define DP3_ERROR(Name)                                                          \
    struct Name : Error {                                                        \
        explicit Name(const std::string& msg) : Error(#Name, msg) {}             \
    }

DP3_ERROR(InvalidRotation);
DP3_ERROR(NonPlanarRotation);
DP3_ERROR(Disconnected);
DP3_ERROR(DegenerateGraph);
DP3_ERROR(CyclicEdgeSet);
DP3_ERROR(NotACycle);
DP3_ERROR(ListSizeNot3);
DP3_ERROR(InvalidCover);
DP3_ERROR(ImproperPrecoloring);
DP3_ERROR(BoundaryTooLong);
DP3_ERROR(NotInScriptG);
DP3_ERROR(NotThreeDelta);
DP3_ERROR(BadK);
DP3_ERROR(ExtensionPreconditionFailed);
DP3_ERROR(SurgeryCollision);
DP3_ERROR(EnumerationBudgetExceeded);
DP3_ERROR(RationalOverflow);
DP3_ERROR(SyntaxError);
DP3_ERROR(GenerationBudgetExceeded);
DP3_ERROR(CatalogError);

#undef DP3_ERROR

} // namespace dp3

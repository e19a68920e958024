#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "hopfaz/comodule.hpp"
#include "json.hpp"

namespace hopfaz::cli {

inline constexpr const char* kDocumentSchema = "hopfaz/structure-constants/v1";

/// Schema violation located by a JSON pointer into the offending document.
class DocumentError : public std::invalid_argument {
public:
    DocumentError(std::string pointer, const std::string& message)
        : std::invalid_argument((pointer.empty() ? std::string("/") : pointer) + ": " + message), pointer_(std::move(pointer))
    {
    }
    const std::string& pointer() const { return pointer_; }

private:
    std::string pointer_;
};

struct ComoduleAlgebraBlock {
    ComoduleAlgebra algebra;
    CoactionSide side = CoactionSide::opposite;
};

/// A Hopf algebra by structure constants plus optional named functionals on
/// H (x) H and an optional comodule algebra over it.
struct StructureConstantDocument {
    std::shared_ptr<const HopfAlgebra> hopf;
    std::map<std::string, Functional2> functionals;
    std::optional<ComoduleAlgebraBlock> comodule_algebra;
};

StructureConstantDocument parse_document(const nlohmann::ordered_json& j);
nlohmann::ordered_json emit_document(const StructureConstantDocument& doc);

} // namespace hopfaz::cli

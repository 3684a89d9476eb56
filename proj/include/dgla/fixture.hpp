#pragma once

// The fixture file format: one self-contained JSON document per scenario.
// Rationals are strings "p/q", matrices row-major arrays (rows indexed by the
// target basis), structure constants are quadruple records. Unknown keys are
// rejected with their location.

#include "dgla/bv.hpp"
#include "dgla/dgla.hpp"
#include "dgla/lietype.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace dgla {

struct Fixture {
    DGLieAlgebra main;                      // space + differential + bracket
    std::optional<DBVAlgebra> dbv;          // when product/delta/k present
    std::map<std::string, DGLieAlgebra> algebras;  // auxiliary named DGLAs
    std::map<std::string, GradedMap> maps;
    std::map<std::string, Subspace> subspaces;
    std::optional<PiData> pi_example;
    nlohmann::json scenario;  // optional defaults for the CLI

    const DGLieAlgebra& algebra(const std::string& name) const;
    const GradedMap& map(const std::string& name) const;
    const Subspace& subspace(const std::string& name) const;
};

Fixture parse_fixture(const nlohmann::json& doc);
Fixture load_fixture(const std::string& path);

}  // namespace dgla

#pragma once

#include <map>
#include <string>
#include <vector>

#include "nicety/constructions.hpp"
#include "nicety/map_io.hpp"

namespace nicety {

enum class Provenance { asserted, trivial, derived };

std::string provenance_name(Provenance p);

struct FactResult {
    std::string label;
    Provenance provenance;
    bool pass;
    bool informational = false; // reported, never asserted
    std::string detail;
};

/// A named map bundled with auxiliary maps, matrices and frozen expected
/// renderings; the expected facts themselves are recomputed from scratch by
/// run_fixture.
struct Fixture {
    std::string name;
    std::string summary;
    std::vector<std::string> var_names;
    PolyMap map;
    std::map<std::string, PolyMap> aux_maps;
    std::map<std::string, std::vector<std::string>> aux_names;
    std::map<std::string, RatMatrix> aux_matrices;
    std::map<std::string, std::string> frozen_texts;
};

const std::vector<std::string>& list_fixtures();

/// Throws UnknownFixtureError for unknown names.
const Fixture& get_fixture(const std::string& name);

/// Re-verifies every expected fact of the fixture with the engine modules.
std::vector<FactResult> run_fixture(const std::string& name, const Budgets& budgets = {});

/// Writes the fixture's maps and matrices under dir using the documented
/// layout (<name>.map, <name>.<aux>.map, <name>.<aux>.json).  Returns the
/// relative file names written.
std::vector<std::string> write_fixture_files(const std::string& name, const std::string& dir);

} // namespace nicety

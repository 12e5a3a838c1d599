#pragma once

// Text formats: instance ("REDIST 1"), districting ("DIST 1") and the layout
// sidecar ("LAYOUT 1") that carries town provenance for reduced instances.
// Every rational is written exactly as p/q.

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "redist/params.hpp"
#include "redist/populate.hpp"
#include "redist/towns.hpp"
#include "redist/verify.hpp"

namespace redist {

struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Writes the instance. With prm the full params line is written, otherwise
/// only gamma and d.
void write_instance(std::ostream& os, const RedistrictingInstance& inst, const ReductionParams* prm = nullptr);
/// Reads an instance; town lines are skipped. Throws FormatError with the
/// line number on malformed input or duplicate/missing voter ids.
RedistrictingInstance read_instance(std::istream& is);

void write_districting(std::ostream& os, const Districting& dist);
Districting read_districting(std::istream& is);

void write_layout(std::ostream& os, const TownLayout& layout);
TownLayout read_layout(std::istream& is);

/// Fills inst.town_of by matching voter locations to town locations. Throws
/// FormatError when a location holds no town or more than one.
void attach_provenance(RedistrictingInstance& inst, const TownLayout& layout);

/// Reads/writes a whole file; errors name the path.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace redist

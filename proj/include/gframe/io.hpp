#pragma once

#include <memory>
#include <string>

#include "gframe/affine.hpp"
#include "gframe/representation.hpp"

namespace gframe {

/// Group file: {"order": n, "product": [[...]], "labels": [...]} with
/// labels optional.  Malformed files throw StructuralError.
GroupTable load_group(const std::string& path);

/// A representation together with the group it lives over (loaded inline
/// or from a referenced file, resolved relative to the rep file).
struct RepBundle {
    std::shared_ptr<GroupTable> group;
    UnitaryRep rep;
};

/// Rep file: {"group": <path or inline object>, "dim": d, "matrices":
/// [...]} with complex entries written as numbers or [re, im] pairs.
RepBundle load_rep(const std::string& path);

/// Vector file: a JSON array of complex entries, or {"values": [...]}.
Vec load_vector(const std::string& path);

void save_vector(const std::string& path, const Vec& v);

/// Signal files: CSV with a "# grid_start=... grid_step=..." header and
/// one "re" or "re,im" line per sample, or JSON with the same fields.
SampledSignal load_signal(const std::string& path);

/// Coefficient table as CSV rows "j,k,a,b,re,im".
void write_coefficients(const std::string& path, const AffineGrid& grid, const Mat& coeffs);

}  // namespace gframe

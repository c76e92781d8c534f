#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hwp/completion.hpp"
#include "hwp/cycles.hpp"
#include "hwp/params.hpp"

namespace hwp {

inline constexpr const char* kCertificateSchemaVersion = "hwp-cert/1";

struct CertificateMaps {
    std::map<int, int> f;
    std::map<int, int> phi;
    std::map<int, int> F;
    std::map<int, int> G;
};

struct VerificationSummary {
    std::string level;  // "base" or "full"
    bool ok = false;
    long long checked_differences = 0;
    long long checked_edges = 0;
};

// The exchange format: base cycles in canonical residue form, cycles listed
// canonically so serialization is stable.
struct Certificate {
    std::string schema_version = kCertificateSchemaVersion;
    Params params;
    std::vector<LiftedCycle> short_base_cycles;
    std::vector<LiftedCycle> long_base_cycles;
    std::optional<CertificateMaps> maps;
    std::optional<VerificationSummary> verification;

    bool operator==(const Certificate&) const;
};

Certificate make_certificate(const BaseCycleSet& base, bool emit_maps);
BaseCycleSet to_base_cycle_set(const Certificate& cert);

enum class CertFormat { Json, Text };

std::string serialize(const Certificate& cert, CertFormat format);
// Auto-detects the format.  Throws ParseError on malformed input and
// SchemaError on version mismatch, unknown fields, or out-of-range residues.
Certificate deserialize(const std::string& text);

}  // namespace hwp
